// Copyright 2026 The ncycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ncycle: command-line front end. JSON reports go to stdout, diagnostics
// (elapsed time, errors) to stderr.
//
// Exit codes: 0 success, 1 check came out false, 2 bad arguments,
// 3 field-size cap exceeded.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncycle/constructions.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/json_io.hpp"
#include "ncycle/oracle.hpp"
#include "ncycle/parallel.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/poly.hpp"
#include "ncycle/walsh.hpp"

namespace {

using namespace ncycle;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitCap = 3;

std::uint64_t field_cap() {
  if (const char* env = std::getenv("NCYC_CAP")) {
    try {
      return to_u64(parse_bigexp(env));
    } catch (const Error&) {
      throw Error(ErrorCode::kBadParams, std::string("NCYC_CAP is not a number: ") + env);
    }
  }
  return kDefaultCap;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// --p/--n/--modulus, shared by the subcommands that act on one field.
struct FieldArgs {
  std::uint32_t p = 2;
  unsigned n = 1;
  std::string modulus;
  std::string q_var;

  void add(CLI::App* app) {
    app->add_option("--p", p, "Characteristic")->required();
    app->add_option("--n", n, "Extension degree")->required();
    app->add_option("--modulus", modulus, "Monic modulus coefficients, constant term first (CSV)");
    app->add_option("--q", q_var, "Value of q inside exponent expressions (default p^n)");
  }

  FieldPtr make() const {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!modulus.empty()) {
      mod.emplace();
      std::stringstream ss(modulus);
      std::string item;
      while (std::getline(ss, item, ',')) mod->push_back(static_cast<std::uint32_t>(to_u64(parse_bigexp(item))));
    }
    return make_field(p, n, mod, FieldOptions{field_cap()});
  }

  ExprVars vars(const FieldCtx& field) const {
    ExprVars v{{"p", BigExp(field.p())}, {"n", BigExp(field.n())}, {"q", BigExp(field.order())}};
    if (!q_var.empty()) v["q"] = parse_bigexp(q_var);
    return v;
  }
};

// GF(q^m) for the families, with q also bound in expressions.
struct ExtArgs {
  std::uint64_t q = 0;
  unsigned m = 1;

  void add(CLI::App* app, bool with_m) {
    app->add_option("--q", q, "Base field order q")->required();
    if (with_m) app->add_option("--m", m, "Extension degree m of GF(q^m)")->required();
  }

  FieldPtr make(unsigned degree) const { return extension_field(q, degree, FieldOptions{field_cap()}); }

  unsigned sub_degree() const { return prime_power(q).k; }

  ExprVars vars() const { return ExprVars{{"q", BigExp(q)}}; }
};

int emit_instance(const FamilyInstance& inst, bool verify) {
  if (!verify) {
    emit(to_json(inst));
    return kExitOk;
  }
  const CrossCheckReport report = cross_check(inst);
  Json out;
  out["instance"] = to_json(inst);
  out["cross_check"] = to_json(*inst.field, report);
  emit(out);
  const bool ok = report.agreement == Agreement::kAgree && report.criterion.holds &&
                  report.oracle.is_ncycle_at.at(inst.claimed_n);
  return ok ? kExitOk : kExitFalse;
}

void add_construct(CLI::App& root, std::function<int()>& action) {
  auto* construct = root.add_subcommand("construct", "Build a family instance");
  construct->require_subcommand(1);
  static bool verify = false;
  construct->add_flag("--verify", verify, "Cross-check against the exhaustive oracle");

  {
    auto* c = construct->add_subcommand("xh_lambda", "x h(lambda(x)) over GF(q^m)");
    static ExtArgs ext;
    static std::string variant = "involution", lambda = "lambda1", theta, h;
    static unsigned n = 2;
    static std::int64_t a = 0, b = 0;
    static std::uint64_t cc = 0;
    ext.add(c, true);
    c->add_option("--variant", variant)->check(CLI::IsMember({"theta", "involution", "abc", "custom"}));
    c->add_option("--lambda", lambda)->check(CLI::IsMember({"lambda1", "lambda2"}));
    c->add_option("--cycle-n", n, "Cycle length n (theta, custom)");
    c->add_option("--theta", theta, "Primitive n-th root of unity in GF(q)");
    c->add_option("--a", a);
    c->add_option("--b", b);
    c->add_option("--c", cc);
    c->add_option("--h", h, "h as a polynomial (custom)");
    c->callback([&action] {
      action = [] {
        FieldPtr field = ext.make(ext.m);
        XhLambdaParams params;
        params.variant = variant == "theta"        ? XhVariant::kTheta
                         : variant == "involution" ? XhVariant::kInvolution
                         : variant == "abc"        ? XhVariant::kAbc
                                                   : XhVariant::kCustom;
        params.lambda = parse_lambda_variant(lambda);
        params.sub_degree = ext.sub_degree();
        params.n = n;
        if (!theta.empty()) params.theta = field->parse_element(theta, ext.vars());
        params.a = a;
        params.b = b;
        params.c = cc;
        if (!h.empty()) params.h = SparsePoly::parse(field, h, ext.vars());
        return emit_instance(build_xh_lambda(field, params), verify);
      };
    });
  }
  {
    auto* c = construct->add_subcommand("additive", "phi(x) + g(psi(x)) over GF(q^m)");
    static ExtArgs ext;
    static std::string variant = "trace_g1", H, psi, s = "1", cval, g;
    ext.add(c, true);
    c->add_option("--variant", variant)->check(CLI::IsMember({"trace_g1", "power_g2", "c_trace_q2", "xq_g_trace"}));
    c->add_option("--H", H, "H as a polynomial");
    c->add_option("--psi", psi, "q-polynomial psi (default x^q - x)");
    c->add_option("--s", s, "Exponent s");
    c->add_option("--c", cval, "Element c with c + c^q = 0");
    c->add_option("--g", g, "g as a polynomial (xq_g_trace)");
    c->callback([&action] {
      action = [] {
        FieldPtr field = ext.make(ext.m);
        AdditiveParams params;
        params.variant = variant == "trace_g1"   ? AdditiveVariant::kTraceG1
                         : variant == "power_g2" ? AdditiveVariant::kPowerG2
                         : variant == "c_trace_q2" ? AdditiveVariant::kCTraceQ2
                                                   : AdditiveVariant::kXqGTrace;
        params.sub_degree = ext.sub_degree();
        const ExprVars vars = ext.vars();
        if (!H.empty()) params.H = SparsePoly::parse(field, H, vars);
        if (!psi.empty()) params.psi = SparsePoly::parse(field, psi, vars);
        if (!g.empty()) params.g = SparsePoly::parse(field, g, vars);
        params.s = parse_bigexp(s, vars);
        if (!cval.empty()) params.c = field->parse_element(cval, vars);
        return emit_instance(build_additive(field, params), verify);
      };
    });
  }
  {
    auto* c = construct->add_subcommand("shift", "x + g(x^(q^i) - x + delta) over GF(q^m)");
    static ExtArgs ext;
    static std::string variant = "power_g2", H, s = "1", delta = "0";
    static unsigned i = 1;
    ext.add(c, true);
    c->add_option("--variant", variant)->check(CLI::IsMember({"trace_g1", "power_g2"}));
    c->add_option("--i", i);
    c->add_option("--delta", delta);
    c->add_option("--H", H, "H as a polynomial (default x)");
    c->add_option("--s", s, "Exponent s");
    c->callback([&action] {
      action = [] {
        FieldPtr field = ext.make(ext.m);
        const ExprVars vars = ext.vars();
        ShiftFamilyParams params;
        params.variant = variant == "trace_g1" ? ShiftVariant::kTraceG1 : ShiftVariant::kPowerG2;
        params.sub_degree = ext.sub_degree();
        params.i = i;
        params.delta = field->parse_element(delta, vars);
        if (!H.empty()) params.H = SparsePoly::parse(field, H, vars);
        params.s = parse_bigexp(s, vars);
        return emit_instance(build_shift(field, params), verify);
      };
    });
  }
  {
    auto* c = construct->add_subcommand("rs_2to3m", "x(1 + x^(k(q^2+q+1)) + x^(2k(q^2+q+1))) over GF(q^3)");
    static std::uint64_t q = 0, k = 0;
    c->add_option("--q", q)->required();
    c->add_option("--k", k)->required();
    c->callback([&action] {
      action = [] { return emit_instance(build_rs_2to3m(q, k, FieldOptions{field_cap()}), verify); };
    });
  }
  {
    auto* c = construct->add_subcommand("xq_h_alpha", "x^q h(x^(q-1)) over GF(q^3)");
    static ExtArgs ext;
    static std::string alpha = "1";
    ext.add(c, false);
    c->add_option("--alpha", alpha, "Cube root of unity in GF(q)");
    c->callback([&action] {
      action = [] {
        FieldPtr field = ext.make(3);
        return emit_instance(build_xq_h_alpha(field, field->parse_element(alpha, ext.vars())), verify);
      };
    });
  }
  {
    auto* c = construct->add_subcommand("jieguo", "x h(x^(q-1)) over GF(q^2), h = x^m + x^(mq-2tq) + x^t");
    static std::uint64_t q = 0, t = 0, m = 0;
    c->add_option("--q", q)->required();
    c->add_option("--t", t)->required();
    c->add_option("--m", m)->required();
    c->callback([&action] {
      action = [] { return emit_instance(build_jieguo(q, t, m, FieldOptions{field_cap()}), verify); };
    });
  }
  {
    auto* c = construct->add_subcommand("trace_theta", "x + theta Tr(x^((q^2+q)/2)) over GF(q^3)");
    static ExtArgs ext;
    static std::string theta;
    ext.add(c, false);
    c->add_option("--theta", theta, "theta in GF(q), theta^3 = 1, theta != 1")->required();
    c->callback([&action] {
      action = [] {
        FieldPtr field = ext.make(3);
        return emit_instance(build_trace_theta(field, field->parse_element(theta, ext.vars())), verify);
      };
    });
  }
  // --verify may also follow the family name.
  for (auto* family : construct->get_subcommands({})) family->fallthrough();
}

void add_field_cmds(CLI::App& root, std::function<int()>& action) {
  {
    auto* c = root.add_subcommand("field", "Print the field context");
    static FieldArgs fa;
    fa.add(c);
    c->callback([&action] {
      action = [] {
        emit(to_json(*fa.make()));
        return kExitOk;
      };
    });
  }
  {
    auto* c = root.add_subcommand("verify", "Exhaustive n-cycle verdict for a polynomial");
    static FieldArgs fa;
    static std::string poly;
    static std::vector<std::uint64_t> cycles;
    fa.add(c);
    c->add_option("--poly", poly)->required();
    c->add_option("--cycle", cycles, "n (repeatable)")->required();
    c->callback([&action] {
      action = [] {
        FieldPtr field = fa.make();
        const SparsePoly f = SparsePoly::parse(field, poly, fa.vars(*field));
        const OracleVerdict v = exhaustive_verdict(field, f.as_map(), cycles, field_cap());
        emit(to_json(v));
        for (const auto& [n, ok] : v.is_ncycle_at)
          if (!ok) return kExitFalse;
        return kExitOk;
      };
    });
  }
  {
    auto* c = root.add_subcommand("order", "Cycle structure of a polynomial map");
    static FieldArgs fa;
    static std::string poly;
    static bool csv = false;
    fa.add(c);
    c->add_option("--poly", poly)->required();
    c->add_flag("--csv", csv, "Flatten cycle_type as CSV");
    c->callback([&action] {
      action = [] {
        FieldPtr field = fa.make();
        const SparsePoly f = SparsePoly::parse(field, poly, fa.vars(*field));
        const PermResult r = perm_from_poly(f);
        CycleReport report;
        if (const auto* perm = std::get_if<PermMap>(&r)) {
          report = cycle_structure(*perm);
        } else {
          report.bijective = false;
        }
        if (csv) {
          std::cout << cycle_report_csv(report);
        } else {
          emit(to_json(report));
        }
        return report.bijective ? kExitOk : kExitFalse;
      };
    });
  }
  {
    auto* c = root.add_subcommand("walsh", "Walsh spectrum symmetry test");
    static FieldArgs fa;
    static std::string poly;
    static bool check = false;
    fa.add(c);
    c->add_option("--poly", poly)->required();
    c->add_flag("--check-involution", check, "Test W(u,v) = W(v,u) for all u, v")->required();
    c->callback([&action] {
      action = [] {
        FieldPtr field = fa.make();
        const SparsePoly f = SparsePoly::parse(field, poly, fa.vars(*field));
        const PermMap perm = require_perm(field, f.as_map());
        const WalshSymmetry sym = walsh_involution_test(perm);
        Json out = to_json(*field, sym);
        out["involution"] = is_ncycle(perm, 2);
        emit(out);
        return sym.symmetric ? kExitOk : kExitFalse;
      };
    });
  }
}

void add_criterion(CLI::App& root, std::function<int()>& action) {
  auto* crit = root.add_subcommand("criterion", "Evaluate one criterion");
  crit->require_subcommand(1);
  static FieldArgs fa;

  auto finish = [](const FieldCtx& field, const CriterionVerdict& v) {
    emit(to_json(field, v));
    return v.holds ? kExitOk : kExitFalse;
  };

  {
    auto* c = crit->add_subcommand("monomial", "x^d is an n-cycle iff d^n = 1 mod q - 1");
    static std::uint64_t q = 0, n = 1;
    static std::string d;
    c->add_option("--q", q, "Field order")->required();
    c->add_option("--d", d)->required();
    c->add_option("--cycle", n)->required();
    c->callback([&action] {
      action = [] {
        const bool holds = monomial_ncycle(parse_bigexp(d, {{"q", BigExp(q)}}), q - 1, n);
        Json out;
        out["holds"] = holds;
        emit(out);
        return holds ? kExitOk : kExitFalse;
      };
    });
  }
  {
    auto* c = crit->add_subcommand("frobenius_twist", "f(x)^(q^i) for an n-cycle f over GF(q)");
    static std::string poly;
    static unsigned sub = 1, i = 1;
    static std::uint64_t n = 1;
    fa.add(c);
    c->add_option("--poly", poly)->required();
    c->add_option("--sub-degree", sub)->required();
    c->add_option("--i", i)->required();
    c->add_option("--cycle", n)->required();
    c->callback([&action] {
      action = [] {
        FieldPtr field = fa.make();
        const bool holds = frobenius_twist_ncycle(SparsePoly::parse(field, poly, fa.vars(*field)), sub, i, n);
        Json out;
        out["holds"] = holds;
        emit(out);
        return holds ? kExitOk : kExitFalse;
      };
    });
  }
  {
    auto* c = crit->add_subcommand("xh_lambda", "x h(lambda(x)) product criterion");
    static std::string h, lambda = "lambda1";
    static unsigned sub = 1, lambda_n = 1;
    static std::uint64_t n = 1;
    fa.add(c);
    c->add_option("--h", h)->required();
    c->add_option("--lambda", lambda)->check(CLI::IsMember({"lambda1", "lambda2"}));
    c->add_option("--lambda-n", lambda_n, "Degree of lambda (scaling exponent)")->required();
    c->add_option("--sub-degree", sub)->required();
    c->add_option("--cycle", n)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const SparsePoly hp = SparsePoly::parse(field, h, fa.vars(*field));
        const LambdaSpec spec = LambdaSpec::make(*field, parse_lambda_variant(lambda), lambda_n, sub);
        auto k = [field](Elem a) { return field->pow(a, std::uint64_t{lambda_n}); };
        return finish(*field, xh_lambda_criterion(field, hp.as_map(), lambda_map(field, spec), k, n));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("additive", "phi(x) + g(psi(x)) criterion");
    static std::string phi, psi, g;
    static unsigned sub = 1;
    static std::uint64_t n = 1;
    fa.add(c);
    c->add_option("--phi", phi)->required();
    c->add_option("--psi", psi)->required();
    c->add_option("--g", g)->required();
    c->add_option("--sub-degree", sub)->required();
    c->add_option("--cycle", n)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        return finish(*field, additive_criterion(SparsePoly::parse(field, phi, vars), SparsePoly::parse(field, psi, vars),
                                                 SparsePoly::parse(field, g, vars).as_map(), n, sub));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("shift", "g(x^(q^i) - x + delta) + x criterion");
    static std::string g, delta = "0";
    static unsigned sub = 1, i = 1;
    static std::uint64_t n = 1;
    fa.add(c);
    c->add_option("--g", g)->required();
    c->add_option("--i", i)->required();
    c->add_option("--delta", delta);
    c->add_option("--sub-degree", sub)->required();
    c->add_option("--cycle", n)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        const ShiftParams sp = ShiftParams::make(*field, i, field->parse_element(delta, vars), sub);
        return finish(*field, shift_criterion(field, SparsePoly::parse(field, g, vars).as_map(), sp, n));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("rs_triple", "x^r h(x^s) triple-cycle criterion");
    static std::string h, r = "1", s = "1";
    fa.add(c);
    c->add_option("--h", h)->required();
    c->add_option("--r", r)->required();
    c->add_option("--s", s)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        const RsParams p = RsParams::make(*field, to_u64(parse_bigexp(r, vars)), to_u64(parse_bigexp(s, vars)));
        return finish(*field, rs_triple_criterion(field, SparsePoly::parse(field, h, vars).as_map(), p));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("rs_single", "x^r h(x^s) with h(y)^s = a y^(v-r)");
    static std::string h, r = "1", s = "1", a = "1", v = "1";
    fa.add(c);
    c->add_option("--h", h)->required();
    c->add_option("--r", r)->required();
    c->add_option("--s", s)->required();
    c->add_option("--a", a);
    c->add_option("--v", v)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        const RsParams p = RsParams::make(*field, to_u64(parse_bigexp(r, vars)), to_u64(parse_bigexp(s, vars)));
        return finish(*field, rs_single_criterion(field, SparsePoly::parse(field, h, vars).as_map(), p,
                                                  field->parse_element(a, vars), parse_bigexp(v, vars)));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("stated_inverse", "f(f(x)) equals the given inverse and f o inverse = id");
    static std::string poly, inverse;
    fa.add(c);
    c->add_option("--poly", poly)->required();
    c->add_option("--inverse", inverse)->required();
    c->callback([&action, finish] {
      action = [finish] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        return finish(*field, stated_inverse_criterion(field, SparsePoly::parse(field, poly, vars).as_map(),
                                                       SparsePoly::parse(field, inverse, vars).as_map()));
      };
    });
  }
  {
    auto* c = crit->add_subcommand("agw", "Commuting square lambda_bar o f = g o lambda");
    static std::string f, lambda, lambda_bar, g;
    fa.add(c);
    c->add_option("--f", f)->required();
    c->add_option("--lambda", lambda)->required();
    c->add_option("--lambda-bar", lambda_bar)->required();
    c->add_option("--g", g)->required();
    c->callback([&action] {
      action = [] {
        FieldPtr field = fa.make();
        const ExprVars vars = fa.vars(*field);
        auto parse = [&](const std::string& t) { return SparsePoly::parse(field, t, vars).as_map(); };
        const AgwReport rep = agw_commute_check(field, parse(f), parse(lambda), parse(lambda_bar), parse(g));
        emit(to_json(*field, rep));
        return rep.holds ? kExitOk : kExitFalse;
      };
    });
  }
}

void add_search_and_fuzz(CLI::App& root, std::function<int()>& action) {
  auto* search = root.add_subcommand("search", "Parameter searches");
  search->require_subcommand(1);
  {
    auto* c = search->add_subcommand("jieguo", "All (t, m) solving the congruences mod q + 1");
    static std::uint64_t q = 0;
    c->add_option("--q", q)->required();
    c->callback([&action] {
      action = [] {
        Json out = Json::array();
        for (const auto& [t, m] : solve_jieguo_congruences(q)) out.push_back({{"t", t}, {"m", m}});
        emit(out);
        return kExitOk;
      };
    });
  }
  {
    auto* c = search->add_subcommand("k2to3m", "All k in [1, 7(q-1)] for the q = 2^(3j) family");
    static std::uint64_t q = 0;
    c->add_option("--q", q)->required();
    c->callback([&action] {
      action = [] {
        emit(Json(search_k_2to3m(q)));
        return kExitOk;
      };
    });
  }
  {
    auto* c = root.add_subcommand("fuzz", "Seeded criterion/oracle cross-checks for one family");
    static std::string family;
    static std::uint64_t seed = 0, trials = 10;
    c->add_option("family", family)->required()->check(CLI::IsMember(fuzz_families()));
    c->add_option("--seed", seed);
    c->add_option("--trials", trials);
    c->callback([&action] {
      action = [] {
        const FuzzSummary s = random_family_fuzz(family, seed, trials);
        for (const auto& line : s.lines) std::cout << line.dump() << '\n';
        std::cout << to_json(s).dump() << '\n';
        return s.failures() == 0 ? kExitOk : kExitFalse;
      };
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-cycle permutations over finite fields"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  std::function<int()> action;
  add_field_cmds(app, action);
  add_construct(app, action);
  add_criterion(app, action);
  add_search_and_fuzz(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitBadArgs;
  }
  set_worker_count(threads);
  const auto start = std::chrono::steady_clock::now();
  int code;
  try {
    code = action ? action() : kExitBadArgs;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = e.code() == ErrorCode::kCapExceeded ? kExitCap : kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitBadArgs;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed: " << elapsed << " s\n";
  return code;
}
