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

#include "ncycle/constructions.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ncycle/error.hpp"
#include "ncycle/parallel.hpp"
#include "ncycle/permutation.hpp"

namespace ncycle {
namespace {

using Table = std::shared_ptr<const std::vector<Elem>>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadParams, what); }

Table make_table(const FieldCtx& field, const FieldMap& f) {
  return std::make_shared<const std::vector<Elem>>(tabulate(field, f));
}

FieldMap table_map(Table t) {
  return [t = std::move(t)](Elem x) { return (*t)[x]; };
}

unsigned sub_degree_of(const FieldCtx& field, unsigned sub_degree) {
  if (sub_degree == 0 || field.n() % sub_degree != 0)
    bad("sub_degree " + std::to_string(sub_degree) + " does not divide " + std::to_string(field.n()));
  return field.n() / sub_degree;
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

void flag_identity(FamilyInstance& inst) {
  const std::vector<Elem> t = tabulate(*inst.field, inst.f);
  for (Elem x = 0; x < t.size(); ++x)
    if (t[x] != x) return;
  inst.notes.push_back("degenerate: f is the identity map (order 1)");
}

// Exponents of inner^e for large e are reduced on the fly; gives up once the
// intermediate result exceeds `max_terms`.
std::optional<SparsePoly> power_bounded(const SparsePoly& base, BigExp e, std::size_t max_terms) {
  const FieldPtr& field = base.field();
  if (e == 0) return SparsePoly::constant(field, 1);
  e = ((e - 1) % field->order_minus_1()) + 1;
  SparsePoly result = SparsePoly::constant(field, 1);
  SparsePoly sq = base;
  bool first = true;
  while (e > 0) {
    if ((e & 1) != 0) {
      result = first ? sq : reduce_exponents(result * sq);
      first = false;
      if (result.terms().size() > max_terms) return std::nullopt;
    }
    e >>= 1;
    if (e > 0) {
      sq = reduce_exponents(sq * sq);
      if (sq.terms().size() > max_terms) return std::nullopt;
    }
  }
  return result;
}

std::optional<SparsePoly> compose_bounded(const SparsePoly& outer, const SparsePoly& inner,
                                          std::size_t max_terms = 512) {
  SparsePoly acc = SparsePoly::zero(outer.field());
  for (const Term& t : outer.terms()) {
    auto power = power_bounded(inner, t.exp, max_terms);
    if (!power) return std::nullopt;
    acc = acc + power->scaled(t.coeff);
    if (acc.terms().size() > max_terms) return std::nullopt;
  }
  return acc;
}

}  // namespace

std::string to_string(LambdaVariant variant) {
  return variant == LambdaVariant::kLambda1 ? "lambda1" : "lambda2";
}

LambdaVariant parse_lambda_variant(std::string_view text) {
  if (text == "lambda1" || text == "1") return LambdaVariant::kLambda1;
  if (text == "lambda2" || text == "2") return LambdaVariant::kLambda2;
  throw Error(ErrorCode::kInvalidSpec, "unknown lambda variant '" + std::string(text) + "'");
}

LambdaSpec LambdaSpec::make(const FieldCtx& field, LambdaVariant variant, unsigned n, unsigned sub_degree) {
  if (sub_degree == 0 || field.n() % sub_degree != 0)
    throw Error(ErrorCode::kInvalidSpec, "sub_degree must divide the field degree");
  if (n == 0) throw Error(ErrorCode::kInvalidSpec, "n must be >= 1");
  const unsigned m = field.n() / sub_degree;
  if (variant == LambdaVariant::kLambda2 && n > m)
    throw Error(ErrorCode::kInvalidSpec,
                "lambda2 needs n <= m (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  return LambdaSpec{variant, n, sub_degree};
}

Elem eval_lambda(const FieldCtx& field, const LambdaSpec& spec, Elem x) {
  if (spec.variant == LambdaVariant::kLambda1)
    return field.trace(field.pow(x, std::uint64_t{spec.n}), spec.sub_degree);
  const unsigned m = field.n() / spec.sub_degree;
  // e[j] = j-th elementary symmetric polynomial of the conjugates seen so far.
  std::vector<Elem> e(spec.n + 1, 0);
  e[0] = 1;
  Elem conj = x;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = std::min(i + 1, spec.n); j >= 1; --j) e[j] = field.add(e[j], field.mul(e[j - 1], conj));
    conj = field.frobenius(conj, spec.sub_degree, 1);
  }
  return e[spec.n];
}

FieldElement eval_lambda(const FieldCtx& field, const LambdaSpec& spec, const FieldElement& x) {
  field.check(x);
  return field.element(eval_lambda(field, spec, x.index()));
}

FieldMap lambda_map(FieldPtr field, LambdaSpec spec) {
  return [field = std::move(field), spec](Elem x) { return eval_lambda(*field, spec, x); };
}

PrimePower prime_power(std::uint64_t q) {
  if (q < 2) bad("q = " + std::to_string(q) + " is not a prime power");
  const auto factors = factorize(q);
  if (factors.size() != 1) bad("q = " + std::to_string(q) + " is not a prime power");
  return PrimePower{static_cast<std::uint32_t>(factors[0].first), factors[0].second};
}

FieldPtr extension_field(std::uint64_t q, unsigned m, FieldOptions options) {
  const PrimePower pp = prime_power(q);
  if (m == 0) bad("extension degree must be >= 1");
  return FieldCtx::make(pp.p, pp.k * m, std::nullopt, options);
}

SparsePoly reduce_exponents(const SparsePoly& poly) {
  const FieldPtr& field = poly.field();
  const BigExp qm1 = field->order_minus_1();
  std::vector<Term> terms;
  terms.reserve(poly.terms().size());
  for (const Term& t : poly.terms())
    terms.push_back(Term{t.coeff, t.exp == 0 ? BigExp(0) : BigExp(((t.exp - 1) % qm1) + 1)});
  return SparsePoly(field, std::move(terms));
}

std::vector<Elem> cube_roots_of_unity(const FieldCtx& field, unsigned sub_degree) {
  std::vector<Elem> out;
  for (Elem y : field.subfield_members(sub_degree))
    if (y != 0 && field.pow(y, std::uint64_t{3}) == 1) out.push_back(y);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(XhVariant variant) {
  switch (variant) {
    case XhVariant::kTheta: return "theta";
    case XhVariant::kInvolution: return "involution";
    case XhVariant::kAbc: return "abc";
    case XhVariant::kCustom: return "custom";
  }
  return "?";
}

FamilyInstance assemble_xh_lambda(const FieldPtr& field, const LambdaSpec& spec, const SparsePoly& h,
                                  std::uint64_t n, std::string family, Params params) {
  FamilyInstance inst;
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.field = field;
  const FieldMap h_map = table_map(make_table(*field, h.as_map()));
  const FieldMap lam = table_map(make_table(*field, lambda_map(field, spec)));
  inst.f = [field, h_map, lam](Elem x) { return field->mul(x, h_map(lam(x))); };
  inst.formula = "x*h(lambda(x)) with h(x) = " + h.to_string() + ", lambda(x) = " +
                 (spec.variant == LambdaVariant::kLambda1
                      ? "Tr_{q^m/q}(x^" + std::to_string(spec.n) + ")"
                      : "e_" + std::to_string(spec.n) + "(x, x^q, ..., x^(q^(m-1)))") +
                 ", q = " + std::to_string(field->subfield_order(spec.sub_degree));
  inst.claimed_n = n;
  inst.criterion_name = "xh_lambda";
  inst.criterion = [field, h_map, lam, spec, n] {
    auto k = [field, d = spec.n](Elem a) { return field->pow(a, std::uint64_t{d}); };
    return xh_lambda_criterion(field, h_map, lam, k, n);
  };
  return inst;
}

FamilyInstance build_xh_lambda(const FieldPtr& field_ptr, const XhLambdaParams& params) {
  const FieldCtx& field = *field_ptr;
  const unsigned sub = params.sub_degree;
  const unsigned m = sub_degree_of(field, sub);
  const std::uint64_t q = field.subfield_order(sub);
  const std::int64_t p = field.p();
  unsigned n = params.n;
  if (params.variant == XhVariant::kInvolution || params.variant == XhVariant::kAbc) n = 2;
  const LambdaSpec spec = LambdaSpec::make(field, params.lambda, n, sub);

  Params out;
  out["variant"] = to_string(params.variant);
  out["lambda"] = to_string(params.lambda);
  out["q"] = q;
  out["m"] = m;
  out["n"] = n;

  const Elem minus_one = field.neg(1);
  std::optional<SparsePoly> h;
  switch (params.variant) {
    case XhVariant::kTheta: {
      if ((q - 1) % n != 0) bad("n = " + std::to_string(n) + " does not divide q - 1");
      const Elem t = params.theta;
      if (t >= field.order() || !field.in_subfield(t, sub)) bad("theta must lie in GF(q)");
      if (t == 0 || field.pow(t, std::uint64_t{n}) != 1) bad("theta^n != 1");
      for (const auto& [r, e] : factorize(n)) {
        (void)e;
        if (field.pow(t, std::uint64_t{n / r}) == 1) bad("theta is not a primitive n-th root of unity");
      }
      h = SparsePoly(field_ptr, {{1, 0}, {t, BigExp((q - 1) / n)}, {minus_one, BigExp(q - 1)}});
      out["theta"] = field.format_element(t);
      break;
    }
    case XhVariant::kInvolution: {
      if (p == 2) bad("q must be odd");
      h = SparsePoly(field_ptr, {{1, 0}, {field.neg(field.from_int(2)), BigExp(q - 1)}});
      break;
    }
    case XhVariant::kAbc: {
      if (p == 2) bad("q must be odd");
      const std::int64_t a = mod_p(params.a, p), b = mod_p(params.b, p);
      const std::uint64_t c = params.c;
      if (c < 1 || c + 2 > q) bad("c must lie in [1, q - 2]");
      if ((a * a + b * b) % p != 0) bad("a^2 + b^2 != 0 (mod p)");
      if ((4 * c) % (q - 1) != 0) bad("4c != 0 (mod q - 1)");
      if ((2 * a * b) % p != 1)
        bad("2ab = " + std::to_string((2 * a * b) % p) + " != 1 (mod p): h(y)^2 = 2ab for y != 0");
      h = SparsePoly(field_ptr, {{1, 0},
                                 {field.from_int(static_cast<std::uint64_t>(a)), BigExp(c)},
                                 {field.from_int(static_cast<std::uint64_t>(b)), BigExp(q - c - 1)},
                                 {minus_one, BigExp(q - 1)}});
      out["a"] = a;
      out["b"] = b;
      out["c"] = c;
      break;
    }
    case XhVariant::kCustom: {
      if (!params.h) bad("custom variant needs h");
      if (params.h->field()->id() != field.id()) throw Error(ErrorCode::kCtxMismatch, "h over another field");
      if (!params.h->coefficients_in_subfield(sub)) bad("h must have coefficients in GF(q)");
      h = *params.h;
      out["h"] = h->to_string();
      break;
    }
  }
  for (Elem y : field.subfield_members(sub)) {
    const Elem v = field.pow((*h)(y), std::uint64_t{n});
    if (v != 1)
      throw Error(ErrorCode::kHValueNotRootOfUnity, "h(y)^n = " + field.format_element(v) +
                                                        " != 1 at y = " + field.format_element(y));
  }
  FamilyInstance inst = assemble_xh_lambda(field_ptr, spec, *h, n, "xh_lambda." + to_string(params.variant),
                                           std::move(out));
  flag_identity(inst);
  return inst;
}

// ---------------------------------------------------------------------------

std::string to_string(AdditiveVariant variant) {
  switch (variant) {
    case AdditiveVariant::kTraceG1: return "trace_g1";
    case AdditiveVariant::kPowerG2: return "power_g2";
    case AdditiveVariant::kCTraceQ2: return "c_trace_q2";
    case AdditiveVariant::kXqGTrace: return "xq_g_trace";
  }
  return "?";
}

FamilyInstance assemble_additive(const SparsePoly& phi, const SparsePoly& psi, FieldMap g,
                                 const std::string& g_text, std::uint64_t n, unsigned sub_degree,
                                 std::string family, Params params) {
  FamilyInstance inst;
  const FieldPtr& field = phi.field();
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.field = field;
  const FieldMap phi_map = table_map(make_table(*field, phi.as_map()));
  const FieldMap psi_map = table_map(make_table(*field, psi.as_map()));
  const FieldMap g_map = table_map(make_table(*field, g));
  inst.f = [field, phi_map, psi_map, g_map](Elem x) { return field->add(phi_map(x), g_map(psi_map(x))); };
  inst.formula = "phi(x) + g(psi(x)) with phi(x) = " + phi.to_string() + ", psi(x) = " + psi.to_string() +
                 ", g(x) = " + g_text;
  inst.claimed_n = n;
  inst.criterion_name = "additive";
  inst.criterion = [phi, psi, g_map, n, sub_degree] { return additive_criterion(phi, psi, g_map, n, sub_degree); };
  return inst;
}

FamilyInstance build_additive(const FieldPtr& field_ptr, const AdditiveParams& params) {
  const FieldCtx& field = *field_ptr;
  const unsigned sub = params.sub_degree;
  const unsigned m = sub_degree_of(field, sub);
  const std::uint64_t q = field.subfield_order(sub);
  const SparsePoly x = SparsePoly::x(field_ptr);
  const SparsePoly xq = SparsePoly::monomial(field_ptr, 1, q);

  Params out;
  out["variant"] = to_string(params.variant);
  out["q"] = q;
  out["m"] = m;

  SparsePoly phi = x;
  std::optional<SparsePoly> psi;
  FieldMap g;
  std::string g_text;
  std::optional<SparsePoly> g_poly;
  std::uint64_t n = field.p();

  auto psi_image = [&](const SparsePoly& ps) {
    std::vector<bool> hit(field.order(), false);
    for (Elem v = 0; v < field.order(); ++v) hit[ps(v)] = true;
    std::vector<Elem> img;
    for (Elem v = 0; v < field.order(); ++v)
      if (hit[v]) img.push_back(v);
    return img;
  };

  switch (params.variant) {
    case AdditiveVariant::kTraceG1:
    case AdditiveVariant::kPowerG2: {
      if (!params.H || params.H->is_zero()) bad("H must be a nonzero polynomial");
      const SparsePoly H = *params.H;
      psi = params.psi ? *params.psi : xq - x;
      if (!psi->is_linearized(sub)) bad("psi must be a q-polynomial");
      for (Elem y : field.subfield_members(sub))
        if ((*psi)(y) != 0) bad("psi(GF(q)) != {0} (at y = " + field.format_element(y) + ")");
      const std::vector<Elem> img = psi_image(*psi);
      if (params.variant == AdditiveVariant::kTraceG1) {
        g = [field_ptr, H, sub](Elem y) { return field_ptr->trace(H(y), sub); };
        g_text = "Tr_{q^m/q}(" + H.to_string() + ")";
        if (std::none_of(img.begin(), img.end(), [&](Elem y) { return g(y) != 0; }))
          bad("H(psi(F)) lies in ker(Tr)");
        g_poly = H.trace(sub);
      } else {
        const BigExp s = params.s;
        if (s <= 0) bad("s must be positive");
        if ((s * (q - 1)) % field.order_minus_1() != 0) bad("s(q - 1) != 0 (mod q^m - 1)");
        g = [field_ptr, H, s](Elem y) { return field_ptr->pow(H(y), s); };
        g_text = "(" + H.to_string() + ")^" + to_string(s);
        if (std::none_of(img.begin(), img.end(), [&](Elem y) { return H(y) != 0; }))
          bad("H(psi(F)) = {0}");
        g_poly = compose_bounded(SparsePoly::monomial(field_ptr, 1, s), H);
        out["s"] = to_string(s);
      }
      out["H"] = H.to_string();
      out["psi"] = psi->to_string();
      break;
    }
    case AdditiveVariant::kCTraceQ2: {
      if (m != 2) bad("c_trace_q2 needs m = 2");
      const Elem c = params.c;
      if (c == 0 || c >= field.order()) bad("c must be a nonzero element");
      if (field.add(c, field.frobenius(c, sub, 1)) != 0) bad("c + c^q != 0");
      if (params.s < 0) bad("s must be >= 0");
      const BigExp s = params.s;
      psi = x + xq;
      g = [field_ptr, c, s](Elem y) { return field_ptr->mul(c, field_ptr->pow(y, s)); };
      g_text = field.format_element(c) + "*x^" + to_string(s);
      g_poly = SparsePoly::monomial(field_ptr, c, s);
      out["c"] = field.format_element(c);
      out["s"] = to_string(s);
      break;
    }
    case AdditiveVariant::kXqGTrace: {
      if (m != 3) bad("xq_g_trace needs m = 3");
      if (!params.g) bad("xq_g_trace needs g");
      const SparsePoly gp = *params.g;
      for (const Term& t : gp.terms())
        if (field.trace(t.coeff, sub) != 0)
          bad("coefficient " + field.format_element(t.coeff) + " has nonzero trace");
      phi = xq;
      psi = x + xq + SparsePoly::monomial(field_ptr, 1, BigExp(q) * q);
      g = gp.as_map();
      g_text = gp.to_string();
      g_poly = gp;
      n = 3;
      out["g"] = gp.to_string();
      break;
    }
  }
  for (Elem y : psi_image(*psi)) {
    const Elem gy = g(y);
    if ((*psi)(gy) != 0)
      throw Error(ErrorCode::kKernelViolation, "psi(g(y)) != 0 at y = " + field.format_element(y));
  }
  FamilyInstance inst = assemble_additive(phi, *psi, g, g_text, n, sub,
                                          "additive." + to_string(params.variant), std::move(out));
  if (g_poly) {
    if (auto inner = compose_bounded(*g_poly, *psi)) inst.poly = reduce_exponents(phi + *inner);
  }
  flag_identity(inst);
  return inst;
}

// ---------------------------------------------------------------------------

std::string to_string(ShiftVariant variant) {
  return variant == ShiftVariant::kTraceG1 ? "trace_g1" : "power_g2";
}

FamilyInstance assemble_shift(const FieldPtr& field, const ShiftParams& shift, FieldMap g,
                              const std::string& g_text, std::uint64_t n, std::string family,
                              Params params) {
  FamilyInstance inst;
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.field = field;
  const FieldMap g_map = table_map(make_table(*field, g));
  inst.f = [field, g_map, shift](Elem x) {
    const Elem inner = field->add(field->sub(field->frobenius(x, shift.sub_degree, shift.i), x), shift.delta);
    return field->add(x, g_map(inner));
  };
  inst.formula = "x + g(x^(q^" + std::to_string(shift.i) + ") - x + " + field->format_element(shift.delta) +
                 ") with g(x) = " + g_text;
  inst.claimed_n = n;
  inst.criterion_name = "shift";
  inst.criterion = [field, g_map, shift, n] { return shift_criterion(field, g_map, shift, n); };
  return inst;
}

FamilyInstance build_shift(const FieldPtr& field_ptr, const ShiftFamilyParams& params) {
  const FieldCtx& field = *field_ptr;
  const unsigned sub = params.sub_degree;
  const unsigned m = sub_degree_of(field, sub);
  const std::uint64_t q = field.subfield_order(sub);
  const ShiftParams shift = ShiftParams::make(field, params.i, params.delta, sub);
  const SparsePoly H = params.H ? *params.H : SparsePoly::x(field_ptr);
  const unsigned i = params.i;
  const BigExp qi = boost::multiprecision::pow(BigExp(q), i);

  Params out;
  out["variant"] = to_string(params.variant);
  out["q"] = q;
  out["m"] = m;
  out["i"] = i;
  out["delta"] = field.format_element(params.delta);
  out["H"] = H.to_string();

  std::vector<bool> hit(field.order(), false);
  for (Elem x = 0; x < field.order(); ++x)
    hit[field.add(field.sub(field.frobenius(x, sub, i), x), params.delta)] = true;

  FieldMap g;
  std::string g_text;
  std::optional<SparsePoly> g_poly;
  if (params.variant == ShiftVariant::kTraceG1) {
    if (m % i != 0) bad("trace_g1 needs i | m");
    const unsigned tsub = sub * i;
    g = [field_ptr, H, tsub](Elem y) { return field_ptr->trace(H(y), tsub); };
    g_text = "Tr_{q^m/q^i}(" + H.to_string() + ")";
    g_poly = H.trace(tsub);
    bool nondegenerate = false;
    for (Elem y = 0; y < field.order() && !nondegenerate; ++y)
      if (hit[y] && g(y) != 0) nondegenerate = true;
    if (!nondegenerate) throw Error(ErrorCode::kDegenerateH, "H(S_delta) lies in ker(Tr_{q^m/q^i})");
  } else {
    const BigExp s = params.s;
    if (s <= 0) bad("s must be positive");
    if ((s * (qi - 1)) % field.order_minus_1() != 0) bad("s(q^i - 1) != 0 (mod q^m - 1)");
    g = [field_ptr, H, s](Elem y) { return field_ptr->pow(H(y), s); };
    g_text = "(" + H.to_string() + ")^" + to_string(s);
    g_poly = compose_bounded(SparsePoly::monomial(field_ptr, 1, s), H);
    bool nondegenerate = false;
    for (Elem y = 0; y < field.order() && !nondegenerate; ++y)
      if (hit[y] && H(y) != 0) nondegenerate = true;
    if (!nondegenerate) throw Error(ErrorCode::kDegenerateH, "H(S_delta) = {0}");
    out["s"] = to_string(s);
  }
  FamilyInstance inst = assemble_shift(field_ptr, shift, g, g_text, field.p(),
                                       "shift." + to_string(params.variant), std::move(out));
  if (g_poly) {
    const SparsePoly inner = SparsePoly::monomial(field_ptr, 1, qi) - SparsePoly::x(field_ptr) +
                             SparsePoly::constant(field_ptr, params.delta);
    if (auto composed = compose_bounded(*g_poly, inner))
      inst.poly = reduce_exponents(SparsePoly::x(field_ptr) + *composed);
  }
  flag_identity(inst);
  return inst;
}

// ---------------------------------------------------------------------------

FamilyInstance assemble_rs(const FieldPtr& field, std::uint64_t r, std::uint64_t s, const SparsePoly& h,
                           std::string family, Params params) {
  const RsParams rs = RsParams::make(*field, r, s);
  FamilyInstance inst;
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.field = field;
  inst.poly = reduce_exponents(h.compose_monomial(s).shifted(r));
  inst.f = inst.poly->as_map();
  inst.formula = "x^" + std::to_string(r) + "*h(x^" + std::to_string(s) + ") with h(x) = " + h.to_string();
  inst.claimed_n = 3;
  inst.criterion_name = "rs_triple";
  inst.criterion = [field, h, rs] { return rs_triple_criterion(field, h.as_map(), rs); };
  return inst;
}

namespace {

void require_2to3m(std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (pp.p != 2 || pp.k % 3 != 0) bad("q must be 2^(3j)");
}

}  // namespace

std::vector<std::uint64_t> search_k_2to3m(std::uint64_t q) {
  require_2to3m(q);
  const std::uint64_t step = (q - 1) / 7;
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 1; j <= 49; ++j)
    if ((j * step) % 7 == 3) out.push_back(j * step);
  return out;
}

FamilyInstance build_rs_2to3m(std::uint64_t q, std::uint64_t k, FieldOptions options) {
  require_2to3m(q);
  if (k == 0) bad("k must be positive");
  if ((7 * k) % (q - 1) != 0) bad("7k != 0 (mod q - 1)");
  if (k % 7 != 3) bad("k != 3 (mod 7)");
  FieldPtr field = extension_field(q, 3, options);
  const std::uint64_t s = q * q + q + 1;
  const SparsePoly h(field, {{1, 0}, {1, BigExp(k)}, {1, BigExp(2 * k)}});
  Params params;
  params["q"] = q;
  params["k"] = k;
  FamilyInstance inst = assemble_rs(field, 1, s, h, "rs_2to3m", std::move(params));
  inst.notes.push_back("exponents of f reduced mod q^3 - 1");
  flag_identity(inst);
  return inst;
}

FamilyInstance build_xq_h_alpha(const FieldPtr& field_ptr, Elem alpha) {
  const FieldCtx& field = *field_ptr;
  if (field.n() % 3 != 0) bad("field must be GF(q^3)");
  const unsigned sub = field.n() / 3;
  if (field.p() != 2 || sub % 2 != 0) bad("q must be a power of 4");
  if (alpha >= field.order() || !field.in_subfield(alpha, sub)) bad("alpha must lie in GF(q)");
  if (field.pow(alpha, std::uint64_t{3}) != 1) bad("alpha^3 != 1");
  const std::uint64_t q = field.subfield_order(sub);
  const std::uint64_t third = (q * q + q + 1) / 3;
  const SparsePoly h(field_ptr, {{1, 0}, {alpha, BigExp(third)}, {1, BigExp(2 * third)}});
  Params params;
  params["q"] = q;
  params["alpha"] = field.format_element(alpha);
  FamilyInstance inst = assemble_rs(field_ptr, q, q - 1, h, "xq_h_alpha", std::move(params));
  if (alpha == 1)
    inst.notes.push_back("alpha = 1: h = 1 + w + w^2 = 0 wherever x^{(q^2+q+1)/3} = w is a primitive cube root, "
                         "so f is not a permutation");
  flag_identity(inst);
  return inst;
}

namespace {

void require_jieguo_q(std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (pp.p != 2 || pp.k % 12 != 6) bad("q must be 2^(12j-6)");
}

}  // namespace

bool jieguo_congruences_hold(std::uint64_t q, std::uint64_t t_in, std::uint64_t m_in) {
  using I = __int128;
  const I N = static_cast<I>(q) + 1;
  const I t = static_cast<I>(t_in) % N, m = static_cast<I>(m_in) % N;
  auto zero = [&](I v) { return ((v % N) + N) % N == 0; };
  const I t2 = t * t % N, t3 = t2 * t % N;
  return zero(-6 * t + 12 * t2 - 8 * t3) && zero(-3 * m + 6 * m * t - 4 * m * t2 % N) &&
         zero(-m - m * t + t + t2) && zero(13 * m - 13 * t);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> solve_jieguo_congruences(std::uint64_t q) {
  require_jieguo_q(q);
  const std::uint64_t N = q + 1;
  const std::uint64_t period = N / 13;  // 13m = 13t (mod N)  <=>  m = t (mod N/13)
  std::mutex mu;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  parallel_for(N, [&](std::size_t begin, std::size_t end) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> local;
    for (std::uint64_t t = begin; t < end; ++t)
      for (std::uint64_t m = t % period; m < N; m += period)
        if (jieguo_congruences_hold(q, t, m)) local.emplace_back(t, m);
    std::lock_guard lock(mu);
    out.insert(out.end(), local.begin(), local.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

FamilyInstance build_jieguo(std::uint64_t q, std::uint64_t t, std::uint64_t m, FieldOptions options) {
  require_jieguo_q(q);
  const std::uint64_t N = q + 1;
  if (t >= N || m >= N) bad("t and m must lie in [0, q]");
  if (!jieguo_congruences_hold(q, t, m)) bad("(t, m) does not satisfy the congruences mod q + 1");
  FieldPtr field = extension_field(q, 2, options);
  BigExp middle = (BigExp(m) * q - BigExp(2) * t * q) % N;
  if (middle < 0) middle += N;
  const SparsePoly h(field, {{1, BigExp(m)}, {1, middle}, {1, BigExp(t)}});
  Params params;
  params["q"] = q;
  params["t"] = t;
  params["m"] = m;
  params["h"] = h.to_string();
  FamilyInstance inst = assemble_rs(field, 1, q - 1, h, "jieguo", std::move(params));
  inst.notes.push_back("exponents of h reduced mod q + 1 (h is only evaluated on mu_{q+1})");
  if (t == 0 && m == 0) inst.notes.push_back("degenerate: t = m = 0");
  flag_identity(inst);
  return inst;
}

FamilyInstance build_trace_theta(const FieldPtr& field_ptr, Elem theta) {
  const FieldCtx& field = *field_ptr;
  if (field.n() % 3 != 0) bad("field must be GF(q^3)");
  const unsigned sub = field.n() / 3;
  if (field.p() != 2 || sub % 2 != 0) bad("q must be a power of 4");
  if (theta >= field.order() || !field.in_subfield(theta, sub)) bad("theta must lie in GF(q)");
  if (theta == 1 || field.pow(theta, std::uint64_t{3}) != 1) bad("theta must satisfy theta^3 = 1, theta != 1");
  const std::uint64_t q = field.subfield_order(sub);
  const SparsePoly tr = SparsePoly::monomial(field_ptr, 1, BigExp((q * q + q) / 2)).trace(sub);
  const SparsePoly x = SparsePoly::x(field_ptr);
  const SparsePoly f = x + tr.scaled(theta);
  const SparsePoly inv = x + tr.scaled(field.mul(theta, theta));

  FamilyInstance inst;
  inst.family = "trace_theta";
  inst.params["q"] = q;
  inst.params["theta"] = field.format_element(theta);
  inst.field = field_ptr;
  inst.poly = f;
  inst.inverse = inv;
  inst.f = f.as_map();
  inst.formula = "x + theta*Tr_{q^3/q}(x^" + std::to_string((q * q + q) / 2) + ")";
  inst.claimed_n = 3;
  inst.criterion_name = "stated_inverse";
  inst.criterion = [field_ptr, f, inv] { return stated_inverse_criterion(field_ptr, f.as_map(), inv.as_map()); };
  if (!inst.criterion().holds) throw std::logic_error("trace_theta: f(f(x)) differs from the stated inverse");
  flag_identity(inst);
  return inst;
}

}  // namespace ncycle
