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

#include "ncycle/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ncycle/error.hpp"
#include "ncycle/json_io.hpp"
#include "ncycle/parallel.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/walsh.hpp"

namespace ncycle {

OracleVerdict exhaustive_verdict(const FieldPtr& field, const FieldMap& f, const std::vector<std::uint64_t>& ns,
                                 std::uint64_t cap) {
  const std::uint64_t q = field->order();
  if (q > cap)
    throw Error(ErrorCode::kCapExceeded, "field of order " + std::to_string(q) + " exceeds cap " + std::to_string(cap));
  for (std::uint64_t n : ns)
    if (n == 0) throw Error(ErrorCode::kBadParams, "n must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<Elem> table(q);
  parallel_for(q, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) table[x] = f(static_cast<Elem>(x));
  });

  OracleVerdict v;
  std::vector<std::uint8_t> mark(q, 0);
  v.bijective = true;
  for (Elem y : table) {
    if (y >= q) throw std::out_of_range("map value outside the field");
    if (mark[y]) v.bijective = false;
    mark[y] = 1;
  }
  if (v.bijective) {
    std::fill(mark.begin(), mark.end(), 0);
    BigExp order = 1;
    for (std::uint64_t x = 0; x < q; ++x) {
      if (mark[x]) continue;
      std::uint64_t len = 0;
      for (std::uint64_t y = x; !mark[y]; y = table[y]) {
        mark[y] = 1;
        ++len;
      }
      ++v.cycle_type[len];
      const BigExp l = len;
      order = order / boost::multiprecision::gcd(order, l) * l;
    }
    v.order = order;
  }
  for (std::uint64_t n : ns) v.is_ncycle_at[n] = v.bijective && BigExp(n) % *v.order == 0;
  v.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::string to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::kAgree: return "AGREE";
    case Agreement::kDisagree: return "DISAGREE";
    case Agreement::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

CrossCheckReport cross_check(const FamilyInstance& instance, std::uint64_t walsh_cap) {
  CrossCheckReport r;
  r.n = instance.claimed_n;
  try {
    r.criterion = instance.criterion();
  } catch (const Error& e) {
    r.criterion_error = e.what();
  }
  r.oracle = exhaustive_verdict(instance.field, instance.f, {r.n});
  const bool applicable = r.criterion_error.empty() && r.criterion.applicable();
  if (applicable) {
    const bool oracle_says = r.oracle.is_ncycle_at.at(r.n);
    r.agreement = r.criterion.holds == oracle_says ? Agreement::kAgree : Agreement::kDisagree;
    if (r.agreement == Agreement::kDisagree)
      r.detail = std::string("criterion ") + (r.criterion.holds ? "holds" : "fails") + " but the oracle says " +
                 (oracle_says ? "n-cycle" : "not an n-cycle");
  }
  if (r.oracle.bijective && instance.field->order() <= walsh_cap) {
    const PermMap perm = require_perm(instance.field, instance.f);
    r.walsh_symmetric = walsh_involution_test(perm, walsh_cap).symmetric;
    const bool involution = BigExp(2) % *r.oracle.order == 0;
    if (*r.walsh_symmetric != involution) {
      r.agreement = Agreement::kDisagree;
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += "Walsh symmetry disagrees with order dividing 2";
    }
  }
  return r;
}

std::uint64_t FuzzSummary::failures() const {
  std::uint64_t total = 0;
  for (const char* k : {"DISAGREE", "UNEXPECTED_ACCEPT", "UNEXPECTED_REJECT", "UNEXPECTED_ERROR"}) {
    auto it = outcomes.find(k);
    if (it != outcomes.end()) total += it->second;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Fuzzing

namespace {

using Rng = std::mt19937_64;

struct FieldChoice {
  std::uint32_t p;
  unsigned n;
  unsigned sub;
};

class FieldCache {
 public:
  FieldPtr get(std::uint32_t p, unsigned n) {
    auto key = std::make_pair(p, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FieldPtr f = make_field(p, n);
    cache_.emplace(key, f);
    return f;
  }

 private:
  std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache_;
};

enum class Kind { kValid, kPerturbed, kInvalid };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::kValid: return "valid";
    case Kind::kPerturbed: return "perturbed";
    case Kind::kInvalid: return "invalid";
  }
  return "?";
}

struct Draw {
  Kind kind = Kind::kValid;
  FieldPtr field;
  Params params = Params::object();
  std::function<FamilyInstance()> build;
  bool expect_reject = false;
};

using Generator = std::function<Draw(Rng&, FieldCache&, Kind)>;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

Elem random_nonzero(Rng& rng, const FieldCtx& field) {
  return static_cast<Elem>(uniform(rng, 1, field.order() - 1));
}

Elem random_in_subfield(Rng& rng, const FieldCtx& field, unsigned sub, bool nonzero) {
  const auto members = field.subfield_members(sub);
  return members[uniform(rng, nonzero ? 1 : 0, members.size() - 1)];
}

SparsePoly random_poly(Rng& rng, const FieldPtr& field, unsigned max_terms, std::uint64_t max_exp) {
  std::vector<Term> terms;
  const unsigned count = static_cast<unsigned>(uniform(rng, 1, max_terms));
  for (unsigned i = 0; i < count; ++i) terms.push_back({random_nonzero(rng, *field), BigExp(uniform(rng, 0, max_exp))});
  return SparsePoly(field, std::move(terms));
}

// c*x^e with c from `coeffs` (nonzero) and e in [0, max_exp].
SparsePoly random_term(Rng& rng, const FieldPtr& field, Elem c, std::uint64_t max_exp) {
  return SparsePoly::monomial(field, c, BigExp(uniform(rng, 0, max_exp)));
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= v; ++d)
    if (v % d == 0) out.push_back(d);
  return out;
}

Kind reclassify(Kind requested, bool valid) {
  if (requested == Kind::kInvalid && valid) return Kind::kValid;
  return requested;
}

// --- x h(lambda(x)) ---------------------------------------------------------

LambdaVariant random_lambda(Rng& rng, unsigned n, unsigned m) {
  if (n <= m && uniform(rng, 0, 1) == 1) return LambdaVariant::kLambda2;
  return LambdaVariant::kLambda1;
}

Draw xh_common(Rng& rng, const FieldPtr& field, Kind kind, const XhLambdaParams& base, const SparsePoly& h_valid,
               bool valid) {
  Draw d;
  d.field = field;
  d.kind = reclassify(kind, valid);
  if (d.kind == Kind::kInvalid || !valid) {
    d.kind = valid ? d.kind : Kind::kInvalid;
    d.expect_reject = true;
    d.build = [field, base] { return build_xh_lambda(field, base); };
    return d;
  }
  if (d.kind == Kind::kPerturbed) {
    const unsigned n = base.variant == XhVariant::kTheta || base.variant == XhVariant::kCustom ? base.n : 2;
    const std::uint64_t q = field->subfield_order(base.sub_degree);
    const Elem c = random_in_subfield(rng, *field, base.sub_degree, true);
    const SparsePoly hp = h_valid + random_term(rng, field, c, q - 1);
    const LambdaSpec spec = LambdaSpec::make(*field, base.lambda, n, base.sub_degree);
    d.params["perturbed_h"] = hp.to_string();
    d.build = [field, spec, hp, n] {
      return assemble_xh_lambda(field, spec, hp, n, "xh_lambda.perturbed", Params::object());
    };
    return d;
  }
  d.build = [field, base] { return build_xh_lambda(field, base); };
  return d;
}

SparsePoly xh_h(const FieldPtr& field, const std::vector<std::pair<Elem, std::uint64_t>>& terms) {
  std::vector<Term> t;
  for (const auto& [c, e] : terms) t.push_back({c, BigExp(e)});
  return SparsePoly(field, std::move(t));
}

Draw gen_xh_involution(Rng& rng, FieldCache& cache, Kind kind) {
  if (kind == Kind::kInvalid) {
    // Even characteristic has no such involution.
    const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{2, 6, 2}, {2, 6, 3}, {2, 9, 3}});
    FieldPtr field = cache.get(fc.p, fc.n);
    XhLambdaParams base;
    base.variant = XhVariant::kInvolution;
    base.sub_degree = fc.sub;
    Draw d = xh_common(rng, field, kind, base, SparsePoly::zero(field), false);
    d.params["q"] = field->subfield_order(fc.sub);
    return d;
  }
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{5, 2, 1}, {7, 2, 1}, {3, 4, 1}, {3, 4, 2}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const unsigned m = fc.n / fc.sub;
  const std::uint64_t q = field->subfield_order(fc.sub);
  XhLambdaParams base;
  base.variant = XhVariant::kInvolution;
  base.sub_degree = fc.sub;
  base.lambda = random_lambda(rng, 2, m);
  const SparsePoly h = xh_h(field, {{1, 0}, {field->neg(field->from_int(2)), q - 1}});
  Draw d = xh_common(rng, field, kind, base, h, true);
  d.params["q"] = q;
  d.params["lambda"] = to_string(base.lambda);
  return d;
}

Draw gen_xh_theta(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc =
      pick(rng, std::vector<FieldChoice>{{5, 2, 1}, {7, 2, 1}, {3, 4, 1}, {3, 4, 2}, {2, 6, 2}, {2, 6, 3}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const unsigned m = fc.n / fc.sub;
  const std::uint64_t q = F.subfield_order(fc.sub);
  XhLambdaParams base;
  base.variant = XhVariant::kTheta;
  base.sub_degree = fc.sub;
  unsigned n;
  Elem theta;
  if (kind == Kind::kInvalid) {
    n = static_cast<unsigned>(uniform(rng, 1, q));
    theta = random_in_subfield(rng, F, fc.sub, false);
  } else {
    n = static_cast<unsigned>(pick(rng, divisors(q - 1)));
    // Primitive n-th roots: g_q^{j (q-1)/n} with gcd(j, n) = 1.
    const Elem gq = F.gen_pow((F.order() - 1) / (q - 1));
    std::uint64_t j;
    do {
      j = uniform(rng, 1, n);
    } while (std::gcd(j, static_cast<std::uint64_t>(n)) != 1);
    theta = F.pow(gq, std::uint64_t{j * ((q - 1) / n)});
  }
  base.n = n;
  base.theta = theta;
  base.lambda = random_lambda(rng, n, m);
  // Independent validity test: n | q-1 and theta has multiplicative order n.
  bool valid = n >= 1 && (q - 1) % n == 0 && theta != 0;
  if (valid) {
    std::uint64_t ord = 1;
    for (Elem t = theta; t != 1; t = F.mul(t, theta)) ++ord;
    valid = ord == n;
  }
  const SparsePoly h =
      valid ? xh_h(field, {{1, 0}, {theta, (q - 1) / n}, {F.neg(1), q - 1}}) : SparsePoly::zero(field);
  Draw d = xh_common(rng, field, kind, base, h, valid);
  d.params["q"] = q;
  d.params["n"] = n;
  d.params["theta"] = F.format_element(theta);
  d.params["lambda"] = to_string(base.lambda);
  return d;
}

Draw gen_xh_abc(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{5, 2, 1}, {5, 2, 2}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const std::int64_t p = F.p();
  const unsigned m = fc.n / fc.sub;
  const std::uint64_t q = F.subfield_order(fc.sub);
  std::int64_t a, b;
  std::uint64_t c;
  if (kind == Kind::kInvalid) {
    a = static_cast<std::int64_t>(uniform(rng, 0, p - 1));
    b = static_cast<std::int64_t>(uniform(rng, 0, p - 1));
    c = uniform(rng, 0, q - 1);
  } else {
    std::vector<std::pair<std::int64_t, std::int64_t>> ab;
    for (std::int64_t x = 0; x < p; ++x)
      for (std::int64_t y = 0; y < p; ++y)
        if ((x * x + y * y) % p == 0 && (2 * x * y) % p == 1) ab.emplace_back(x, y);
    std::tie(a, b) = pick(rng, ab);
    const std::uint64_t step = (q - 1) / std::gcd<std::uint64_t>(4, q - 1);
    std::vector<std::uint64_t> cs;
    for (std::uint64_t x = step; x + 1 < q; x += step) cs.push_back(x);
    c = pick(rng, cs);
  }
  const bool valid = (a * a + b * b) % p == 0 && (2 * a * b) % p == 1 && (4 * c) % (q - 1) == 0 && c >= 1 &&
                     c + 2 <= q;
  XhLambdaParams base;
  base.variant = XhVariant::kAbc;
  base.sub_degree = fc.sub;
  base.a = a;
  base.b = b;
  base.c = c;
  base.lambda = random_lambda(rng, 2, m);
  const SparsePoly h =
      valid ? xh_h(field, {{1, 0},
                    {F.from_int(static_cast<std::uint64_t>(a)), c},
                    {F.from_int(static_cast<std::uint64_t>(b)), q - c - 1},
                    {F.neg(1), q - 1}})
            : SparsePoly::zero(field);
  Draw d = xh_common(rng, field, kind, base, h, valid);
  d.params["q"] = q;
  d.params["a"] = a;
  d.params["b"] = b;
  d.params["c"] = c;
  d.params["lambda"] = to_string(base.lambda);
  return d;
}

Draw gen_xh_custom(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{5, 2, 1}, {7, 2, 1}, {3, 4, 1}, {3, 4, 2}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const unsigned m = fc.n / fc.sub;
  const std::uint64_t q = F.subfield_order(fc.sub);
  std::vector<std::uint64_t> ns = divisors(q - 1);
  ns.erase(ns.begin());
  const unsigned n = static_cast<unsigned>(pick(rng, ns));
  const auto members = F.subfield_members(fc.sub);
  std::vector<Elem> roots;
  for (Elem y : members)
    if (y != 0 && F.pow(y, std::uint64_t{n}) == 1) roots.push_back(y);
  // Interpolate h(a) = v_a on GF(q): h = sum v_a (1 - (x - a)^(q-1)).
  std::vector<Elem> values;
  for (std::size_t i = 0; i < members.size(); ++i) values.push_back(pick(rng, roots));
  bool valid = true;
  if (kind == Kind::kInvalid) {
    values[uniform(rng, 0, values.size() - 1)] = pick(rng, members);
    for (Elem v : values)
      if (std::find(roots.begin(), roots.end(), v) == roots.end()) valid = false;
  }
  const SparsePoly x = SparsePoly::x(field);
  SparsePoly h = SparsePoly::zero(field);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const SparsePoly delta = SparsePoly::constant(field, 1) -
                             (x - SparsePoly::constant(field, members[i])).pow(static_cast<unsigned>(q - 1));
    h = h + delta.scaled(values[i]);
  }
  XhLambdaParams base;
  base.variant = XhVariant::kCustom;
  base.sub_degree = fc.sub;
  base.n = n;
  base.h = h;
  base.lambda = random_lambda(rng, n, m);
  Draw d = xh_common(rng, field, kind, base, h, valid);
  d.params["q"] = q;
  d.params["n"] = n;
  d.params["h"] = h.to_string();
  d.params["lambda"] = to_string(base.lambda);
  return d;
}

// --- phi(x) + g(psi(x)) ------------------------------------------------------

const std::vector<FieldChoice> kAdditiveFields = {{3, 4, 1}, {3, 4, 2}, {5, 2, 1}, {7, 2, 1},
                                                  {2, 6, 1}, {2, 6, 2}, {2, 6, 3}, {2, 9, 3}};

std::vector<Elem> image_set(const FieldCtx& F, const std::function<Elem(Elem)>& f) {
  std::vector<std::uint8_t> hit(F.order(), 0);
  for (Elem x = 0; x < F.order(); ++x) hit[f(x)] = 1;
  std::vector<Elem> out;
  for (Elem y = 0; y < F.order(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

Draw additive_perturbed(Rng& rng, const FieldPtr& field, const SparsePoly& phi, const SparsePoly& psi,
                        const FieldMap& g, unsigned sub, std::uint64_t n, Params& params) {
  Draw d;
  d.field = field;
  d.kind = Kind::kPerturbed;
  const Elem c = random_nonzero(rng, *field);
  const std::uint64_t e = uniform(rng, 0, field->order() - 2);
  params["perturbation"] = field->format_element(c) + "*x^" + std::to_string(e);
  FieldMap gp = [field, g, c, e](Elem y) { return field->add(g(y), field->mul(c, field->pow(y, e))); };
  d.build = [phi, psi, gp, sub, n] {
    return assemble_additive(phi, psi, gp, "perturbed", n, sub, "additive.perturbed", Params::object());
  };
  return d;
}

Draw gen_additive_g(Rng& rng, FieldCache& cache, Kind kind, AdditiveVariant variant) {
  const FieldChoice fc = pick(rng, kAdditiveFields);
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const std::uint64_t q = F.subfield_order(fc.sub);
  const SparsePoly x = SparsePoly::x(field);
  SparsePoly psi = SparsePoly::monomial(field, 1, q) - x;
  AdditiveParams ap;
  ap.variant = variant;
  ap.sub_degree = fc.sub;
  ap.H = random_poly(rng, field, 2, F.order() - 2);
  const std::uint64_t step = (F.order() - 1) / (q - 1);
  ap.s = step * uniform(rng, 1, q - 1);
  bool valid = true;
  Draw d;
  d.params["q"] = q;
  d.params["H"] = ap.H->to_string();
  if (kind == Kind::kInvalid) {
    if (variant == AdditiveVariant::kPowerG2 && uniform(rng, 0, 1) == 0) {
      ap.s = step * uniform(rng, 0, q - 1) + uniform(rng, 1, step - 1);
      valid = false;
    } else {
      psi = psi + SparsePoly::monomial(field, random_nonzero(rng, F), q + 1);
      valid = false;
    }
  }
  ap.psi = psi;
  d.params["psi"] = psi.to_string();
  if (variant == AdditiveVariant::kPowerG2) d.params["s"] = to_string(ap.s);
  const SparsePoly H = *ap.H;
  FieldMap g = variant == AdditiveVariant::kTraceG1
                   ? FieldMap([field, H, sub = fc.sub](Elem y) { return field->trace(H(y), sub); })
                   : FieldMap([field, H, s = ap.s](Elem y) { return field->pow(H(y), s); });
  if (valid) {
    // Non-degeneracy on psi(F), checked here from scratch.
    const auto img = image_set(F, [&](Elem v) { return psi(v); });
    valid = std::any_of(img.begin(), img.end(), [&](Elem y) {
      return variant == AdditiveVariant::kTraceG1 ? g(y) != 0 : H(y) != 0;
    });
  }
  if (kind == Kind::kPerturbed && valid) {
    Draw p = additive_perturbed(rng, field, x, psi, g, fc.sub, F.p(), d.params);
    p.params = d.params;
    return p;
  }
  d.field = field;
  d.kind = valid ? (kind == Kind::kInvalid ? Kind::kValid : kind) : Kind::kInvalid;
  if (d.kind == Kind::kPerturbed) d.kind = Kind::kValid;
  d.expect_reject = !valid;
  d.build = [field, ap] { return build_additive(field, ap); };
  return d;
}

Draw gen_additive_trace_g1(Rng& rng, FieldCache& cache, Kind kind) {
  return gen_additive_g(rng, cache, kind, AdditiveVariant::kTraceG1);
}

Draw gen_additive_power_g2(Rng& rng, FieldCache& cache, Kind kind) {
  return gen_additive_g(rng, cache, kind, AdditiveVariant::kPowerG2);
}

Draw gen_additive_c_trace(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{3, 4, 2}, {5, 2, 1}, {7, 2, 1}, {2, 6, 3}, {2, 12, 6}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const std::uint64_t q = F.subfield_order(fc.sub);
  Elem c = 0;
  bool valid;
  if (kind == Kind::kInvalid) {
    do {
      c = random_nonzero(rng, F);
    } while (F.add(c, F.frobenius(c, fc.sub, 1)) == 0);
    valid = false;
  } else {
    while (c == 0) {
      const Elem z = random_nonzero(rng, F);
      c = F.sub(F.frobenius(z, fc.sub, 1), z);
    }
    valid = true;
  }
  AdditiveParams ap;
  ap.variant = AdditiveVariant::kCTraceQ2;
  ap.sub_degree = fc.sub;
  ap.c = c;
  ap.s = uniform(rng, 0, F.order() - 2);
  Draw d;
  d.params["q"] = q;
  d.params["c"] = F.format_element(c);
  d.params["s"] = to_string(ap.s);
  if (kind == Kind::kPerturbed) {
    const SparsePoly x = SparsePoly::x(field);
    const SparsePoly psi = x + SparsePoly::monomial(field, 1, q);
    FieldMap g = [field, c, s = ap.s](Elem y) { return field->mul(c, field->pow(y, s)); };
    Draw p = additive_perturbed(rng, field, x, psi, g, fc.sub, F.p(), d.params);
    p.params = d.params;
    return p;
  }
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [field, ap] { return build_additive(field, ap); };
  return d;
}

Draw gen_additive_xq_g(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{2, 6, 2}, {2, 9, 3}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const std::uint64_t q = F.subfield_order(fc.sub);
  std::vector<Term> terms;
  const unsigned count = static_cast<unsigned>(uniform(rng, 1, 3));
  for (unsigned i = 0; i < count; ++i) {
    Elem a = 0;
    while (a == 0) {
      const Elem z = random_nonzero(rng, F);
      a = F.sub(F.frobenius(z, fc.sub, 1), z);
    }
    terms.push_back({a, BigExp(uniform(rng, 0, F.order() - 2))});
  }
  bool valid = true;
  if (kind == Kind::kInvalid) {
    Elem a;
    do {
      a = random_nonzero(rng, F);
    } while (F.trace(a, fc.sub) == 0);
    terms.push_back({a, BigExp(uniform(rng, 0, F.order() - 2))});
    valid = false;
  }
  const SparsePoly g(field, terms);
  bool coeffs_ok = true;
  for (const Term& t : g.terms())
    if (F.trace(t.coeff, fc.sub) != 0) coeffs_ok = false;
  valid = valid && coeffs_ok;
  AdditiveParams ap;
  ap.variant = AdditiveVariant::kXqGTrace;
  ap.sub_degree = fc.sub;
  ap.g = g;
  Draw d;
  d.params["q"] = q;
  d.params["g"] = g.to_string();
  if (kind == Kind::kPerturbed) {
    const SparsePoly x = SparsePoly::x(field);
    const SparsePoly phi = SparsePoly::monomial(field, 1, q);
    const SparsePoly psi = x + phi + SparsePoly::monomial(field, 1, BigExp(q) * q);
    Draw p = additive_perturbed(rng, field, phi, psi, g.as_map(), fc.sub, 3, d.params);
    p.params = d.params;
    return p;
  }
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [field, ap] { return build_additive(field, ap); };
  return d;
}

// --- x + g(x^{q^i} - x + delta) --------------------------------------------

Draw gen_shift(Rng& rng, FieldCache& cache, Kind kind, ShiftVariant variant) {
  const FieldChoice fc = pick(rng, std::vector<FieldChoice>{{3, 4, 1}, {3, 4, 2}, {5, 2, 1}, {7, 2, 1}, {2, 6, 1},
                                                            {2, 6, 2}, {2, 6, 3}, {2, 9, 1}, {2, 9, 3}});
  FieldPtr field = cache.get(fc.p, fc.n);
  const FieldCtx& F = *field;
  const unsigned m = fc.n / fc.sub;
  const std::uint64_t q = F.subfield_order(fc.sub);
  const std::uint64_t qm1 = F.order() - 1;
  ShiftFamilyParams sp;
  sp.variant = variant;
  sp.sub_degree = fc.sub;
  sp.delta = static_cast<Elem>(uniform(rng, 0, F.order() - 1));
  sp.H = random_poly(rng, field, 2, F.order() - 2);
  bool valid = true;
  std::vector<unsigned> is;
  for (unsigned i = 1; i < m; ++i)
    if (variant == ShiftVariant::kPowerG2 || m % i == 0) is.push_back(i);
  sp.i = pick(rng, is);
  std::uint64_t step = qm1 / std::gcd(ipow(q, sp.i) - 1, qm1);
  sp.s = step * uniform(rng, 1, std::min<std::uint64_t>(qm1 / step, 20));
  if (kind == Kind::kInvalid) {
    std::vector<unsigned> bad_i;
    for (unsigned i = 1; i < m; ++i)
      if (m % i != 0) bad_i.push_back(i);
    if (variant == ShiftVariant::kTraceG1 && !bad_i.empty()) {
      sp.i = pick(rng, bad_i);
      valid = false;
    } else if (variant == ShiftVariant::kPowerG2) {
      step = qm1 / std::gcd(ipow(q, sp.i) - 1, qm1);
      sp.s = step * uniform(rng, 0, 3) + uniform(rng, 1, step - 1);
      valid = false;
    } else {
      sp.i = m + static_cast<unsigned>(uniform(rng, 0, 2));
      valid = false;
    }
  }
  Draw d;
  d.params["q"] = q;
  d.params["m"] = m;
  d.params["i"] = sp.i;
  d.params["delta"] = F.format_element(sp.delta);
  d.params["H"] = sp.H->to_string();
  if (variant == ShiftVariant::kPowerG2) d.params["s"] = to_string(sp.s);
  const SparsePoly H = *sp.H;
  const unsigned i = sp.i;
  FieldMap g = variant == ShiftVariant::kTraceG1
                   ? FieldMap([field, H, t = fc.sub * i](Elem y) { return field->trace(H(y), t); })
                   : FieldMap([field, H, s = sp.s](Elem y) { return field->pow(H(y), s); });
  if (valid) {
    const auto s_delta =
        image_set(F, [&](Elem v) { return F.add(F.sub(F.frobenius(v, fc.sub, i), v), sp.delta); });
    valid = std::any_of(s_delta.begin(), s_delta.end(), [&](Elem y) {
      return variant == ShiftVariant::kTraceG1 ? g(y) != 0 : H(y) != 0;
    });
  }
  d.field = field;
  if (kind == Kind::kPerturbed && valid) {
    const Elem c = random_nonzero(rng, F);
    const std::uint64_t e = uniform(rng, 0, F.order() - 2);
    d.params["perturbation"] = F.format_element(c) + "*x^" + std::to_string(e);
    FieldMap gp = [field, g, c, e](Elem y) { return field->add(g(y), field->mul(c, field->pow(y, e))); };
    const ShiftParams shift = ShiftParams::make(F, i, sp.delta, fc.sub);
    d.kind = Kind::kPerturbed;
    d.build = [field, shift, gp, p = F.p()] {
      return assemble_shift(field, shift, gp, "perturbed", p, "shift.perturbed", Params::object());
    };
    return d;
  }
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [field, sp] { return build_shift(field, sp); };
  return d;
}

Draw gen_shift_trace_g1(Rng& rng, FieldCache& cache, Kind kind) {
  return gen_shift(rng, cache, kind, ShiftVariant::kTraceG1);
}

Draw gen_shift_power_g2(Rng& rng, FieldCache& cache, Kind kind) {
  return gen_shift(rng, cache, kind, ShiftVariant::kPowerG2);
}

// --- x^r h(x^s) --------------------------------------------------------------

Draw rs_perturbed(Rng& rng, const FieldPtr& field, std::uint64_t r, std::uint64_t s, const SparsePoly& h,
                  Params params) {
  Draw d;
  d.field = field;
  d.kind = Kind::kPerturbed;
  const SparsePoly hp = h + random_term(rng, field, random_nonzero(rng, *field), (field->order() - 1) / s);
  params["perturbed_h"] = hp.to_string();
  d.params = std::move(params);
  d.build = [field, r, s, hp] { return assemble_rs(field, r, s, hp, "rs.perturbed", Params::object()); };
  return d;
}

Draw gen_rs_2to3m(Rng& rng, FieldCache& cache, Kind kind) {
  const std::uint64_t q = 8;
  FieldPtr field = cache.get(2, 9);
  const auto ks = search_k_2to3m(q);
  std::uint64_t k = pick(rng, ks);
  if (kind == Kind::kInvalid) k = uniform(rng, 1, 7 * (q - 1));
  const bool valid = (7 * k) % (q - 1) == 0 && k % 7 == 3;
  Draw d;
  d.params["q"] = q;
  d.params["k"] = k;
  if (kind == Kind::kPerturbed) {
    const SparsePoly h(field, {{1, 0}, {1, BigExp(k)}, {1, BigExp(2 * k)}});
    return rs_perturbed(rng, field, 1, q * q + q + 1, h, d.params);
  }
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [q, k] { return build_rs_2to3m(q, k); };
  return d;
}

Draw gen_xq_h_alpha(Rng& rng, FieldCache& cache, Kind kind) {
  const unsigned sub = uniform(rng, 0, 2) == 0 ? 4 : 2;
  FieldPtr field = cache.get(2, 3 * sub);
  const FieldCtx& F = *field;
  const std::uint64_t q = F.subfield_order(sub);
  Elem alpha;
  if (kind == Kind::kInvalid) {
    alpha = random_in_subfield(rng, F, sub, false);
  } else {
    std::vector<Elem> roots;
    for (Elem y : F.subfield_members(sub))
      if (y != 0 && F.pow(y, std::uint64_t{3}) == 1) roots.push_back(y);
    alpha = pick(rng, roots);
  }
  const bool valid = alpha != 0 && F.mul(alpha, F.mul(alpha, alpha)) == 1;
  Draw d;
  d.params["q"] = q;
  d.params["alpha"] = F.format_element(alpha);
  if (kind == Kind::kPerturbed) {
    const std::uint64_t third = (q * q + q + 1) / 3;
    const SparsePoly h(field, {{1, 0}, {alpha, BigExp(third)}, {1, BigExp(2 * third)}});
    return rs_perturbed(rng, field, q, q - 1, h, d.params);
  }
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [field, alpha] { return build_xq_h_alpha(field, alpha); };
  return d;
}

Draw gen_jieguo(Rng& rng, FieldCache& cache, Kind kind) {
  const std::uint64_t q = 64, N = q + 1;
  static const auto pairs = solve_jieguo_congruences(q);
  FieldPtr field = cache.get(2, 12);
  auto [t, m] = pick(rng, pairs);
  if (kind == Kind::kInvalid) {
    t = uniform(rng, 0, N - 1);
    m = uniform(rng, 0, N - 1);
  }
  // Recomputed here with big integers rather than through the library check.
  const BigExp T = t, M = m, n = N;
  const bool valid = (-6 * T + 12 * T * T - 8 * T * T * T) % n == 0 && (-3 * M + 6 * M * T - 4 * M * T * T) % n == 0 &&
                     (-M - M * T + T + T * T) % n == 0 && (13 * M - 13 * T) % n == 0;
  Draw d;
  d.params["q"] = q;
  d.params["t"] = t;
  d.params["m"] = m;
  if (kind == Kind::kPerturbed) {
    BigExp mid = (M * q - 2 * T * q) % n;
    if (mid < 0) mid += n;
    const SparsePoly h(field, {{1, M}, {1, mid}, {1, T}});
    return rs_perturbed(rng, field, 1, q - 1, h, d.params);
  }
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [q, t = t, m = m] { return build_jieguo(q, t, m); };
  return d;
}

Draw gen_trace_theta(Rng& rng, FieldCache& cache, Kind kind) {
  const unsigned sub = uniform(rng, 0, 2) == 0 ? 4 : 2;
  FieldPtr field = cache.get(2, 3 * sub);
  const FieldCtx& F = *field;
  Elem theta;
  if (kind == Kind::kInvalid) {
    theta = random_in_subfield(rng, F, sub, false);
  } else {
    std::vector<Elem> roots;
    for (Elem y : F.subfield_members(sub))
      if (y > 1 && F.pow(y, std::uint64_t{3}) == 1) roots.push_back(y);
    theta = pick(rng, roots);
  }
  const bool valid = theta > 1 && F.mul(theta, F.mul(theta, theta)) == 1;
  Draw d;
  d.params["q"] = F.subfield_order(sub);
  d.params["theta"] = F.format_element(theta);
  d.field = field;
  d.kind = valid ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = !valid;
  d.build = [field, theta] { return build_trace_theta(field, theta); };
  return d;
}

// --- monomials and unconstrained x^r h(x^s) ----------------------------------

const std::vector<FieldChoice> kSweepFields = {{2, 6, 1}, {2, 9, 1}, {2, 12, 1}, {3, 4, 1}, {5, 2, 1}, {7, 2, 1}};

Draw gen_monomial(Rng& rng, FieldCache& cache, Kind kind) {
  const FieldChoice fc = pick(rng, kSweepFields);
  FieldPtr field = cache.get(fc.p, fc.n);
  const std::uint64_t qm1 = field->order() - 1;
  std::uint64_t d_exp = uniform(rng, 1, qm1 - 1);
  if (kind != Kind::kInvalid)
    while (std::gcd(d_exp, qm1) != 1) d_exp = uniform(rng, 1, qm1 - 1);
  const std::uint64_t n = uniform(rng, 1, 12);
  Draw d;
  d.field = field;
  d.params["d"] = d_exp;
  d.params["n"] = n;
  d.kind = std::gcd(d_exp, qm1) == 1 ? Kind::kValid : Kind::kInvalid;
  d.expect_reject = d.kind == Kind::kInvalid;
  d.build = [field, d_exp, n, qm1] {
    const bool holds = monomial_ncycle(d_exp, qm1, n);
    FamilyInstance inst;
    inst.family = "monomial";
    inst.params["d"] = d_exp;
    inst.field = field;
    inst.poly = SparsePoly::monomial(field, 1, d_exp);
    inst.f = inst.poly->as_map();
    inst.formula = "x^" + std::to_string(d_exp);
    inst.claimed_n = n;
    inst.criterion_name = "monomial";
    inst.criterion = [holds, qm1] {
      CriterionVerdict v;
      v.holds = holds;
      v.domain_size = qm1;
      return v;
    };
    return inst;
  };
  return d;
}

Draw gen_rs_random(Rng& rng, FieldCache& cache, Kind) {
  const FieldChoice fc = pick(rng, kSweepFields);
  FieldPtr field = cache.get(fc.p, fc.n);
  const std::uint64_t qm1 = field->order() - 1;
  const std::uint64_t s = pick(rng, divisors(qm1));
  std::uint64_t r;
  do {
    r = uniform(rng, 1, qm1 - 1);
  } while (std::gcd(r, s) != 1);
  const SparsePoly h = random_poly(rng, field, 3, qm1 / s);
  Draw d;
  d.field = field;
  d.kind = Kind::kValid;
  d.params["r"] = r;
  d.params["s"] = s;
  d.params["h"] = h.to_string();
  d.build = [field, r, s, h] { return assemble_rs(field, r, s, h, "rs_triple.random", Params::object()); };
  return d;
}

const std::map<std::string, Generator>& generators() {
  static const std::map<std::string, Generator> table = {
      {"xh_lambda.theta", gen_xh_theta},
      {"xh_lambda.involution", gen_xh_involution},
      {"xh_lambda.abc", gen_xh_abc},
      {"xh_lambda.custom", gen_xh_custom},
      {"additive.trace_g1", gen_additive_trace_g1},
      {"additive.power_g2", gen_additive_power_g2},
      {"additive.c_trace_q2", gen_additive_c_trace},
      {"additive.xq_g_trace", gen_additive_xq_g},
      {"shift.trace_g1", gen_shift_trace_g1},
      {"shift.power_g2", gen_shift_power_g2},
      {"rs_2to3m", gen_rs_2to3m},
      {"xq_h_alpha", gen_xq_h_alpha},
      {"jieguo", gen_jieguo},
      {"trace_theta", gen_trace_theta},
      {"monomial", gen_monomial},
      {"rs_triple.random", gen_rs_random},
  };
  return table;
}

Kind draw_kind(Rng& rng) {
  const auto r = uniform(rng, 0, 9);
  if (r < 5) return Kind::kValid;
  if (r < 8) return Kind::kPerturbed;
  return Kind::kInvalid;
}

}  // namespace

std::vector<std::string> fuzz_families() {
  std::vector<std::string> out;
  for (const auto& [name, gen] : generators()) out.push_back(name);
  return out;
}

FuzzSummary random_family_fuzz(const std::string& family, std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t walsh_cap) {
  const auto& gens = generators();
  auto it = gens.find(family);
  if (it == gens.end()) throw Error(ErrorCode::kBadParams, "unknown fuzz family '" + family + "'");
  FuzzSummary summary;
  summary.family = family;
  summary.seed = seed;
  summary.trials = trials;
  FieldCache cache;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    Rng rng(seq);
    const Kind requested = draw_kind(rng);
    Draw draw = it->second(rng, cache, requested);
    Json line;
    line["family"] = family;
    line["seed"] = seed;
    line["trial"] = trial;
    line["kind"] = kind_name(draw.kind);
    line["field"] = {{"p", draw.field->p()}, {"n", draw.field->n()}};
    line["params"] = draw.params;
    std::string outcome;
    try {
      FamilyInstance inst = draw.build();
      if (draw.expect_reject) {
        outcome = "UNEXPECTED_ACCEPT";
      } else {
        const CrossCheckReport report = cross_check(inst, walsh_cap);
        outcome = to_string(report.agreement);
        line["claimed_n"] = inst.claimed_n;
        line["criterion_holds"] = report.criterion.holds;
        line["criterion_applicable"] = report.criterion_error.empty() && report.criterion.applicable();
        line["oracle_order"] = report.oracle.order ? bigexp_json(*report.oracle.order) : Json("not a permutation");
        line["oracle_ncycle"] = report.oracle.is_ncycle_at.at(inst.claimed_n);
        line["walsh"] = report.walsh_symmetric ? Json(*report.walsh_symmetric) : Json("skipped");
        if (!report.detail.empty()) line["detail"] = report.detail;
      }
    } catch (const Error& e) {
      outcome = draw.expect_reject ? "REJECTED" : "UNEXPECTED_REJECT";
      line["error"] = e.what();
    } catch (const std::exception& e) {
      outcome = "UNEXPECTED_ERROR";
      line["error"] = e.what();
    }
    line["outcome"] = outcome;
    ++summary.outcomes[outcome];
    summary.lines.push_back(std::move(line));
  }
  return summary;
}

}  // namespace ncycle
