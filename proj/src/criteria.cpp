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

#include "ncycle/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ncycle/error.hpp"
#include "ncycle/permutation.hpp"

namespace ncycle {
namespace {

// Sorted distinct values of f over the whole field (or over F* only).
std::vector<Elem> image_of(const FieldCtx& field, const FieldMap& f, bool skip_zero = false) {
  std::vector<bool> hit(field.order(), false);
  for (Elem x = skip_zero ? 1 : 0; x < field.order(); ++x) hit[f(x)] = true;
  std::vector<Elem> out;
  for (Elem y = 0; y < field.order(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

std::vector<bool> membership(const FieldCtx& field, const std::vector<Elem>& set) {
  std::vector<bool> in(field.order(), false);
  for (Elem y : set) in[y] = true;
  return in;
}

std::string lit(const FieldCtx& field, Elem a) { return field.format_element(a); }

}  // namespace

RsParams RsParams::make(const FieldCtx& field, std::uint64_t r, std::uint64_t s) {
  const std::uint64_t qm1 = field.order_minus_1();
  if (s == 0 || qm1 % s != 0)
    throw Error(ErrorCode::kBadParams, "s = " + std::to_string(s) + " does not divide " +
                                           std::to_string(qm1));
  if (r == 0) throw Error(ErrorCode::kBadParams, "r must be >= 1");
  if (std::gcd(r, s) != 1) throw Error(ErrorCode::kBadParams, "gcd(r, s) != 1");
  return RsParams{r, s, qm1 / s};
}

ShiftParams ShiftParams::make(const FieldCtx& field, unsigned i, Elem delta, unsigned sub_degree) {
  field.require_subfield(sub_degree);
  const unsigned m = field.n() / sub_degree;
  if (i < 1 || i + 1 > m)
    throw Error(ErrorCode::kBadParams, "need 1 <= i <= m - 1 (i = " + std::to_string(i) +
                                           ", m = " + std::to_string(m) + ")");
  if (delta >= field.order()) throw Error(ErrorCode::kBadParams, "delta out of range");
  return ShiftParams{i, delta, sub_degree, std::gcd(i, m)};
}

AgwReport agw_commute_check(const FieldPtr& field_ptr, const FieldMap& f, const FieldMap& lambda,
                            const FieldMap& lambda_bar, const FieldMap& g,
                            const std::optional<std::vector<Elem>>& image,
                            const std::optional<std::vector<Elem>>& image_bar) {
  const FieldCtx& field = *field_ptr;
  const std::vector<Elem> s = image_of(field, lambda);
  const std::vector<Elem> s_bar = image_of(field, lambda_bar);
  auto sorted = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  if (image && sorted(*image) != s)
    throw Error(ErrorCode::kNotSurjective, "lambda is not onto the given set S");
  if (image_bar && sorted(*image_bar) != s_bar)
    throw Error(ErrorCode::kNotSurjective, "lambda_bar is not onto the given set S_bar");

  AgwReport report;
  const std::vector<Elem> table = tabulate(field, f);
  report.commutes = true;
  for (Elem x = 0; x < field.order(); ++x) {
    if (lambda_bar(table[x]) != g(lambda(x))) {
      report.commutes = false;
      report.witness = x;
      break;
    }
  }

  const auto in_s_bar = membership(field, s_bar);
  std::vector<bool> used(field.order(), false);
  report.g_bijective = s.size() == s_bar.size();
  for (Elem y : s) {
    Elem gy = g(y);
    if (!in_s_bar[gy] || used[gy]) {
      report.g_bijective = false;
      break;
    }
    used[gy] = true;
  }

  // f injective on each fiber lambda^{-1}(s): no two points with the same
  // lambda value share an image.
  std::vector<std::pair<Elem, Elem>> keyed;  // (lambda(x), f(x))
  keyed.reserve(field.order());
  for (Elem x = 0; x < field.order(); ++x) keyed.emplace_back(lambda(x), table[x]);
  std::vector<Elem> order(field.order());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return keyed[a] < keyed[b]; });
  report.fibers_injective = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (keyed[order[i]] == keyed[order[i - 1]]) {
      report.fibers_injective = false;
      if (!report.witness) report.witness = std::min(order[i], order[i - 1]);
      break;
    }
  }

  std::vector<bool> hit(field.order(), false);
  report.f_bijective = true;
  for (Elem y : table) {
    if (hit[y]) {
      report.f_bijective = false;
      break;
    }
    hit[y] = true;
  }
  report.holds = report.commutes && report.g_bijective && report.fibers_injective;
  if (report.commutes && report.holds != report.f_bijective)
    throw std::logic_error("AGW verdict disagrees with direct bijectivity of f");
  return report;
}

bool monomial_ncycle(const BigExp& d, std::uint64_t field_order_minus_1, std::uint64_t n) {
  if (field_order_minus_1 == 0) throw Error(ErrorCode::kBadParams, "q - 1 must be positive");
  if (d < 0) throw Error(ErrorCode::kBadParams, "negative exponent");
  const BigExp m = field_order_minus_1;
  if (boost::multiprecision::gcd(d, m) != 1)
    throw Error(ErrorCode::kNotPermutation, "gcd(d, q - 1) != 1");
  return boost::multiprecision::powm(d % m, BigExp(n), m) == BigExp(1) % m;
}

bool frobenius_twist_ncycle(const SparsePoly& f, unsigned sub_degree, unsigned i, std::uint64_t n) {
  const FieldPtr& field = f.field();
  field->require_subfield(sub_degree);
  if (!f.coefficients_in_subfield(sub_degree))
    throw Error(ErrorCode::kBadParams, "coefficients of f must lie in GF(q)");
  PermResult base = perm_from_poly(f);
  if (!std::holds_alternative<PermMap>(base) || !is_ncycle(std::get<PermMap>(base), n))
    throw Error(ErrorCode::kPrereqNotNcycle, "f is not an n-cycle permutation");
  const std::uint64_t m = field->n() / sub_degree;
  const bool divides = (n * i) % m == 0;
  if (divides) {
    PermResult twisted = perm_from_poly(f.frobenius(sub_degree, i));
    if (!std::holds_alternative<PermMap>(twisted) || !is_ncycle(std::get<PermMap>(twisted), n))
      throw std::logic_error("Frobenius twist of an n-cycle failed to be an n-cycle");
  }
  return divides;
}

CriterionVerdict xh_lambda_criterion(const FieldPtr& field_ptr, const FieldMap& h,
                                     const FieldMap& lambda, const FieldMap& k, std::uint64_t n) {
  const FieldCtx& field = *field_ptr;
  CriterionVerdict v;
  if (n == 0) throw Error(ErrorCode::kBadParams, "n must be >= 1");
  if (h(0) == 0) v.hypothesis_failures.push_back("h(0) = 0");
  if (k(0) != 0) v.hypothesis_failures.push_back("k(0) != 0");

  const std::vector<Elem> image = image_of(field, lambda);
  const auto in_image = membership(field, image);
  auto g = [&](Elem y) { return field.mul(y, k(h(y))); };
  {
    std::vector<bool> used(field.order(), false);
    for (Elem y : image) {
      Elem gy = g(y);
      if (!in_image[gy] || used[gy]) {
        v.hypothesis_failures.push_back("g(y) = y k(h(y)) does not permute lambda(F) (at y = " +
                                        lit(field, y) + ")");
        break;
      }
      used[gy] = true;
    }
  }
  // S = h(lambda(F)) together with 1.
  std::vector<Elem> s_set{1};
  for (Elem y : image) s_set.push_back(h(y));
  std::sort(s_set.begin(), s_set.end());
  s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
  for (Elem a : s_set) {
    const Elem ka = k(a);
    bool ok = true;
    for (Elem alpha = 0; alpha < field.order() && ok; ++alpha) {
      if (lambda(field.mul(a, alpha)) != field.mul(ka, lambda(alpha))) {
        v.hypothesis_failures.push_back("lambda(a x) != k(a) lambda(x) at a = " + lit(field, a) +
                                        ", x = " + lit(field, alpha));
        ok = false;
      }
    }
    if (!ok) break;
  }
  if (!v.applicable()) return v;

  // Points x != 0 reach every y in lambda(F*), including y = 0 when lambda
  // has nonzero roots.
  const std::vector<Elem> domain = image_of(field, lambda, /*skip_zero=*/true);
  v.domain_size = domain.size();
  v.holds = true;
  for (Elem y : domain) {
    Elem prod = 1, z = y;
    for (std::uint64_t i = 0; i < n; ++i) {
      prod = field.mul(prod, h(z));
      z = g(z);
    }
    if (prod != 1) {
      v.holds = false;
      v.witness = Witness{y, prod};
      break;
    }
  }
  bool necessary = true;
  for (Elem y : image) {
    Elem prod = 1, z = y;
    for (std::uint64_t i = 0; i < n; ++i) {
      prod = field.mul(prod, k(h(z)));
      z = g(z);
    }
    if (prod != 1) {
      necessary = false;
      break;
    }
  }
  v.necessary_condition = necessary;
  return v;
}

CriterionVerdict additive_criterion(const SparsePoly& phi, const SparsePoly& psi, const FieldMap& g,
                                    std::uint64_t n, unsigned sub_degree) {
  const FieldPtr& field_ptr = phi.field();
  const FieldCtx& field = *field_ptr;
  if (psi.field()->id() != field.id()) throw Error(ErrorCode::kCtxMismatch, "phi and psi differ in field");
  if (n == 0) throw Error(ErrorCode::kBadParams, "n must be >= 1");
  CriterionVerdict v;
  if (!phi.is_linearized(sub_degree)) v.hypothesis_failures.push_back("phi is not a q-polynomial");
  if (!psi.is_linearized(sub_degree)) v.hypothesis_failures.push_back("psi is not a q-polynomial");
  const std::vector<Elem> phi_table = tabulate(field, phi.as_map());
  const std::vector<Elem> psi_table = tabulate(field, psi.as_map());
  {
    PermResult r = perm_from_map(field_ptr, [&](Elem x) { return phi_table[x]; });
    if (!std::holds_alternative<PermMap>(r) || !is_ncycle(std::get<PermMap>(r), n))
      v.hypothesis_failures.push_back("phi is not an n-cycle permutation");
  }
  for (Elem x = 0; x < field.order(); ++x) {
    if (phi_table[psi_table[x]] != psi_table[phi_table[x]]) {
      v.hypothesis_failures.push_back("phi o psi != psi o phi at x = " + lit(field, x));
      break;
    }
  }
  if (!v.applicable()) return v;

  std::vector<Elem> domain = image_of(field, [&](Elem x) { return psi_table[x]; });
  v.domain_size = domain.size();
  v.holds = true;
  auto fbar = [&](Elem x) { return field.add(phi_table[x], psi_table[g(x)]); };
  for (Elem y : domain) {
    // Horner form of sum_k phi^(n-1-k)(g(fbar^(k)(y))), using additivity of phi.
    Elem acc = 0, z = y;
    for (std::uint64_t k = 0; k < n; ++k) {
      acc = field.add(phi_table[acc], g(z));
      z = fbar(z);
    }
    if (acc != 0) {
      v.holds = false;
      v.witness = Witness{y, acc};
      break;
    }
  }
  return v;
}

CriterionVerdict shift_criterion(const FieldPtr& field_ptr, const FieldMap& g, const ShiftParams& params,
                                 std::uint64_t n) {
  const FieldCtx& field = *field_ptr;
  if (n == 0) throw Error(ErrorCode::kBadParams, "n must be >= 1");
  // Re-validate in case the caller assembled params by hand.
  ShiftParams::make(field, params.i, params.delta, params.sub_degree);
  const long long i = params.i;
  const unsigned d = params.sub_degree;
  std::vector<Elem> s_delta = image_of(field, [&](Elem x) {
    return field.add(field.sub(field.frobenius(x, d, i), x), params.delta);
  });
  const auto in_s = membership(field, s_delta);
  auto h = [&](Elem y) {
    Elem gy = g(y);
    return field.add(field.sub(field.frobenius(gy, d, i), gy), y);
  };
  CriterionVerdict v;
  for (Elem y : s_delta) {
    if (!in_s[h(y)]) {
      v.hypothesis_failures.push_back("h does not map S_delta into itself (y = " + lit(field, y) + ")");
      return v;
    }
  }
  v.domain_size = s_delta.size();
  v.holds = true;
  for (Elem y : s_delta) {
    Elem acc = 0, z = y;
    for (std::uint64_t k = 0; k < n; ++k) {
      acc = field.add(acc, g(z));
      z = h(z);
    }
    if (acc != 0) {
      v.holds = false;
      v.witness = Witness{y, acc};
      break;
    }
  }
  return v;
}

namespace {

std::vector<Elem> sorted_mu(const FieldCtx& field, std::uint64_t ell) {
  std::vector<Elem> mu = field.subgroup_mu(ell);
  std::sort(mu.begin(), mu.end());
  return mu;
}

}  // namespace

CriterionVerdict rs_triple_criterion(const FieldPtr& field_ptr, const FieldMap& h, const RsParams& params) {
  const FieldCtx& field = *field_ptr;
  const RsParams p = RsParams::make(field, params.r, params.s);
  CriterionVerdict v;
  const BigExp r = p.r, s = p.s;
  const BigExp r3m1 = r * r * r - 1;
  if (r3m1 % s != 0) {
    v.failure = "r^3 != 1 (mod s)";
    return v;
  }
  const BigExp e0 = r3m1 / s;
  const BigExp r2 = r * r;
  auto g = [&](Elem y) { return field.mul(field.pow(y, r), field.pow(h(y), s)); };
  const std::vector<Elem> mu = sorted_mu(field, p.ell);
  v.domain_size = mu.size();
  v.holds = true;
  for (Elem y : mu) {
    const Elem gy = g(y);
    const Elem ggy = g(gy);
    Elem phi = field.pow(y, e0);
    phi = field.mul(phi, field.pow(h(y), r2));
    phi = field.mul(phi, field.pow(h(gy), r));
    phi = field.mul(phi, h(ggy));
    if (phi != 1) {
      v.holds = false;
      v.witness = Witness{y, phi};
      break;
    }
  }
  return v;
}

CriterionVerdict rs_single_criterion(const FieldPtr& field_ptr, const FieldMap& h, const RsParams& params,
                                     Elem a, const BigExp& v_in) {
  const FieldCtx& field = *field_ptr;
  const RsParams p = RsParams::make(field, params.r, params.s);
  const BigExp r = p.r, s = p.s, ell = p.ell;
  CriterionVerdict v;
  if ((r * r * r - 1) % s != 0) v.hypothesis_failures.push_back("r^3 != 1 (mod s)");
  BigExp vv = v_in % ell;
  if (vv < 0) vv += ell;
  if ((vv * vv * vv - 1) % ell != 0) v.hypothesis_failures.push_back("v^3 != 1 (mod ell)");
  const std::vector<Elem> mu = sorted_mu(field, p.ell);
  BigExp shape_exp = (vv - r) % ell;
  if (shape_exp < 0) shape_exp += ell;
  for (Elem y : mu) {
    if (field.pow(h(y), s) != field.mul(a, field.pow(y, shape_exp))) {
      v.hypothesis_failures.push_back("h(y)^s != a y^(v-r) at y = " + lit(field, y));
      break;
    }
  }
  if (field.pow(a, vv * vv + vv + 1) != 1) v.hypothesis_failures.push_back("a^(v^2+v+1) != 1");
  if (!v.applicable()) return v;

  const BigExp e0 = (r * r * r - 1) / s;
  const BigExp r2 = r * r;
  const Elem a_v1 = field.pow(a, vv + 1);
  v.domain_size = mu.size();
  v.holds = true;
  for (Elem y : mu) {
    Elem phi = field.pow(y, e0);
    phi = field.mul(phi, field.pow(h(y), r2));
    phi = field.mul(phi, field.pow(h(field.mul(a, field.pow(y, vv))), r));
    phi = field.mul(phi, h(field.mul(a_v1, field.pow(y, vv * vv))));
    if (phi != 1) {
      v.holds = false;
      v.witness = Witness{y, phi};
      break;
    }
  }
  return v;
}

CriterionVerdict stated_inverse_criterion(const FieldPtr& field_ptr, const FieldMap& f,
                                          const FieldMap& claimed_square) {
  const FieldCtx& field = *field_ptr;
  const std::vector<Elem> ft = tabulate(field, f);
  const std::vector<Elem> gt = tabulate(field, claimed_square);
  CriterionVerdict v;
  v.domain_size = field.order();
  v.holds = true;
  for (Elem x = 0; x < field.order(); ++x) {
    if (ft[ft[x]] != gt[x]) {
      v.holds = false;
      v.witness = Witness{x, ft[ft[x]]};
      v.failure = "f(f(x)) differs from the stated inverse";
      break;
    }
    if (ft[gt[x]] != x) {
      v.holds = false;
      v.witness = Witness{x, ft[gt[x]]};
      v.failure = "f composed with the stated inverse is not the identity";
      break;
    }
  }
  return v;
}

}  // namespace ncycle
