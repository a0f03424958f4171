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

#ifndef NCYCLE_CRITERIA_HPP_
#define NCYCLE_CRITERIA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncycle/bigexp.hpp"
#include "ncycle/field.hpp"
#include "ncycle/poly.hpp"

namespace ncycle {

/// Point at which a criterion's defining expression was evaluated and failed.
struct Witness {
  Elem y;
  Elem lhs;
};

/// Outcome of one criterion. Hypothesis failures are kept apart from a
/// criterion that was evaluated and came out false: when
/// `hypothesis_failures` is non-empty the criterion was not evaluated and
/// `holds` is false.
struct CriterionVerdict {
  bool holds = false;
  std::optional<Witness> witness;
  std::uint64_t domain_size = 0;
  std::vector<std::string> hypothesis_failures;
  // Reason for a false verdict that is not tied to a single point, e.g. a
  // failed congruence on the parameters.
  std::string failure;
  // Product of k(h(g^(i)(y))) equal to 1 everywhere (xh_lambda only).
  std::optional<bool> necessary_condition;

  bool applicable() const noexcept { return hypothesis_failures.empty(); }
};

/// Exponents of x^r h(x^s); ell = (p^n - 1) / s.
struct RsParams {
  std::uint64_t r = 1;
  std::uint64_t s = 1;
  std::uint64_t ell = 0;

  /// Throws Error(kBadParams) unless r >= 1, s | p^n - 1 and gcd(r, s) = 1.
  static RsParams make(const FieldCtx& field, std::uint64_t r, std::uint64_t s);
};

/// Parameters of g(x^{q^i} - x + delta) + x with q = p^sub_degree.
struct ShiftParams {
  unsigned i = 1;
  Elem delta = 0;
  unsigned sub_degree = 1;
  // gcd(i, m); carried for completeness, not used by the check.
  unsigned ell = 1;

  /// Throws Error(kBadParams) unless 1 <= i <= m - 1.
  static ShiftParams make(const FieldCtx& field, unsigned i, Elem delta, unsigned sub_degree);
};

struct AgwReport {
  bool commutes = false;
  bool g_bijective = false;
  bool fibers_injective = false;
  // Bijectivity of f computed directly, for comparison with `holds`.
  bool f_bijective = false;
  bool holds = false;
  // First x with lambda_bar(f(x)) != g(lambda(x)), or first fiber collision.
  std::optional<Elem> witness;
};

/// Checks the commuting square lambda_bar o f = g o lambda together with
/// bijectivity of g between the images and injectivity of f on each fiber
/// of lambda. The images are materialized; when `image` / `image_bar` are
/// given they must equal lambda(F) / lambda_bar(F), otherwise
/// Error(kNotSurjective). Throws std::logic_error if the square commutes and
/// the verdict disagrees with the bijectivity of f.
AgwReport agw_commute_check(const FieldPtr& field, const FieldMap& f, const FieldMap& lambda,
                            const FieldMap& lambda_bar, const FieldMap& g,
                            const std::optional<std::vector<Elem>>& image = std::nullopt,
                            const std::optional<std::vector<Elem>>& image_bar = std::nullopt);

/// x^d is an n-cycle on GF(q) iff d^n = 1 mod q - 1. Throws
/// Error(kNotPermutation) if gcd(d, q - 1) != 1.
bool monomial_ncycle(const BigExp& d, std::uint64_t field_order_minus_1, std::uint64_t n);

/// For f with coefficients in GF(q) that is an n-cycle on GF(q^m): returns
/// m | n*i, and when true confirms that f(x)^{q^i} is an n-cycle as well.
/// Throws Error(kPrereqNotNcycle) if f is not an n-cycle and
/// Error(kBadParams) if a coefficient lies outside GF(q).
bool frobenius_twist_ncycle(const SparsePoly& f, unsigned sub_degree, unsigned i, std::uint64_t n);

/// f(x) = x h(lambda(x)) with g(y) = y k(h(y)). Verifies the scaling
/// hypotheses, then that prod_{i<n} h(g^(i)(y)) = 1 for every y in
/// lambda(F*). Also records whether prod k(h(g^(i)(y))) = 1 on lambda(F).
CriterionVerdict xh_lambda_criterion(const FieldPtr& field, const FieldMap& h,
                                     const FieldMap& lambda, const FieldMap& k, std::uint64_t n);

/// f(x) = phi(x) + g(psi(x)) for q-polynomials phi, psi with phi an n-cycle
/// and phi o psi = psi o phi. Holds iff
/// sum_{k<n} phi^(n-1-k)(g(fbar^(k)(y))) = 0 on psi(F), where
/// fbar(x) = phi(x) + psi(g(x)).
CriterionVerdict additive_criterion(const SparsePoly& phi, const SparsePoly& psi, const FieldMap& g,
                                    std::uint64_t n, unsigned sub_degree);

/// f(x) = g(x^{q^i} - x + delta) + x. Holds iff sum_{k<n} g(h^(k)(y)) = 0 on
/// S_delta, where h(y) = g(y)^{q^i} - g(y) + y.
CriterionVerdict shift_criterion(const FieldPtr& field, const FieldMap& g, const ShiftParams& params,
                                 std::uint64_t n);

/// Triple-cycle test for f(x) = x^r h(x^s): r^3 = 1 mod s and
/// y^{(r^3-1)/s} h(y)^{r^2} h(g(y))^r h(g(g(y))) = 1 on mu_ell, with
/// g(y) = y^r h(y)^s.
CriterionVerdict rs_triple_criterion(const FieldPtr& field, const FieldMap& h, const RsParams& params);

/// Variant for h with h(y)^s = a y^{v-r} on mu_ell (v^3 = 1 mod ell,
/// a^{v^2+v+1} = 1): holds iff
/// y^{(r^3-1)/s} h(y)^{r^2} h(a y^v)^r h(a^{v+1} y^{v^2}) = 1 on mu_ell.
CriterionVerdict rs_single_criterion(const FieldPtr& field, const FieldMap& h, const RsParams& params,
                                     Elem a, const BigExp& v);

/// f o f equals `claimed_square` and f o claimed_square is the identity;
/// together they give f^(3) = identity with the stated inverse.
CriterionVerdict stated_inverse_criterion(const FieldPtr& field, const FieldMap& f,
                                          const FieldMap& claimed_square);

}  // namespace ncycle

#endif  // NCYCLE_CRITERIA_HPP_
