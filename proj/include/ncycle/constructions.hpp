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

#ifndef NCYCLE_CONSTRUCTIONS_HPP_
#define NCYCLE_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncycle/bigexp.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/field.hpp"
#include "ncycle/poly.hpp"

namespace ncycle {

using Params = nlohmann::ordered_json;

enum class LambdaVariant { kLambda1, kLambda2 };

std::string to_string(LambdaVariant variant);
/// Accepts "lambda1" / "lambda2" (or "1" / "2"); throws Error(kInvalidSpec).
LambdaVariant parse_lambda_variant(std::string_view text);

/// lambda1(x) = Tr_{q^m/q}(x^n); lambda2(x) = sum over 0 <= i_1 < ... < i_n < m
/// of x^{q^{i_1} + ... + q^{i_n}}, with q = p^sub_degree.
struct LambdaSpec {
  LambdaVariant variant = LambdaVariant::kLambda1;
  unsigned n = 1;
  unsigned sub_degree = 1;

  /// Throws Error(kInvalidSpec) if sub_degree does not divide the field
  /// degree, n = 0, or (lambda2) n > m.
  static LambdaSpec make(const FieldCtx& field, LambdaVariant variant, unsigned n, unsigned sub_degree);
};

/// Value lies in GF(q). lambda2 is the n-th elementary symmetric polynomial
/// of the conjugates x, x^q, ..., x^{q^{m-1}}.
Elem eval_lambda(const FieldCtx& field, const LambdaSpec& spec, Elem x);
FieldElement eval_lambda(const FieldCtx& field, const LambdaSpec& spec, const FieldElement& x);
FieldMap lambda_map(FieldPtr field, LambdaSpec spec);

/// A concrete member of one of the families, ready for checking.
struct FamilyInstance {
  std::string family;
  Params params;
  FieldPtr field;
  FieldMap f;
  // Explicit polynomial when it is cheap to write down; otherwise `formula`
  // is the only textual form.
  std::optional<SparsePoly> poly;
  // Closed-form inverse (trace_theta only).
  std::optional<SparsePoly> inverse;
  std::string formula;
  std::uint64_t claimed_n = 1;
  std::string criterion_name;
  std::function<CriterionVerdict()> criterion;
  std::vector<std::string> notes;
};

struct PrimePower {
  std::uint32_t p;
  unsigned k;
};

/// Throws Error(kBadParams) unless q = p^k with p prime, k >= 1.
PrimePower prime_power(std::uint64_t q);
/// GF(q^m) built with the default modulus.
FieldPtr extension_field(std::uint64_t q, unsigned m, FieldOptions options = {});

// ---------------------------------------------------------------------------
// x h(lambda(x))

enum class XhVariant { kTheta, kInvolution, kAbc, kCustom };

std::string to_string(XhVariant variant);

struct XhLambdaParams {
  XhVariant variant = XhVariant::kInvolution;
  LambdaVariant lambda = LambdaVariant::kLambda1;
  unsigned sub_degree = 1;
  // Cycle length; forced to 2 for kInvolution and kAbc.
  unsigned n = 2;
  Elem theta = 0;              // kTheta: primitive n-th root of unity in GF(q)
  std::int64_t a = 0, b = 0;   // kAbc, reduced mod p
  std::uint64_t c = 0;         // kAbc
  std::optional<SparsePoly> h; // kCustom: coefficients in GF(q)
};

/// Builds x h(lambda(x)) and checks h(y)^n = 1 on GF(q) by exhaustion.
/// Errors: kBadParams, kInvalidSpec, kHValueNotRootOfUnity.
FamilyInstance build_xh_lambda(const FieldPtr& field, const XhLambdaParams& params);
/// Same instance without any parameter validation.
FamilyInstance assemble_xh_lambda(const FieldPtr& field, const LambdaSpec& spec, const SparsePoly& h,
                                  std::uint64_t n, std::string family, Params params);

// ---------------------------------------------------------------------------
// phi(x) + g(psi(x))

enum class AdditiveVariant { kTraceG1, kPowerG2, kCTraceQ2, kXqGTrace };

std::string to_string(AdditiveVariant variant);

struct AdditiveParams {
  AdditiveVariant variant = AdditiveVariant::kTraceG1;
  unsigned sub_degree = 1;
  std::optional<SparsePoly> H;    // kTraceG1, kPowerG2
  std::optional<SparsePoly> psi;  // kTraceG1, kPowerG2; default x^q - x
  BigExp s = 1;                   // kPowerG2, kCTraceQ2
  Elem c = 0;                     // kCTraceQ2
  std::optional<SparsePoly> g;    // kXqGTrace
};

/// x + g(psi(x)) (claimed_n = p) or x^q + g(Tr_{q^3/q}(x)) (claimed_n = 3).
/// Errors: kBadParams, kKernelViolation.
FamilyInstance build_additive(const FieldPtr& field, const AdditiveParams& params);
FamilyInstance assemble_additive(const SparsePoly& phi, const SparsePoly& psi, FieldMap g,
                                 const std::string& g_text, std::uint64_t n, unsigned sub_degree,
                                 std::string family, Params params);

// ---------------------------------------------------------------------------
// x + g(x^{q^i} - x + delta)

enum class ShiftVariant { kTraceG1, kPowerG2 };

std::string to_string(ShiftVariant variant);

struct ShiftFamilyParams {
  ShiftVariant variant = ShiftVariant::kPowerG2;
  unsigned sub_degree = 1;
  unsigned i = 1;
  Elem delta = 0;
  std::optional<SparsePoly> H;  // default x
  BigExp s = 1;                 // kPowerG2
};

/// g = Tr_{q^m/q^i}(H) or H^s; claimed_n = p.
/// Errors: kBadParams, kDegenerateH.
FamilyInstance build_shift(const FieldPtr& field, const ShiftFamilyParams& params);
FamilyInstance assemble_shift(const FieldPtr& field, const ShiftParams& shift, FieldMap g,
                              const std::string& g_text, std::uint64_t n, std::string family,
                              Params params);

// ---------------------------------------------------------------------------
// x^r h(x^s)

/// x^r h(x^s) with the triple-cycle criterion; no validation beyond RsParams.
FamilyInstance assemble_rs(const FieldPtr& field, std::uint64_t r, std::uint64_t s, const SparsePoly& h,
                           std::string family, Params params);

/// x(1 + x^{k(q^2+q+1)} + x^{2k(q^2+q+1)}) over GF(q^3); q = 2^{3j},
/// 7k = 0 mod q-1, k = 3 mod 7.
FamilyInstance build_rs_2to3m(std::uint64_t q, std::uint64_t k, FieldOptions options = {});
/// Every k in [1, 7(q-1)] accepted by build_rs_2to3m.
std::vector<std::uint64_t> search_k_2to3m(std::uint64_t q);

/// x^q h(x^{q-1}) over GF(q^3) with h = 1 + alpha x^{L/3} + x^{2L/3},
/// L = q^2+q+1; q a power of 4, alpha in GF(q) with alpha^3 = 1.
/// `field` must be GF(q^3).
FamilyInstance build_xq_h_alpha(const FieldPtr& field, Elem alpha);

/// All (t, m) in [0, q+1)^2 satisfying the cubic precondition on t and the
/// three congruences mod q+1; q = 2^{12j-6}. Sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> solve_jieguo_congruences(std::uint64_t q);
/// True iff (t, m) satisfies all four congruences mod q+1.
bool jieguo_congruences_hold(std::uint64_t q, std::uint64_t t, std::uint64_t m);
/// x h(x^{q-1}) over GF(q^2), h = x^m + x^{(mq-2tq) mod (q+1)} + x^t.
FamilyInstance build_jieguo(std::uint64_t q, std::uint64_t t, std::uint64_t m, FieldOptions options = {});

/// x + theta Tr_{q^3/q}(x^{(q^2+q)/2}) over GF(q^3) with its stated inverse
/// x + theta^2 Tr_{q^3/q}(x^{(q^2+q)/2}). `field` must be GF(q^3).
FamilyInstance build_trace_theta(const FieldPtr& field, Elem theta);

/// Elements y of GF(p^sub_degree) with y^3 = 1, ascending.
std::vector<Elem> cube_roots_of_unity(const FieldCtx& field, unsigned sub_degree);

/// Rewrites x^e (e >= 1) as x^{((e-1) mod (p^n-1)) + 1}; same map on GF(p^n).
SparsePoly reduce_exponents(const SparsePoly& poly);

}  // namespace ncycle

#endif  // NCYCLE_CONSTRUCTIONS_HPP_
