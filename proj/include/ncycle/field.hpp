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

#ifndef NCYCLE_FIELD_HPP_
#define NCYCLE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncycle/bigexp.hpp"

namespace ncycle {

/// Raw element handle: the integer whose base-p digits (little-endian) are
/// the polynomial-basis coordinates. Valid only together with its FieldCtx.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// An element bound to the field it was created in. Operations on the
/// checked API reject elements of a different FieldCtx.
class FieldElement {
 public:
  FieldElement(Elem index, std::uint64_t ctx_id) : index_(index), ctx_id_(ctx_id) {}

  Elem index() const noexcept { return index_; }
  std::uint64_t ctx_id() const noexcept { return ctx_id_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Elem index_;
  std::uint64_t ctx_id_;
};

enum class ArithOp { kAdd, kSub, kMul, kNeg, kInv };

struct FieldOptions {
  std::uint64_t cap = kDefaultCap;
};

/// GF(p^n) in a polynomial basis. Immutable after construction; every member
/// function is safe to call concurrently.
///
/// Multiplication runs through discrete log/antilog tables built from the
/// generator, so the field occupies about 8 bytes per element.
class FieldCtx {
 public:
  using Options = FieldOptions;

  /// Builds GF(p^n). Without `modulus`, picks the monic irreducible of degree
  /// n whose coefficient vector is smallest when read as a little-endian
  /// base-p integer (x^3+x+1 over GF(2), not x^3+x^2+1). `modulus` lists n+1
  /// coefficients, constant term first.
  static FieldPtr make(std::uint32_t p, unsigned n,
                       std::optional<std::vector<std::uint32_t>> modulus = {},
                       Options options = {});

  std::uint32_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return q_; }
  std::uint64_t order_minus_1() const noexcept { return q_ - 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }
  const std::vector<std::pair<std::uint64_t, unsigned>>& order_factorization()
      const noexcept {
    return factorization_;
  }
  std::uint64_t id() const noexcept { return id_; }

  // Raw arithmetic on element indices. Callers guarantee indices < order().
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Throws Error(kDivisionByZero) for a == 0.
  Elem inv(Elem a) const;
  /// pow(0, 0) = 1, pow(0, e > 0) = 0; nonzero bases reduce e mod p^n - 1.
  Elem pow(Elem a, const BigExp& e) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^e for nonzero a with e already reduced mod p^n - 1.
  Elem pow_reduced(Elem a, std::uint64_t e_mod) const noexcept {
    if (a == 0) return e_mod == 0 ? 1 : 0;
    return exp_[(std::uint64_t{log_[a]} * e_mod) % (q_ - 1)];
  }
  /// Element g^k where g is the fixed generator.
  Elem gen_pow(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }
  /// Element whose coordinates are (c, 0, ..., 0) for c in [0, p).
  Elem from_int(std::uint64_t c) const noexcept { return static_cast<Elem>(c % p_); }

  /// a^{q^i} with q = p^sub_degree. Throws Error(kInvalidSubfield) unless
  /// sub_degree divides n.
  Elem frobenius(Elem a, unsigned sub_degree, long long i) const;
  /// Tr_{p^n / q}(a), q = p^sub_degree.
  Elem trace(Elem a, unsigned sub_degree) const;
  /// Relative norm N_{p^n / q}(a) = a^{1 + q + ... + q^{m-1}}.
  Elem norm(Elem a, unsigned sub_degree) const;
  /// True iff a lies in GF(p^sub_degree).
  bool in_subfield(Elem a, unsigned sub_degree) const;

  /// mu_ell in generator order: g^{(p^n-1)/ell * i}, i = 0..ell-1.
  std::vector<Elem> subgroup_mu(std::uint64_t ell) const;
  /// GF(p^sub_degree) as a sorted list.
  std::vector<Elem> subfield_members(unsigned sub_degree) const;

  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& coords) const;

  // Checked API over FieldElement.
  FieldElement element(Elem index) const;
  FieldElement arith(ArithOp op, const FieldElement& a,
                     const std::optional<FieldElement>& b = std::nullopt) const;
  FieldElement pow(const FieldElement& a, const BigExp& e) const;
  void check(const FieldElement& a) const;

  /// Element literal: a decimal index in [0, p^n) or "g^k" with k an
  /// expression understood by parse_bigexp.
  Elem parse_element(std::string_view text, const ExprVars& vars = {}) const;
  std::string format_element(Elem a) const;

  std::uint64_t subfield_order(unsigned sub_degree) const;
  void require_subfield(unsigned sub_degree) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization_;
  std::uint64_t id_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> digit_weight_;
};

/// Convenience wrapper for FieldCtx::make.
inline FieldPtr make_field(std::uint32_t p, unsigned n,
                           std::optional<std::vector<std::uint32_t>> modulus = {},
                           FieldCtx::Options options = {}) {
  return FieldCtx::make(p, n, std::move(modulus), options);
}

namespace gfp {

// Dense polynomials over the prime field GF(p), constant term first, no
// trailing zeros. Used for modulus selection and as a test oracle.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p);
Poly rem(Poly a, const Poly& modulus, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Rabin's test: x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for every
/// prime r dividing n.
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace gfp

bool is_prime(std::uint64_t v);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v);

}  // namespace ncycle

#endif  // NCYCLE_FIELD_HPP_
