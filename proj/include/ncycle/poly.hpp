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

#ifndef NCYCLE_POLY_HPP_
#define NCYCLE_POLY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncycle/bigexp.hpp"
#include "ncycle/field.hpp"

namespace ncycle {

/// A map GF(p^n) -> GF(p^n) given by evaluation on raw element indices.
using FieldMap = std::function<Elem(Elem)>;

struct Term {
  Elem coeff;
  BigExp exp;
};

/// Polynomial stored as (coefficient, exponent) terms with arbitrary
/// precision exponents. Always canonical: exponents strictly increasing,
/// coefficients nonzero. Exponents are never reduced mod p^n - 1 because
/// x^0 and x^{p^n-1} differ at x = 0.
class SparsePoly {
 public:
  SparsePoly(FieldPtr field, std::vector<Term> terms);

  static SparsePoly zero(FieldPtr field) { return SparsePoly(std::move(field), {}); }
  static SparsePoly constant(FieldPtr field, Elem c) { return monomial(std::move(field), c, 0); }
  static SparsePoly monomial(FieldPtr field, Elem c, const BigExp& e);
  static SparsePoly x(FieldPtr field) { return monomial(field, 1, 1); }

  /// Parses "c*x^e+c*x^e+..."; coefficients are element literals, exponents
  /// are parse_bigexp expressions over `vars`. Also accepts the shorthands
  /// "x^e", "c*x", "c" and '-' between or before terms. Exponents containing
  /// '+' or '-' must be parenthesized.
  static SparsePoly parse(FieldPtr field, std::string_view text, const ExprVars& vars = {});

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Elem operator()(Elem x) const;
  FieldElement eval(const FieldElement& x) const;
  FieldMap as_map() const;

  std::string to_string() const;

  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly scaled(Elem c) const;
  SparsePoly pow(unsigned k) const;
  /// h(x) -> h(x^s).
  SparsePoly compose_monomial(const BigExp& s) const;
  /// h(x) -> x^r h(x).
  SparsePoly shifted(const BigExp& r) const;
  /// f(x)^{q^i} = sum c^{q^i} x^{e q^i}, q = p^sub_degree, i >= 0.
  SparsePoly frobenius(unsigned sub_degree, unsigned i) const;
  /// Tr_{p^n/q}(f(x)) expanded as a sparse polynomial.
  SparsePoly trace(unsigned sub_degree) const;

  bool coefficients_in_subfield(unsigned sub_degree) const;
  /// True iff every exponent is a power of p^sub_degree (a q-polynomial).
  bool is_linearized(unsigned sub_degree) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  void check_same_field(const SparsePoly& other) const;

  FieldPtr field_;
  std::vector<Term> terms_;
  // Per-term exponent mod p^n - 1, used on nonzero arguments.
  std::vector<std::uint64_t> exp_mod_;
};

}  // namespace ncycle

#endif  // NCYCLE_POLY_HPP_
