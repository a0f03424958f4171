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

#ifndef NCYCLE_PERMUTATION_HPP_
#define NCYCLE_PERMUTATION_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "ncycle/bigexp.hpp"
#include "ncycle/field.hpp"
#include "ncycle/poly.hpp"

namespace ncycle {

/// Evaluates `f` on every element of the field, in parallel.
std::vector<Elem> tabulate(const FieldCtx& field, const FieldMap& f);

/// A bijection of GF(p^n) materialized as its image table.
class PermMap {
 public:
  /// Throws Error(kNotPermutation) if `images` is not a bijection of
  /// [0, p^n).
  static PermMap from_table(FieldPtr field, std::vector<Elem> images);
  static PermMap identity(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const Elem> images() const noexcept { return images_; }
  Elem operator()(Elem x) const noexcept { return images_[x]; }
  std::size_t size() const noexcept { return images_.size(); }

  friend bool operator==(const PermMap& a, const PermMap& b) {
    return a.field_->id() == b.field_->id() && a.images_ == b.images_;
  }

 private:
  PermMap(FieldPtr field, std::vector<Elem> images)
      : field_(std::move(field)), images_(std::move(images)) {}

  FieldPtr field_;
  std::vector<Elem> images_;
};

/// Two distinct points with the same image.
struct NotBijective {
  Elem first;
  Elem second;
  Elem image;
};

using PermResult = std::variant<PermMap, NotBijective>;

PermResult perm_from_poly(const SparsePoly& poly);
PermResult perm_from_map(FieldPtr field, const FieldMap& f);
/// Like perm_from_map but throws Error(kNotPermutation) with the witness.
PermMap require_perm(FieldPtr field, const FieldMap& f);

/// (f o g)(x) = f(g(x)).
PermMap compose(const PermMap& f, const PermMap& g);
PermMap invert(const PermMap& f);
/// f^{(n)}; f^{(0)} is the identity and f^{(-n)} = (f^{-1})^{(n)}.
PermMap functional_power(const PermMap& f, long long n);

struct CycleReport {
  bool bijective = true;
  BigExp order = 1;
  std::map<std::uint64_t, std::uint64_t> cycle_type;  // length -> count
  std::uint64_t fixed_points = 0;
};

CycleReport cycle_structure(const PermMap& f);
/// f^{(n)} = identity, i.e. the order divides n. Requires n >= 1.
bool is_ncycle(const PermMap& f, std::uint64_t n);
bool is_ncycle(const CycleReport& report, std::uint64_t n);

}  // namespace ncycle

#endif  // NCYCLE_PERMUTATION_HPP_
