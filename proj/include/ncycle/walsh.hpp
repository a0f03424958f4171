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

#ifndef NCYCLE_WALSH_HPP_
#define NCYCLE_WALSH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncycle/permutation.hpp"

namespace ncycle {

inline constexpr std::uint64_t kWalshCap = std::uint64_t{1} << 12;

/// An element sum_j counts[j] * w^j of Z[w], w a primitive p-th root of
/// unity. Since 1 + w + ... + w^{p-1} = 0, subtracting the minimum count
/// gives a canonical representative; equality compares canonical forms.
struct WalshValue {
  std::vector<std::int64_t> counts;

  static WalshValue canonical(std::vector<std::int64_t> counts);
  /// For p = 2 the value is the integer counts[0] - counts[1].
  std::int64_t as_signed() const { return counts.at(0) - counts.at(1); }

  friend bool operator==(const WalshValue&, const WalshValue&) = default;
};

/// Raw (uncanonicalized) counts of sum_x w^{Tr(v F(x)) + Tr(u x)}, computed
/// directly from the definition.
std::vector<std::int64_t> walsh_counts(const PermMap& f, Elem u, Elem v);
WalshValue walsh_coefficient(const PermMap& f, Elem u, Elem v);

/// W_F(u, v) for all u at fixed v, by a fast Walsh-Hadamard transform when
/// p = 2 and a radix-p character transform otherwise. Indexed by u.
std::vector<WalshValue> walsh_component_spectrum(const PermMap& f, Elem v);

struct WalshSymmetry {
  bool symmetric = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (u, v) with W(u,v) != W(v,u)
};

/// Checks W_F(u, v) = W_F(v, u) over all pairs. Throws Error(kCapExceeded)
/// for fields larger than `cap`.
WalshSymmetry walsh_involution_test(const PermMap& f, std::uint64_t cap = kWalshCap);

}  // namespace ncycle

#endif  // NCYCLE_WALSH_HPP_
