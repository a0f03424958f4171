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


#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/walsh.hpp"

using namespace ncycle;

namespace {

PermMap power_map(const FieldPtr& F, std::uint64_t d) {
  return require_perm(F, [&](Elem x) { return F->pow(x, d); });
}

PermMap random_perm(const FieldPtr& F, std::mt19937_64& rng, bool involution) {
  std::vector<Elem> t(F->order());
  std::iota(t.begin(), t.end(), 0);
  if (involution) {
    std::vector<Elem> order = t;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t j = 0; j + 1 < order.size(); j += 2) std::swap(t[order[j]], t[order[j + 1]]);
  } else {
    std::shuffle(t.begin(), t.end(), rng);
  }
  return PermMap::from_table(F, t);
}

}  // namespace

TEST_SUITE("walsh") {
  TEST_CASE("zero frequencies count every point") {
    auto F = make_field(3, 2);
    auto c = walsh_counts(PermMap::identity(F), 0, 0);
    CHECK(c == std::vector<std::int64_t>{9, 0, 0});
    auto F2 = make_field(2, 4);
    CHECK(walsh_coefficient(PermMap::identity(F2), 0, 0).as_signed() == 16);
  }

  TEST_CASE("identity on GF(8) at u = v") {
    auto F = make_field(2, 3);
    for (Elem u = 1; u < 8; ++u) CHECK(walsh_coefficient(PermMap::identity(F), u, u).as_signed() == 8);
  }

  TEST_CASE("counts match direct summation") {
    std::mt19937_64 rng(11);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}}) {
      auto F = make_field(p, n);
      PermMap f = random_perm(F, rng, false);
      for (Elem u = 0; u < F->order(); u += 3)
        for (Elem v = 0; v < F->order(); v += 2) {
          std::vector<std::int64_t> expect(p, 0);
          for (Elem x = 0; x < F->order(); ++x) {
            // Tr(vF(x)) + Tr(ux), traced to the prime field via the sum of conjugates.
            Elem s = 0, a = F->add(F->mul(v, f(x)), F->mul(u, x));
            for (unsigned i = 0; i < n; ++i, a = F->pow(a, std::uint64_t{p})) s = F->add(s, a);
            ++expect[s];
          }
          CHECK(walsh_counts(f, u, v) == expect);
        }
    }
  }

  TEST_CASE("involution test on small examples") {
    auto F = make_field(2, 3);
    CHECK(walsh_involution_test(PermMap::identity(F)).symmetric);
    WalshSymmetry sq = walsh_involution_test(power_map(F, 2));
    CHECK_FALSE(sq.symmetric);
    REQUIRE(sq.witness);
    auto [u, v] = *sq.witness;
    CHECK(walsh_coefficient(power_map(F, 2), u, v) != walsh_coefficient(power_map(F, 2), v, u));
    CHECK(walsh_involution_test(power_map(F, 6)).symmetric);
  }

  TEST_CASE("symmetry tracks the involution property") {
    std::mt19937_64 rng(13);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
      auto F = make_field(p, n);
      for (int k = 0; k < 10; ++k) {
        PermMap f = random_perm(F, rng, k % 2 == 0);
        CHECK(walsh_involution_test(f).symmetric == is_ncycle(f, 2));
      }
    }
  }

  TEST_CASE("odd characteristic respects the size cap") {
    CHECK_THROWS_AS(walsh_involution_test(PermMap::identity(make_field(3, 8))), Error);
    CHECK_THROWS_AS(walsh_involution_test(PermMap::identity(make_field(3, 3)), 20), Error);
  }
}
