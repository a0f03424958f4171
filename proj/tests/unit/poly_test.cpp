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


#include <cstdint>
#include <random>

#include "doctest.h"
#include "ncycle/bigexp.hpp"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/poly.hpp"

using namespace ncycle;

TEST_SUITE("poly") {
  TEST_CASE("big exponent expressions") {
    CHECK(parse_bigexp("187245") == 187245);
    CHECK(parse_bigexp("(q^2+q+1)*k", {{"q", 64}, {"k", 45}}) == 187245);
    CHECK(parse_bigexp("2^100") == BigExp(1) << 100);
    CHECK(mod_u64(parse_bigexp("2^100"), 63) == 16);
    CHECK_THROWS_AS(parse_bigexp("q+"), Error);
  }

  TEST_CASE("evaluation") {
    auto F = make_field(2, 12);
    auto x = SparsePoly::x(F);
    for (Elem a : {0u, 1u, 77u, 4095u}) CHECK(x(a) == a);
    auto h = SparsePoly::parse(F, "1+x^45+x^25");
    CHECK(h(0) == 1);
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) {
      const Elem a = rng() % F->order();
      CHECK(h(a) == F->add(F->add(1, F->pow(a, std::uint64_t{45})), F->pow(a, std::uint64_t{25})));
    }
  }

  TEST_CASE("huge exponents act through the multiplicative order") {
    auto F = make_field(3, 2);
    auto big = SparsePoly::parse(F, "x^(8*10^30+3)");
    auto small = SparsePoly::parse(F, "x^3");
    for (Elem a = 0; a < 9; ++a) CHECK(big(a) == small(a));
    CHECK(big.to_string() == "1*x^8000000000000000000000000000003");
  }

  TEST_CASE("algebra agrees with pointwise arithmetic") {
    auto F = make_field(5, 2);
    auto f = SparsePoly::parse(F, "3*x^2+g^5*x^7+1");
    auto g = SparsePoly::parse(F, "2*x+x^24");
    for (Elem a = 0; a < F->order(); ++a) {
      CHECK((f + g)(a) == F->add(f(a), g(a)));
      CHECK((f - g)(a) == F->sub(f(a), g(a)));
      CHECK((f * g)(a) == F->mul(f(a), g(a)));
      CHECK(f.pow(3)(a) == F->pow(f(a), std::uint64_t{3}));
      CHECK(f.scaled(4)(a) == F->mul(4, f(a)));
      CHECK(f.compose_monomial(6)(a) == f(F->pow(a, std::uint64_t{6})));
      CHECK(f.shifted(2)(a) == F->mul(F->pow(a, std::uint64_t{2}), f(a)));
      CHECK(f.frobenius(1, 1)(a) == F->pow(f(a), std::uint64_t{5}));
      CHECK(f.trace(1)(a) == F->trace(f(a), 1));
    }
  }

  TEST_CASE("parse round trip") {
    auto F = make_field(7, 2);
    auto f = SparsePoly::parse(F, "-x^3+5*x+2");
    CHECK(SparsePoly::parse(F, f.to_string()) == f);
    CHECK(f(0) == 2);
  }

  TEST_CASE("linearized and subfield predicates") {
    auto F = make_field(2, 6);
    CHECK(SparsePoly::parse(F, "x^4+x").is_linearized(2));
    CHECK_FALSE(SparsePoly::parse(F, "x^2+x").is_linearized(2));
    CHECK(SparsePoly::parse(F, "x^2+x").is_linearized(1));
    CHECK(SparsePoly::parse(F, "g^21*x").coefficients_in_subfield(2));
    CHECK_FALSE(SparsePoly::parse(F, "g*x").coefficients_in_subfield(2));
  }

  TEST_CASE("mixing fields is rejected") {
    auto F = make_field(2, 3);
    auto G = make_field(2, 3);
    CHECK_THROWS_AS(SparsePoly::x(F) + SparsePoly::x(G), Error);
  }
}
