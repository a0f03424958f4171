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
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"

using namespace ncycle;

namespace {

// Schoolbook product of coordinate vectors reduced by the modulus, done
// without the log tables.
std::vector<std::uint32_t> slow_mul(const FieldCtx& F, std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> b) {
  const unsigned n = F.n();
  const std::uint32_t p = F.p();
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  const auto& mod = F.modulus();
  for (int d = 2 * static_cast<int>(n) - 1; d >= static_cast<int>(n); --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned k = 0; k <= n; ++k)
      prod[d - n + k] = (prod[d - n + k] + (p - c) * mod[k]) % p;
  }
  return {prod.begin(), prod.begin() + n};
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no Error thrown");
  return ErrorCode::kParse;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime field has generator 1 for p = 2") {
    auto F = make_field(2, 1);
    CHECK(F->order() == 2);
    CHECK(F->generator() == 1);
  }

  TEST_CASE("default cubic modulus over GF(2) is x^3+x+1") {
    auto F = make_field(2, 3);
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    // First monic cubic without roots in little-endian coefficient order.
    std::vector<std::uint32_t> first;
    for (unsigned v = 0; v < 8 && first.empty(); ++v) {
      std::vector<std::uint32_t> c{v & 1u, (v >> 1) & 1u, (v >> 2) & 1u, 1};
      bool root = false;
      for (unsigned x = 0; x < 2; ++x) root = root || ((c[0] + c[1] * x + c[2] * x + c[3] * x) % 2 == 0);
      if (!root) first = c;
    }
    CHECK(F->modulus() == first);
  }

  TEST_CASE("reducible modulus and non-prime characteristic are rejected") {
    CHECK(code_of([] { make_field(2, 3, std::vector<std::uint32_t>{1, 0, 0, 1}); }) == ErrorCode::kNotIrreducible);
    CHECK(code_of([] { make_field(6, 1); }) == ErrorCode::kNotPrime);
    CHECK(code_of([] { make_field(2, 30); }) == ErrorCode::kCapExceeded);
    CHECK(code_of([] { make_field(2, 10, std::nullopt, FieldOptions{512}); }) == ErrorCode::kCapExceeded);
  }

  TEST_CASE("basic arithmetic") {
    auto F7 = make_field(7, 1);
    CHECK(F7->mul(3, 5) == 1);
    CHECK(F7->pow(3, std::uint64_t{6}) == 1);
    CHECK(F7->pow(0, std::uint64_t{0}) == 1);
    CHECK(F7->pow(0, std::uint64_t{5}) == 0);
    CHECK(F7->pow(3, BigExp(1) + boost::multiprecision::pow(BigExp(6), 40)) == 3);
    auto F4 = make_field(2, 2);
    CHECK(F4->add(2, 2) == 0);
    auto F8 = make_field(2, 3);
    CHECK(F8->mul(2, 4) == 3);  // x * x^2 = x + 1
    CHECK(code_of([&] { F8->inv(0); }) == ErrorCode::kDivisionByZero);
  }

  TEST_CASE("multiplication matches schoolbook reduction") {
    std::mt19937_64 rng(1);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 9}, {3, 4}, {5, 3}, {7, 2}}) {
      auto F = make_field(p, n);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F->order() - 1));
      for (int k = 0; k < 300; ++k) {
        const Elem a = pick(rng), b = pick(rng);
        CHECK(F->coords(F->mul(a, b)) == slow_mul(*F, F->coords(a), F->coords(b)));
        if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->add(F->sub(a, b), b) == a);
        CHECK(F->add(a, F->neg(a)) == 0);
      }
    }
  }

  TEST_CASE("checked element API") {
    auto F = make_field(3, 2);
    auto G = make_field(3, 2);
    FieldElement a = F->element(4);
    FieldElement b = G->element(4);
    CHECK(code_of([&] { F->arith(ArithOp::kAdd, a, b); }) == ErrorCode::kCtxMismatch);
    CHECK(code_of([&] { F->element(9); }) == ErrorCode::kBadParams);
    CHECK(F->arith(ArithOp::kMul, a, F->arith(ArithOp::kInv, a)).index() == 1);
  }

  TEST_CASE("frobenius") {
    auto F4 = make_field(2, 2);
    CHECK(F4->frobenius(2, 1, 1) == 3);  // w^2 = w + 1
    auto F64 = make_field(2, 6);
    for (Elem a = 0; a < 64; ++a) {
      CHECK(F64->frobenius(a, 1, 0) == a);
      CHECK(F64->frobenius(a, 6, 1) == a);
      CHECK(F64->frobenius(a, 2, 1) == F64->pow(a, std::uint64_t{4}));
      CHECK(F64->frobenius(F64->frobenius(a, 1, 1), 1, -1) == a);
    }
    CHECK(code_of([&] { F64->frobenius(1, 4, 1); }) == ErrorCode::kInvalidSubfield);
  }

  TEST_CASE("trace and norm") {
    auto F4 = make_field(2, 2);
    CHECK(F4->trace(1, 1) == 0);
    CHECK(F4->trace(2, 1) == 1);
    auto F = make_field(3, 4);
    for (Elem a = 0; a < F->order(); ++a) {
      CHECK(F->trace(a, 4) == a);
      Elem sum = 0, prod = 1, c = a;
      for (int i = 0; i < 2; ++i, c = F->pow(c, std::uint64_t{9})) {
        sum = F->add(sum, c);
        prod = F->mul(prod, c);
      }
      CHECK(F->trace(a, 2) == sum);
      CHECK(F->norm(a, 2) == prod);
      CHECK(F->in_subfield(F->trace(a, 2), 2));
    }
  }

  TEST_CASE("roots of unity") {
    auto F7 = make_field(7, 1);
    CHECK(F7->subgroup_mu(1) == std::vector<Elem>{1});
    auto mu2 = F7->subgroup_mu(2);
    CHECK(std::set<Elem>(mu2.begin(), mu2.end()) == std::set<Elem>{1, 6});
    auto F = make_field(2, 12);
    auto mu = F->subgroup_mu(65);
    std::set<Elem> expected;
    for (Elem x = 1; x < F->order(); ++x)
      if (F->pow(x, std::uint64_t{65}) == 1) expected.insert(x);
    CHECK(mu.size() == 65);
    CHECK(std::set<Elem>(mu.begin(), mu.end()) == expected);
    CHECK(code_of([&] { F->subgroup_mu(7 * 64); }) == ErrorCode::kNotDivisor);
  }

  TEST_CASE("subfields") {
    auto F4 = make_field(2, 2);
    CHECK(F4->subfield_members(1) == std::vector<Elem>{0, 1});
    auto F = make_field(2, 6);
    auto sub = F->subfield_members(3);
    REQUIRE(sub.size() == 8);
    std::set<Elem> s(sub.begin(), sub.end());
    for (Elem a : sub)
      for (Elem b : sub) {
        CHECK(s.count(F->add(a, b)));
        CHECK(s.count(F->mul(a, b)));
      }
    CHECK(F->subfield_members(6).size() == 64);
  }

  TEST_CASE("element literals") {
    auto F = make_field(2, 6);
    CHECK(F->parse_element("g^3") == F->gen_pow(3));
    CHECK(F->parse_element("17") == 17);
    CHECK(F->parse_element("g^(q-1)", {{"q", 64}}) == 1);
    CHECK(code_of([&] { F->parse_element("64"); }) == ErrorCode::kParse);
  }
}
