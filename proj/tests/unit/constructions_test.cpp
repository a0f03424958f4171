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
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "ncycle/constructions.hpp"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/oracle.hpp"
#include "ncycle/poly.hpp"

using namespace ncycle;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no Error thrown");
  return ErrorCode::kParse;
}

std::uint64_t oracle_order(const FamilyInstance& inst) {
  OracleVerdict v = exhaustive_verdict(inst.field, inst.f, {inst.claimed_n});
  return v.order ? static_cast<std::uint64_t>(*v.order) : 0;
}

bool triple(const FamilyInstance& inst) {
  return exhaustive_verdict(inst.field, inst.f, {3}).is_ncycle_at.at(3);
}

// Sum over index subsets {i_1 < ... < i_n} of prod x^{q^{i_j}}, by enumeration.
Elem lambda2_by_subsets(const FieldCtx& F, Elem x, unsigned n, unsigned sub) {
  const unsigned m = F.n() / sub;
  std::vector<Elem> conj(m);
  for (unsigned i = 0; i < m; ++i) conj[i] = F.frobenius(x, sub, i);
  Elem sum = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n) continue;
    Elem prod = 1;
    for (unsigned i = 0; i < m; ++i)
      if (mask >> i & 1u) prod = F.mul(prod, conj[i]);
    sum = F.add(sum, prod);
  }
  return sum;
}

Elem primitive_cube_root(const FieldCtx& F, unsigned sub) {
  for (Elem c : cube_roots_of_unity(F, sub))
    if (c != 1) return c;
  return 0;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("lambda maps") {
    for (auto [p, n, sub] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
             {3, 4, 1}, {2, 6, 2}, {5, 3, 1}, {2, 6, 1}}) {
      auto F = make_field(p, n);
      const unsigned m = n / sub;
      for (unsigned k = 1; k <= m; ++k) {
        LambdaSpec l1 = LambdaSpec::make(*F, LambdaVariant::kLambda1, k, sub);
        LambdaSpec l2 = LambdaSpec::make(*F, LambdaVariant::kLambda2, k, sub);
        CHECK(eval_lambda(*F, l1, 0) == 0);
        for (Elem x = 0; x < F->order(); x += 7) {
          CHECK(eval_lambda(*F, l2, x) == lambda2_by_subsets(*F, x, k, sub));
          CHECK(eval_lambda(*F, l1, x) == F->trace(F->pow(x, std::uint64_t{k}), sub));
          for (Elem a : F->subfield_members(sub)) {
            const Elem ak = F->pow(a, std::uint64_t{k});
            CHECK(eval_lambda(*F, l1, F->mul(a, x)) == F->mul(ak, eval_lambda(*F, l1, x)));
            CHECK(eval_lambda(*F, l2, F->mul(a, x)) == F->mul(ak, eval_lambda(*F, l2, x)));
          }
        }
      }
      LambdaSpec norm = LambdaSpec::make(*F, LambdaVariant::kLambda2, m, sub);
      for (Elem x = 0; x < F->order(); x += 5) CHECK(eval_lambda(*F, norm, x) == F->norm(x, sub));
    }
    auto F = make_field(3, 2);
    CHECK(code_of([&] { LambdaSpec::make(*F, LambdaVariant::kLambda2, 3, 1); }) == ErrorCode::kInvalidSpec);
    CHECK(code_of([&] { LambdaSpec::make(*F, LambdaVariant::kLambda1, 2, 3); }) == ErrorCode::kInvalidSpec);
    CHECK(parse_lambda_variant("lambda2") == LambdaVariant::kLambda2);
  }

  TEST_CASE("involution corollary over GF(25)") {
    auto F = make_field(5, 2);
    XhLambdaParams xp;
    xp.variant = XhVariant::kInvolution;
    FamilyInstance inst = build_xh_lambda(F, xp);
    CHECK(inst.claimed_n == 2);
    for (Elem x = 0; x < F->order(); ++x) {
      const Elem l = F->trace(F->mul(x, x), 1);
      const Elem h = F->sub(1, F->mul(2, F->pow(l, std::uint64_t{4})));
      CHECK(inst.f(x) == F->mul(x, h));
    }
    CHECK(oracle_order(inst) == 2);
    CHECK(inst.criterion().holds);
  }

  TEST_CASE("custom h over GF(5^m) with lambda2") {
    for (unsigned m : {2u, 3u}) {
      auto F = make_field(5, m);
      XhLambdaParams xp;
      xp.variant = XhVariant::kCustom;
      xp.lambda = LambdaVariant::kLambda2;
      xp.h = SparsePoly::parse(F, "1+x+3*x^3+4*x^4");
      FamilyInstance inst = build_xh_lambda(F, xp);
      CHECK(exhaustive_verdict(F, inst.f, {2}).is_ncycle_at.at(2));
      for (Elem y = 0; y < 5; ++y) CHECK(F->pow((*xp.h)(y), std::uint64_t{2}) == 1);
    }
  }

  TEST_CASE("abc corollary") {
    auto F = make_field(5, 2);
    XhLambdaParams xp;
    xp.variant = XhVariant::kAbc;
    xp.a = 2;
    xp.b = 1;
    xp.c = 1;
    // a^2 + b^2 = 0 but 2ab = 4: h(y)^2 = -1 off zero.
    CHECK(code_of([&] { build_xh_lambda(F, xp); }) == ErrorCode::kBadParams);
    xp.a = 1;
    xp.b = 3;
    FamilyInstance inst = build_xh_lambda(F, xp);
    CHECK(exhaustive_verdict(F, inst.f, {2}).is_ncycle_at.at(2));
    CHECK(inst.criterion().holds);
  }

  TEST_CASE("theta corollary and custom h that is not a root of unity") {
    auto F = make_field(7, 2);
    XhLambdaParams xp;
    xp.variant = XhVariant::kTheta;
    xp.n = 3;
    xp.theta = 2;
    FamilyInstance inst = build_xh_lambda(F, xp);
    CHECK(inst.claimed_n == 3);
    CHECK(oracle_order(inst) == 3);
    xp.theta = 1;
    CHECK(code_of([&] { build_xh_lambda(F, xp); }) == ErrorCode::kBadParams);
    XhLambdaParams bad;
    bad.variant = XhVariant::kCustom;
    bad.h = SparsePoly::parse(F, "1+x");
    CHECK(code_of([&] { build_xh_lambda(F, bad); }) == ErrorCode::kHValueNotRootOfUnity);
  }

  TEST_CASE("additive families") {
    auto F9 = make_field(3, 2);
    AdditiveParams tg;
    tg.H = SparsePoly::parse(F9, "x^2");
    FamilyInstance a = build_additive(F9, tg);
    CHECK(a.claimed_n == 3);
    CHECK(triple(a));
    CHECK(a.criterion().holds);

    AdditiveParams ct;
    ct.variant = AdditiveVariant::kCTraceQ2;
    for (Elem c = 1; c < 9; ++c)
      if (F9->mul(c, c) == F9->neg(1)) ct.c = c;
    REQUIRE(ct.c != 0);
    ct.s = 1;
    FamilyInstance b = build_additive(F9, ct);
    CHECK(triple(b));
    CHECK(b.criterion().holds);

    auto F64 = make_field(2, 6);
    Elem t0 = 0;
    for (Elem c = 1; c < 64 && t0 == 0; ++c)
      if (F64->trace(c, 2) == 0) t0 = c;
    AdditiveParams xg;
    xg.variant = AdditiveVariant::kXqGTrace;
    xg.sub_degree = 2;
    xg.g = SparsePoly(F64, {{t0, 1}});
    FamilyInstance d = build_additive(F64, xg);
    CHECK(triple(d));
    CHECK(d.criterion().holds);
    xg.g = SparsePoly(F64, {{1, 1}});
    CHECK(code_of([&] { build_additive(F64, xg); }) == ErrorCode::kBadParams);

    // In characteristic 2 the squared trace shape collapses to the identity.
    auto F16 = make_field(2, 4);
    AdditiveParams two;
    two.sub_degree = 2;
    two.H = SparsePoly::parse(F16, "x^2");
    CHECK(code_of([&] { build_additive(F16, two); }) == ErrorCode::kBadParams);
  }

  TEST_CASE("shift family") {
    auto F = make_field(3, 2);
    for (Elem delta = 0; delta < 9; ++delta) {
      ShiftFamilyParams sp;
      sp.delta = delta;
      sp.s = 4;
      FamilyInstance inst = build_shift(F, sp);
      CHECK(triple(inst));
      CHECK(inst.criterion().holds);
    }
    ShiftFamilyParams zero;
    zero.H = SparsePoly::zero(F);
    zero.s = 4;
    CHECK(code_of([&] { build_shift(F, zero); }) == ErrorCode::kDegenerateH);
  }

  TEST_CASE("trinomials over GF(q^3), q = 2^{3j}") {
    FamilyInstance big = build_rs_2to3m(64, 45);
    CHECK(big.field->order() == (1u << 18));
    CHECK(big.poly->to_string() == "1*x^1+1*x^112348+1*x^187246");
    FamilyInstance small = build_rs_2to3m(8, 3);
    CHECK(small.field->order() == 512);
    CHECK(triple(small));
    CHECK(small.criterion().holds);
    CHECK(code_of([] { build_rs_2to3m(64, 44); }) == ErrorCode::kBadParams);

    auto ks = search_k_2to3m(64);
    CHECK(std::find(ks.begin(), ks.end(), 45u) != ks.end());
    for (auto k : ks) CHECK((7 * k % 63 == 0 && k % 7 == 3));
    std::size_t direct = 0;
    for (std::uint64_t k = 1; k <= 7 * 63; ++k) direct += (7 * k % 63 == 0 && k % 7 == 3);
    CHECK(ks.size() == direct);
    auto k8 = search_k_2to3m(8);
    CHECK(std::find(k8.begin(), k8.end(), 3u) != k8.end());
    for (auto k : k8) CHECK_NOTHROW(build_rs_2to3m(8, k));
  }

  TEST_CASE("alpha family at q = 4") {
    auto F = make_field(2, 6);
    FamilyInstance one = build_xq_h_alpha(F, 1);
    CHECK(one.formula.find("1*x^7") != std::string::npos);
    CHECK(one.formula.find("1*x^14") != std::string::npos);
    // alpha = 1 breaks the family: h vanishes at primitive cube roots.
    CHECK_FALSE(exhaustive_verdict(F, one.f, {3}).bijective);
    CHECK_FALSE(one.criterion().holds);
    for (Elem alpha : cube_roots_of_unity(*F, 2)) {
      if (alpha == 1) continue;
      FamilyInstance inst = build_xq_h_alpha(F, alpha);
      CHECK(oracle_order(inst) == 3);
      CHECK(inst.criterion().holds);
    }
    CHECK(code_of([] { build_xq_h_alpha(make_field(2, 9), 1); }) == ErrorCode::kBadParams);
    CHECK(code_of([&] { build_xq_h_alpha(F, 2); }) == ErrorCode::kBadParams);
  }

  TEST_CASE("congruence family at q = 64") {
    auto pairs = solve_jieguo_congruences(64);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> full;
    for (std::uint64_t t = 0; t < 65; ++t)
      for (std::uint64_t m = 0; m < 65; ++m) {
        const long long T = t, M = m;
        auto z = [](long long v) { return ((v % 65) + 65) % 65 == 0; };
        if (z(-6 * T + 12 * T * T - 8 * T * T * T) && z(-3 * M + 6 * M * T - 4 * M * T * T) &&
            z(-M - M * T + T + T * T) && z(13 * M - 13 * T))
          full.emplace_back(t, m);
      }
    CHECK(pairs == full);
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair<std::uint64_t, std::uint64_t>(25, 5)) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair<std::uint64_t, std::uint64_t>(0, 0)) != pairs.end());

    FamilyInstance ex = build_jieguo(64, 25, 5);
    CHECK(ex.params["h"].get<std::string>() == "1*x^5+1*x^25+1*x^45");
    CHECK(ex.poly->to_string() == "1*x^316+1*x^1576+1*x^2836");
    CHECK(oracle_order(ex) == 3);
    CHECK(code_of([] { build_jieguo(64, 25, 6); }) == ErrorCode::kBadParams);
    CHECK(code_of([] { build_jieguo(16, 0, 0); }) == ErrorCode::kBadParams);
    for (auto [t, m] : pairs) {
      FamilyInstance inst = build_jieguo(64, t, m);
      CHECK(triple(inst));
    }
  }

  TEST_CASE("trace family with its inverse") {
    auto F = make_field(2, 6);
    const Elem w = primitive_cube_root(*F, 2);
    FamilyInstance inst = build_trace_theta(F, w);
    CHECK(oracle_order(inst) == 3);
    REQUIRE(inst.inverse);
    for (Elem x = 0; x < 64; ++x) {
      CHECK(inst.f(inst.f(x)) == (*inst.inverse)(x));
      CHECK((*inst.inverse)(inst.f(x)) == x);
    }
    CHECK(code_of([&] { build_trace_theta(F, 1); }) == ErrorCode::kBadParams);
  }

  TEST_CASE("helpers") {
    auto pp = prime_power(81);
    CHECK(pp.p == 3);
    CHECK(pp.k == 4);
    CHECK(code_of([] { prime_power(12); }) == ErrorCode::kBadParams);
    auto F = make_field(2, 4);
    auto big = SparsePoly::parse(F, "x^31+x^15+1");
    auto red = reduce_exponents(big);
    for (Elem x = 0; x < 16; ++x) CHECK(red(x) == big(x));
    CHECK(cube_roots_of_unity(*F, 2).size() == 3);
  }
}
