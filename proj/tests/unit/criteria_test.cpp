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
#include <numeric>
#include <vector>

#include "doctest.h"
#include "ncycle/constructions.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/oracle.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/poly.hpp"

using namespace ncycle;

namespace {

bool oracle_ncycle(const FieldPtr& F, const FieldMap& f, std::uint64_t n) {
  return exhaustive_verdict(F, f, {n}).is_ncycle_at.at(n);
}

FieldMap trace_map(const FieldPtr& F, unsigned sub) {
  return [F, sub](Elem x) { return F->trace(x, sub); };
}

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("AGW with identity maps") {
    auto F = make_field(3, 2);
    auto id = [](Elem x) { return x; };
    AgwReport r = agw_commute_check(F, id, trace_map(F, 1), trace_map(F, 1), id);
    CHECK(r.commutes);
    CHECK(r.holds);
    CHECK(r.f_bijective);
  }

  TEST_CASE("AGW for x^5 over cubes on GF(7)") {
    auto F = make_field(7, 1);
    auto f = [&](Elem x) { return F->pow(x, std::uint64_t{5}); };
    auto cube = [&](Elem x) { return F->pow(x, std::uint64_t{3}); };
    AgwReport r = agw_commute_check(F, f, cube, cube, f);
    CHECK(r.commutes);
    CHECK(r.holds == r.f_bijective);
    CHECK(r.holds);
    // x^2 commutes with the same diagram but collapses fibers.
    auto sq = [&](Elem x) { return F->mul(x, x); };
    AgwReport bad = agw_commute_check(F, sq, cube, cube, sq);
    CHECK(bad.commutes);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.f_bijective);
    CHECK_THROWS_AS(agw_commute_check(F, f, cube, cube, f, std::vector<Elem>{0, 1}), Error);
  }

  TEST_CASE("monomial lemma against exhaustive orders") {
    CHECK(monomial_ncycle(1, 6, 4));
    CHECK(monomial_ncycle(5, 6, 2));
    CHECK(monomial_ncycle(4, 63, 3));
    CHECK_THROWS_AS(monomial_ncycle(2, 6, 2), Error);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {2, 5}}) {
      auto F = make_field(p, n);
      const std::uint64_t qm1 = F->order() - 1;
      for (std::uint64_t d = 1; d < qm1; ++d) {
        if (std::gcd(d, qm1) != 1) continue;
        for (std::uint64_t k : {2u, 3u, 4u, 5u})
          CHECK(monomial_ncycle(d, qm1, k) == oracle_ncycle(F, [&](Elem x) { return F->pow(x, d); }, k));
      }
    }
  }

  TEST_CASE("Frobenius twists") {
    auto F = make_field(7, 2);
    // x^23 is an involution on GF(49): 23^2 = 1 (mod 48).
    auto f = SparsePoly::parse(F, "x^23");
    CHECK(frobenius_twist_ncycle(f, 1, 0, 2));
    CHECK(frobenius_twist_ncycle(f, 1, 1, 2));
    CHECK(oracle_ncycle(F, [&](Elem x) { return F->pow(f(x), std::uint64_t{7}); }, 2));
    auto F3 = make_field(7, 3);
    auto inv = SparsePoly::parse(F3, "x^341");
    CHECK_FALSE(frobenius_twist_ncycle(inv, 1, 1, 2));
    CHECK_FALSE(oracle_ncycle(F3, [&](Elem x) { return F3->pow(inv(x), std::uint64_t{7}); }, 2));
    CHECK_THROWS_AS(frobenius_twist_ncycle(SparsePoly::parse(F3, "x^5"), 1, 1, 2), Error);
  }

  TEST_CASE("x h(lambda(x)) criterion") {
    auto F = make_field(5, 2);
    auto lambda = [&](Elem x) { return F->trace(F->mul(x, x), 1); };
    auto k = [&](Elem a) { return F->mul(a, a); };
    auto one = [](Elem) { return Elem{1}; };
    CHECK(xh_lambda_criterion(F, one, lambda, k, 2).holds);

    auto h = SparsePoly::parse(F, "1-2*x^4");
    CriterionVerdict v = xh_lambda_criterion(F, h.as_map(), lambda, k, 2);
    CHECK(v.applicable());
    CHECK(v.holds);
    CHECK(oracle_ncycle(F, [&](Elem x) { return F->mul(x, h(lambda(x))); }, 2));

    auto bent = SparsePoly::parse(F, "1-2*x^4+x^2");
    CriterionVerdict w = xh_lambda_criterion(F, bent.as_map(), lambda, k, 2);
    if (w.applicable()) {
      CHECK_FALSE(w.holds);
      CHECK(w.witness);
    }
    CHECK_FALSE(oracle_ncycle(F, [&](Elem x) { return F->mul(x, bent(lambda(x))); }, 2));

    auto zero_at_0 = SparsePoly::parse(F, "x");
    CHECK_FALSE(xh_lambda_criterion(F, zero_at_0.as_map(), lambda, k, 2).applicable());
  }

  TEST_CASE("additive criterion") {
    auto F = make_field(3, 2);
    auto phi = SparsePoly::x(F);
    auto psi = SparsePoly::parse(F, "x^3-x");
    auto zero = [](Elem) { return Elem{0}; };
    CHECK(additive_criterion(phi, psi, zero, 3, 1).holds);
    auto g = [&](Elem y) { return F->trace(F->mul(y, y), 1); };
    CHECK(additive_criterion(phi, psi, g, 3, 1).holds);
    CHECK_FALSE(additive_criterion(phi, psi, g, 2, 1).holds);

    auto G = make_field(2, 6);
    auto phi_q = SparsePoly::parse(G, "x^4");
    auto tr = SparsePoly::parse(G, "x+x^4+x^16");
    Elem a = 0;
    for (Elem c = 1; c < G->order() && a == 0; ++c)
      if (G->trace(c, 2) == 0) a = c;
    REQUIRE(a != 0);
    auto ga = [&](Elem y) { return G->mul(a, y); };
    CHECK(additive_criterion(phi_q, tr, ga, 3, 2).holds);
    CHECK(oracle_ncycle(G, [&](Elem x) { return G->add(G->pow(x, std::uint64_t{4}), ga(G->trace(x, 2))); }, 3));

    auto not_linear = SparsePoly::parse(F, "x^2");
    CHECK_FALSE(additive_criterion(phi, not_linear, g, 3, 1).applicable());
  }

  TEST_CASE("shift criterion") {
    auto F = make_field(3, 2);
    auto g4 = [&](Elem y) { return F->pow(y, std::uint64_t{4}); };
    for (Elem delta = 0; delta < 9; ++delta) {
      ShiftParams sp = ShiftParams::make(*F, 1, delta, 1);
      CHECK(shift_criterion(F, g4, sp, 3).holds);
      CHECK(shift_criterion(F, [](Elem) { return Elem{0}; }, sp, 3).holds);
    }
    auto G = make_field(2, 2);
    auto g3 = [&](Elem y) { return G->pow(y, std::uint64_t{3}); };
    bool any_false = false;
    for (Elem delta = 0; delta < 4; ++delta) {
      ShiftParams sp = ShiftParams::make(*G, 1, delta, 1);
      CriterionVerdict v = shift_criterion(G, g3, sp, 3);
      auto f = [&](Elem x) { return G->add(x, g3(G->add(G->sub(G->mul(x, x), x), delta))); };
      if (v.applicable()) CHECK(v.holds == oracle_ncycle(G, f, 3));
      if (v.applicable() && !v.holds) {
        any_false = true;
        CHECK(v.witness);
      }
    }
    CHECK(any_false);
    CHECK_THROWS_AS(ShiftParams::make(*F, 2, 0, 1), Error);
  }

  TEST_CASE("triple-cycle criterion for x^r h(x^s)") {
    auto F = make_field(2, 12);
    auto h = SparsePoly::parse(F, "x^5+x^45+x^25");
    CHECK(rs_triple_criterion(F, h.as_map(), RsParams::make(*F, 1, 63)).holds);
    auto bent = SparsePoly::parse(F, "x^5+x^45+x^26");
    CriterionVerdict v = rs_triple_criterion(F, bent.as_map(), RsParams::make(*F, 1, 63));
    CHECK_FALSE(v.holds);

    auto G = make_field(2, 18);
    auto tri = SparsePoly::parse(G, "1+x^45+x^90");
    CHECK(rs_triple_criterion(G, tri.as_map(), RsParams::make(*G, 1, 64 * 64 + 64 + 1)).holds);

    auto H = make_field(2, 6);
    auto one = [](Elem) { return Elem{1}; };
    for (std::uint64_t r : {1u, 2u, 4u, 5u, 16u}) {
      CriterionVerdict m = rs_triple_criterion(H, one, RsParams::make(*H, r, 63));
      CHECK(m.holds == monomial_ncycle(r, 63, 3));
    }
    CHECK(rs_triple_criterion(H, one, RsParams::make(*H, 2, 63)).failure == "r^3 != 1 (mod s)");
    CHECK_THROWS_AS(RsParams::make(*H, 3, 63), Error);
    CHECK_THROWS_AS(RsParams::make(*H, 1, 10), Error);
  }

  TEST_CASE("single-root criterion") {
    auto F = make_field(2, 6);
    auto one = [](Elem) { return Elem{1}; };
    CHECK(rs_single_criterion(F, one, RsParams::make(*F, 1, 1), 1, 1).holds);
    // x^4 h(x^3) with h = 1 + w x^7 + x^14, w a primitive cube root in GF(4).
    Elem w = 0;
    for (Elem c : cube_roots_of_unity(*F, 2))
      if (c != 1) w = c;
    auto h = SparsePoly(F, {{1, 0}, {w, 7}, {1, 14}});
    CriterionVerdict v = rs_single_criterion(F, h.as_map(), RsParams::make(*F, 4, 3), 1, 4);
    CHECK(v.applicable());
    CHECK(v.holds);
    auto h1 = SparsePoly::parse(F, "1+x^7+x^14");
    CHECK_FALSE(rs_single_criterion(F, h1.as_map(), RsParams::make(*F, 4, 3), 1, 4).applicable());
    auto rough = SparsePoly::parse(F, "g*x^3+x^5+1");
    CHECK_FALSE(rs_single_criterion(F, rough.as_map(), RsParams::make(*F, 1, 1), 1, 1).applicable());
  }

  TEST_CASE("stated inverse") {
    auto F = make_field(2, 6);
    Elem theta = 0;
    for (Elem c : cube_roots_of_unity(*F, 2))
      if (c != 1) theta = c;
    auto tr = [&](Elem x) { return F->trace(F->pow(x, std::uint64_t{10}), 2); };
    auto f = [&](Elem x) { return F->add(x, F->mul(theta, tr(x))); };
    auto sq = [&](Elem x) { return F->add(x, F->mul(F->mul(theta, theta), tr(x))); };
    CHECK(stated_inverse_criterion(F, f, sq).holds);
    CriterionVerdict bad = stated_inverse_criterion(F, f, f);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(f(f(bad.witness->y)) != f(bad.witness->y));
  }
}
