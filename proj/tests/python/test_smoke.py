# Copyright 2026 The ncycle Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import ncycle


def test_field_arithmetic():
    f = ncycle.Field(2, 3)
    assert f.order == 8
    assert f.modulus == [1, 1, 0, 1]
    assert f.mul(2, 4) == 3
    assert f.pow(3, "7") == 1
    assert f.trace(1) == 1


def test_bad_modulus_raises():
    with pytest.raises(ncycle.NcycleError):
        ncycle.Field(2, 3, [1, 0, 0, 1])


def test_order_and_verify():
    f = ncycle.Field(7, 1)
    x5 = ncycle.Poly(f, "x^5")
    assert ncycle.order(x5)["order"] == 2
    v = ncycle.verify(x5, [2, 3])
    assert v["bijective"]
    assert v["is_ncycle_at"] == {"2": True, "3": False}
    assert ncycle.order(ncycle.Poly(f, "x^2"))["bijective"] is False


def test_example_instance():
    inst = ncycle.build_jieguo(64, 25, 5)
    assert inst.claimed_n == 3
    assert ncycle.criterion(inst)["holds"]
    report = ncycle.cross_check(inst)
    assert report["agreement"] == "AGREE"
    assert report["oracle"]["order"] == 3
    table = inst.table()
    assert len(table) == 4096
    assert sorted(table) == list(range(4096))


def test_solver_and_search():
    assert (25, 5) in ncycle.solve_jieguo_congruences(64)
    assert 45 in ncycle.search_k_2to3m(64)


def test_alpha_family():
    f = ncycle.Field(2, 6)
    roots = ncycle.cube_roots_of_unity(f, 2)
    assert len(roots) == 3
    for alpha in roots:
        report = ncycle.cross_check(ncycle.build_xq_h_alpha(4, str(alpha)))
        assert report["agreement"] == "AGREE"
        assert report["oracle"]["bijective"] == (alpha != 1)


def test_walsh_and_monomial():
    f = ncycle.Field(2, 3)
    assert ncycle.walsh_involution(ncycle.Poly(f, "x^6"))["symmetric"]
    assert not ncycle.walsh_involution(ncycle.Poly(f, "x^2"))["symmetric"]
    assert ncycle.monomial_ncycle("5", 6, 2)


def test_fuzz_summary():
    s = ncycle.fuzz("xh_lambda.involution", 0, 10)
    assert s["trials"] == 10
    assert s["failures"] == 0
