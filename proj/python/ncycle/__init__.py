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
"""n-cycle permutations over finite fields.

Fields, polynomials and family instances are native objects; reports come
back as plain dicts.
"""

import json as _json

from . import _core
from ._core import (
    FamilyInstance,
    Field,
    NcycleError,
    Poly,
    build_involution,
    build_jieguo,
    build_rs_2to3m,
    build_shift_power,
    build_trace_theta,
    build_xq_h_alpha,
    cube_roots_of_unity,
    fuzz_families,
    monomial_ncycle,
    search_k_2to3m,
    set_threads,
    solve_jieguo_congruences,
)

__all__ = [
    "FamilyInstance",
    "Field",
    "NcycleError",
    "Poly",
    "build_involution",
    "build_jieguo",
    "build_rs_2to3m",
    "build_shift_power",
    "build_trace_theta",
    "build_xq_h_alpha",
    "criterion",
    "cross_check",
    "cube_roots_of_unity",
    "fuzz",
    "fuzz_families",
    "monomial_ncycle",
    "order",
    "search_k_2to3m",
    "set_threads",
    "solve_jieguo_congruences",
    "verify",
    "walsh_involution",
]


def verify(poly, ns):
    """Exhaustive verdict for f = poly at each cycle length in ns."""
    return _json.loads(_core.verify(poly, list(ns)))


def order(poly):
    return _json.loads(_core.order(poly))


def walsh_involution(poly):
    return _json.loads(_core.walsh_involution(poly))


def criterion(instance):
    return _json.loads(instance.criterion())


def cross_check(instance):
    return _json.loads(instance.cross_check())


def fuzz(family, seed, trials):
    return _json.loads(_core.fuzz(family, seed, trials))
