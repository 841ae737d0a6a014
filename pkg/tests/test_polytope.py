import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from goldie.arrangement import validate_spec
from goldie.closure import AssumptionError, region_closure
from goldie.exact import rank, solve_linear
from goldie.generate import GeneratorConfig, instances
from goldie.polytope import (
    RationalPolytope,
    bounding_box,
    build_polytope,
    dset_representatives,
    enumerate_lattice_points,
    vertex_enumeration,
    witness_box,
)


def poly(G, alpha, r=None):
    n = len(G[0])
    spec, a = validate_spec({"n": n, "r": n if r is None else r, "g_basis": G, "alpha": alpha})
    rc = region_closure(spec, a)
    return spec, a, rc, build_polytope(spec, a, rc.signs, rc.certificate)


def test_build_examples():
    _, _, _, P = poly([[1, 1]], [2, 3])
    assert P.eq_A == ((1, 1),) and P.eq_b == (5,)
    _, _, _, P = poly([[1, -1]], [2, -1])
    assert P.eq_b == (3,) and P.le_A == ((-1, 0), (0, 1)) and P.le_b == (0, -1)
    _, _, _, P = poly([[2, -1]], [1, -1])
    assert P.eq_A == ((2, -1),) and P.eq_b == (3,)


def test_box_examples():
    assert bounding_box(poly([[1, 1]], [2, 3])[3]) == ((0, 5), (0, 5))
    assert bounding_box(poly([[1, -1]], [2, -1])[3]) == ((0, 2), (-3, -1))
    point = RationalPolytope(1, ((1,),), (5,))
    assert bounding_box(point) == ((5, 5),)


def test_lattice_point_examples():
    assert enumerate_lattice_points(poly([[1, 1]], [2, 3])[3]) == [(k, 5 - k) for k in range(6)]
    assert enumerate_lattice_points(poly([[1, -1]], [2, -1])[3]) == [(0, -3), (1, -2), (2, -1)]
    assert enumerate_lattice_points(poly([[2, -1]], [1, -1])[3]) == [(0, -3), (1, -1)]


def test_vertex_examples():
    assert vertex_enumeration(poly([[1, 1]], [2, 3])[3]) == [(0, 5), (5, 0)]
    point = RationalPolytope(1, ((1,),), (5,))
    assert vertex_enumeration(point) == [(5,)]


def test_dset_examples():
    spec, a, rc, P = poly([[1, 1, 0]], [2, 3, "7/2"], r=2)
    assert dset_representatives(spec, a, rc.signs, P) == [(k, 5 - k, F(7, 2)) for k in range(6)]
    spec, a, rc, P = poly([[1, 1]], [2, -3])
    assert dset_representatives(spec, a, rc.signs, P) == [a]
    spec, a, rc, P = poly([[1, -1]], [2, -1])
    assert dset_representatives(spec, a, rc.signs, P) == [(0, -3), (1, -2), (2, -1)]


def test_refuses_without_direct_sum():
    spec, a = validate_spec({"n": 3, "r": 3, "g_basis": [[1, 0, 1], [0, 1, 1]], "alpha": [1, -2, "7/2"]})
    rc = region_closure(spec, a)
    with pytest.raises(AssumptionError, match="eta3 in span"):
        build_polytope(spec, a, rc.signs)


POOL, _ = instances(60, GeneratorConfig(seed=3))


def _brute_points(P):
    box = P.bounding_box()
    if box is None:
        return []
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in box]
    return sorted(v for v in itertools.product(*ranges) if P.contains(v))


@pytest.mark.parametrize("k", range(len(POOL)))
def test_pool_polytope_invariants(k):
    spec, alpha = POOL[k]
    rc = region_closure(spec, alpha)
    P = build_polytope(spec, alpha, rc.signs, rc.certificate)
    pts = P.lattice_points()
    assert pts == _brute_points(P)
    assert len(dset_representatives(spec, alpha, rc.signs, P)) == len(pts)
    box = P.bounding_box()
    if P.dim:
        formula = witness_box(*P.witness)
        for (lo, hi), (flo, fhi) in zip(box, formula):
            assert flo <= lo <= hi <= fhi
        for v in pts:
            assert all(lo <= c <= hi for c, (lo, hi) in zip(v, box))
    for v in P.vertices():
        assert P.contains(v)
        assert all(lo <= c <= hi for c, (lo, hi) in zip(v, box))
        # unique solution of its active subsystem
        active = list(P.eq_A) + [row for row, b in zip(P.le_A, P.le_b) if sum(x * y for x, y in zip(row, v)) == b]
        assert rank(active) == P.dim


@given(st.integers(1, 6), st.integers(-5, 5), st.integers(1, 6))
def test_segment_points(a, b, q):
    # {a v1 - v2 = b} with v1 in [0, q] has one point per admissible v1
    P = RationalPolytope(2, ((a, -1),), (b,), ((-1, 0), (1, 0)), (0, q))
    assert len(P.lattice_points()) == q + 1
