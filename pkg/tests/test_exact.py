import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from goldie.exact import (
    DimensionError,
    IntegerLattice,
    LinearProgram,
    frac,
    hermite_rows,
    integer_kernel_basis,
    kernel_basis,
    lattice_membership,
    lp_solve,
    mat_vec,
    rank,
    solve_linear,
)


def test_frac_rejects_floats():
    with pytest.raises(TypeError):
        frac(0.5)
    assert frac("3/6") == F(1, 2)
    assert frac(-4) == F(-4)


@pytest.mark.parametrize(
    "A,b,expect",
    [
        ([[1, 1]], [5], "solvable"),
        ([[1, 0], [0, 1]], [2, 3], (2, 3)),
        ([[1, 1], [1, 1]], [0, 1], None),
    ],
)
def test_solve_linear_examples(A, b, expect):
    x = solve_linear(A, b)
    if expect is None:
        assert x is None
        return
    assert mat_vec(A, x) == tuple(F(v) for v in b)
    if expect != "solvable":
        assert x == tuple(F(v) for v in expect)


def test_solve_linear_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear([[1, 1]], [1, 2])


def test_kernel_examples():
    (k,) = kernel_basis([[1, 1]])
    assert k[0] == -k[1] != 0
    K = kernel_basis([[1, 1, 0]])
    assert len(K) == 2 and all(mat_vec([[1, 1, 0]], v) == (0,) for v in K)
    assert rank(K + [(1, -1, 0), (0, 0, 1)]) == 2
    assert kernel_basis([[1, 0], [0, 1]]) == []


small = st.integers(-4, 4)


@given(st.integers(1, 3).flatmap(lambda m: st.integers(m, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m))))
def test_kernel_and_solve_substitution(A):
    n = len(A[0])
    K = kernel_basis(A)
    assert len(K) == n - rank(A)
    for v in K:
        assert all(c == 0 for c in mat_vec(A, v))
    b = mat_vec(A, list(range(1, n + 1)))
    x = solve_linear(A, b)
    assert x is not None and mat_vec(A, x) == b


def test_lp_examples():
    res = lp_solve(LinearProgram(1, (), (), ((1,),), (3,), objective=(1,)))
    assert res.status == "optimal" and res.value == 3 and res.point == (3,)
    # z >= 0, z1 >= 1, -z1 + z2 = 0
    le_A = ((-1, 0), (0, -1), (-1, 0))
    le_b = (0, 0, -1)
    res = lp_solve(LinearProgram(2, ((-1, 1),), (0,), le_A, le_b))
    assert res.is_feasible and res.point[0] >= 1 and res.point[0] == res.point[1]
    res = lp_solve(LinearProgram(2, ((1, 1),), (0,), le_A, le_b))
    assert res.status == "infeasible"


def test_lp_unbounded_reported():
    res = lp_solve(LinearProgram(1, (), (), ((-1,),), (0,), objective=(1,)))
    assert res.status == "unbounded"


@given(
    st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
    st.lists(st.integers(0, 6), min_size=4, max_size=4),
    st.lists(small, min_size=3, max_size=3),
)
def test_lp_point_feasible_and_deterministic(le_A, le_b, obj):
    p = LinearProgram(3, (), (), tuple(map(tuple, le_A)), tuple(le_b[: len(le_A)]), tuple(obj))
    r1, r2 = lp_solve(p), lp_solve(p)
    assert r1 == r2
    # origin is feasible since b >= 0
    assert r1.status in ("optimal", "unbounded")
    if r1.status == "optimal":
        assert p.satisfied_by(r1.point)
        assert all(isinstance(a, F) for a in r1.point)


def test_lattice_examples():
    assert lattice_membership((0,), [(4,), (6,)])
    assert lattice_membership((2,), [(4,), (6,)])
    assert not lattice_membership((1,), [(4,), (6,)])
    assert lattice_membership((F(1, 2),), [(F(1, 2),)])
    assert not lattice_membership((F(1, 3),), [(F(1, 2),)])


def _brute(w, gens, B=10):
    for c in itertools.product(range(-B, B + 1), repeat=len(gens)):
        if all(sum(ci * g[t] for ci, g in zip(c, gens)) == w[t] for t in range(len(w))):
            return True
    return False


gen_vec = st.lists(st.integers(-6, 6), min_size=2, max_size=2)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=3), st.integers(-8, 8))
def test_lattice_membership_matches_brute_force_1d(gens, w):
    gens = [(g,) for g in gens]
    assert lattice_membership((w,), gens) == _brute((w,), gens)


@given(st.lists(gen_vec, min_size=1, max_size=3), st.lists(st.integers(-8, 8), min_size=2, max_size=2))
def test_lattice_membership_sound_against_brute_force(gens, w):
    # anything the box search finds must be accepted
    if _brute(w, gens):
        assert lattice_membership(w, gens)


@given(st.lists(gen_vec, min_size=1, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_lattice_contains_generated_vectors(gens, c):
    w = [sum(ci * g[t] for ci, g in zip(c, gens)) for t in range(2)]
    assert lattice_membership(w, gens)


@given(st.lists(gen_vec, min_size=1, max_size=3))
def test_hermite_form_regenerates_lattice(gens):
    H = hermite_rows(gens, 2)
    L1, L2 = IntegerLattice(2, tuple(map(tuple, gens))), IntegerLattice(2, tuple(H))
    assert L1.normal_form == L2.normal_form
    for g in gens:
        assert tuple(g) in L2
    # triangular with positive pivots
    pivots = [next(j for j, a in enumerate(r) if a) for r in H]
    assert pivots == sorted(set(pivots))
    assert all(H[i][p] > 0 for i, p in enumerate(pivots))


@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=2))
def test_integer_kernel_basis_is_saturated(A):
    K = integer_kernel_basis(A)
    assert len(K) == 4 - rank(A)
    for v in K:
        assert all(c == 0 for c in mat_vec(A, v))
    # every integer kernel vector in a small box lies in the lattice of K
    for x in itertools.product(range(-2, 3), repeat=4):
        if all(c == 0 for c in mat_vec(A, x)):
            assert lattice_membership(x, K)
