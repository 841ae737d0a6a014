"""Exact rational linear algebra, linear programming and integer lattices.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
row tuples.  Nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]


class DimensionError(ValueError):
    pass


def frac(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats and bools are refused: they are not exact rational literals.
    """
    if isinstance(value, bool):
        raise TypeError(f"not a rational literal: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"not a rational literal: {value!r}")


def vec(values) -> Vector:
    return tuple(frac(v) for v in values)


def mat(rows) -> Matrix:
    rows = tuple(vec(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionError("ragged matrix")
    return rows


def ncols(A: Matrix, default: int = 0) -> int:
    return len(A[0]) if A else default


def transpose(A: Matrix, n_cols: Optional[int] = None) -> Matrix:
    n = ncols(A, n_cols or 0)
    return tuple(tuple(row[j] for row in A) for j in range(n))


def mat_vec(A: Matrix, x: Sequence) -> Vector:
    for row in A:
        if len(row) != len(x):
            raise DimensionError(f"row length {len(row)} != vector length {len(x)}")
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in A)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def is_integral(x) -> bool:
    return Fraction(x).denominator == 1


def common_denominator(values) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


# ---------------------------------------------------------------------------
# Gaussian elimination


def rref(A: Matrix, n_cols: Optional[int] = None):
    """Reduced row echelon form.  Returns ``(R, pivots)``; zero rows dropped."""
    n = ncols(A, n_cols or 0)
    rows = [[frac(a) for a in r] for r in A]
    pivots = []
    lead = 0
    for col in range(n):
        pivot_row = next((i for i in range(lead, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        p = rows[lead][col]
        rows[lead] = [a / p for a in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return tuple(tuple(r) for r in rows[:lead]), tuple(pivots)


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def solve_linear(A: Matrix, b: Sequence) -> Optional[Vector]:
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    if len(A) != len(b):
        raise DimensionError(f"{len(A)} equations but {len(b)} right-hand sides")
    n = ncols(A)
    if not A:
        return ()
    aug = tuple(tuple(row) + (frac(bi),) for row, bi in zip(A, b))
    R, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, pivots):
        x[p] = row[n]
    return tuple(x)


def kernel_basis(A: Matrix, n_cols: Optional[int] = None) -> list:
    """Rational basis of ``{x : A x = 0}``, one vector per free column."""
    n = ncols(A, n_cols or 0)
    R, pivots = rref(A, n)
    basis = []
    for free in (j for j in range(n) if j not in pivots):
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[free]
        basis.append(tuple(x))
    return basis


def in_span(v: Sequence, vectors: Sequence) -> bool:
    if not vectors:
        return all(a == 0 for a in v)
    return rank(tuple(vectors) + (tuple(v),)) == rank(tuple(vectors))


# ---------------------------------------------------------------------------
# Linear programming


@dataclass(frozen=True)
class LinearProgram:
    """``max/min c.x`` subject to ``A_eq x = b_eq`` and ``A_le x <= b_le``.

    Variables are free; sign constraints go into the inequality rows.
    ``objective=None`` asks for feasibility only.
    """

    n_vars: int
    eq_A: Matrix = ()
    eq_b: Vector = ()
    le_A: Matrix = ()
    le_b: Vector = ()
    objective: Optional[Vector] = None
    maximize: bool = True

    def __post_init__(self):
        for name in ("eq_A", "le_A"):
            object.__setattr__(self, name, tuple(vec(r) for r in getattr(self, name)))
        for name in ("eq_b", "le_b"):
            object.__setattr__(self, name, vec(getattr(self, name)))
        if self.objective is not None:
            object.__setattr__(self, "objective", vec(self.objective))
        for A, b, kind in ((self.eq_A, self.eq_b, "equality"), (self.le_A, self.le_b, "inequality")):
            if len(A) != len(b):
                raise DimensionError(f"{kind} rows and right-hand side differ in length")
            for row in A:
                if len(row) != self.n_vars:
                    raise DimensionError(f"{kind} row of length {len(row)} for {self.n_vars} variables")
        if self.objective is not None and len(self.objective) != self.n_vars:
            raise DimensionError("objective length mismatch")

    def satisfied_by(self, x: Sequence) -> bool:
        return all(dot(r, x) == b for r, b in zip(self.eq_A, self.eq_b)) and all(
            dot(r, x) <= b for r, b in zip(self.le_A, self.le_b)
        )


@dataclass(frozen=True)
class LPResult:
    status: str  # "infeasible" | "optimal" | "unbounded" | "feasible"
    value: Optional[Fraction] = None
    point: Optional[Vector] = None

    @property
    def is_feasible(self) -> bool:
        return self.status in ("optimal", "feasible", "unbounded")


class _Tableau:
    """Dense simplex tableau over Fractions, minimisation, Bland's rule."""

    def __init__(self, rows, rhs, n):
        self.rows = [list(r) for r in rows]
        self.rhs = list(rhs)
        self.n = n
        self.basis = []

    def pivot(self, i, j):
        p = self.rows[i][j]
        self.rows[i] = [a / p for a in self.rows[i]]
        self.rhs[i] /= p
        for k in range(len(self.rows)):
            if k != i and self.rows[k][j] != 0:
                f = self.rows[k][j]
                self.rows[k] = [a - f * b for a, b in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j

    def reduced_costs(self, cost, allowed):
        duals_cost = [cost[b] for b in self.basis]
        red = []
        for j in range(self.n):
            if not allowed[j]:
                red.append(None)
                continue
            red.append(cost[j] - sum((cb * row[j] for cb, row in zip(duals_cost, self.rows)), Fraction(0)))
        return red

    def run(self, cost, allowed):
        """Minimise ``cost`` over the current basis; returns False if unbounded."""
        while True:
            red = self.reduced_costs(cost, allowed)
            entering = next((j for j in range(self.n) if red[j] is not None and red[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)

    def value(self, cost):
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), Fraction(0))


def lp_solve(p: LinearProgram) -> LPResult:
    """Two-phase exact simplex.  Deterministic: Bland's least-index rule."""
    n = p.n_vars
    # x = xp - xm, plus one slack per inequality row
    n_le = len(p.le_A)
    n_std = 2 * n + n_le
    rows, rhs = [], []
    for r, b in zip(p.eq_A, p.eq_b):
        rows.append(list(r) + [-a for a in r] + [Fraction(0)] * n_le)
        rhs.append(Fraction(b))
    for k, (r, b) in enumerate(zip(p.le_A, p.le_b)):
        slack = [Fraction(0)] * n_le
        slack[k] = Fraction(1)
        rows.append(list(r) + [-a for a in r] + slack)
        rhs.append(Fraction(b))
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    total = n_std + m
    tab = _Tableau(
        [row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(rows)], rhs, total
    )
    tab.basis = list(range(n_std, total))

    phase1 = [Fraction(0)] * n_std + [Fraction(1)] * m
    tab.run(phase1, [True] * total)
    if tab.value(phase1) != 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n_std:
            j = next((j for j in range(n_std) if tab.rows[i][j] != 0), None)
            if j is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    allowed = [True] * n_std + [False] * m
    if p.objective is None:
        cost = [Fraction(0)] * total
    else:
        c = [Fraction(v) for v in p.objective]
        if p.maximize:
            c = [-v for v in c]
        cost = c + [-v for v in c] + [Fraction(0)] * (n_le + m)
    bounded = tab.run(cost, allowed)

    std = [Fraction(0)] * total
    for b, v in zip(tab.basis, tab.rhs):
        std[b] = v
    x = tuple(std[j] - std[n + j] for j in range(n))
    if not p.satisfied_by(x):
        raise ArithmeticError("simplex returned an infeasible point")
    if p.objective is None:
        return LPResult("feasible", point=x)
    if not bounded:
        return LPResult("unbounded", point=x)
    return LPResult("optimal", value=dot(p.objective, x), point=x)


# ---------------------------------------------------------------------------
# Integer lattices


def _int_rows(vectors) -> list:
    out = []
    for v in vectors:
        if not all(is_integral(a) for a in v):
            raise ValueError("integer vectors expected")
        out.append([int(a) for a in v])
    return out


def hermite_rows(vectors, dim: int, transform: bool = False):
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Pivots are positive and strictly increasing, entries above a pivot are
    reduced into ``[0, pivot)``.  With ``transform=True`` also returns the
    unimodular matrix ``U`` (as rows) with ``U @ vectors`` = the reduced
    rows followed by zero rows.
    """
    rows = _int_rows(vectors)
    k = len(rows)
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    lead = 0
    for col in range(dim):
        while True:
            nz = [i for i in range(lead, k) if rows[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(rows[i][col]))
            rows[lead], rows[i_min] = rows[i_min], rows[lead]
            U[lead], U[i_min] = U[i_min], U[lead]
            done = True
            for i in range(lead + 1, k):
                q = rows[i][col] // rows[lead][col]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[lead])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[lead])]
                if rows[i][col] != 0:
                    done = False
            if done:
                break
        if lead < k and rows[lead][col] != 0:
            if rows[lead][col] < 0:
                rows[lead] = [-a for a in rows[lead]]
                U[lead] = [-a for a in U[lead]]
            piv = rows[lead][col]
            for i in range(lead):
                q = rows[i][col] // piv
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[lead])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[lead])]
            lead += 1
    H = [tuple(r) for r in rows[:lead]]
    if transform:
        return H, [tuple(u) for u in U]
    return H


@dataclass(frozen=True)
class IntegerLattice:
    """Subgroup of ``Z^dim`` generated by integer vectors, in Hermite form."""

    dim: int
    generators: tuple
    normal_form: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "normal_form", tuple(hermite_rows(self.generators, self.dim)))

    def __contains__(self, w) -> bool:
        if len(w) != self.dim:
            raise DimensionError("vector length differs from lattice dimension")
        if not all(is_integral(a) for a in w):
            return False
        rest = [int(a) for a in w]
        for row in self.normal_form:
            p = next(j for j, a in enumerate(row) if a != 0)
            if any(rest[j] for j in range(p)):
                return False
            q, r = divmod(rest[p], row[p])
            if r:
                return False
            rest = [a - q * b for a, b in zip(rest, row)]
        return not any(rest)

    @property
    def rank(self) -> int:
        return len(self.normal_form)


def lattice_membership(w: Sequence, gens: Sequence) -> bool:
    """Is ``w`` an integer combination of the rational vectors ``gens``?"""
    dim = len(w)
    for g in gens:
        if len(g) != dim:
            raise DimensionError("generator length differs from target length")
    D = common_denominator(a for g in gens for a in g)
    Dw = [D * frac(a) for a in w]
    if not all(is_integral(a) for a in Dw):
        return False
    lattice = IntegerLattice(dim, tuple(tuple(D * frac(a) for a in g) for g in gens))
    return tuple(Dw) in lattice


def integer_kernel_basis(A: Matrix) -> list:
    """Basis of the integer lattice ``ker(A) ∩ Z^n`` (A rational, n columns)."""
    n = ncols(A)
    if not A:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    scaled = []
    for row in A:
        D = common_denominator(row)
        scaled.append([int(D * a) for a in row])
    cols = [tuple(scaled[i][j] for i in range(len(scaled))) for j in range(n)]
    H, U = hermite_rows(cols, len(scaled), transform=True)
    kernel = U[len(H):]
    # tidy the basis into Hermite form; same lattice, smaller entries
    return [tuple(v) for v in hermite_rows(kernel, n)]


def primitive(v: Sequence) -> tuple:
    g = reduce(gcd, (int(a) for a in v), 0)
    return tuple(int(a) // g for a in v) if g else tuple(int(a) for a in v)
