"""Rational polytopes in H-description: boxes, vertices, lattice points.

The polytope attached to a closure lives in ``Q^J``: the affine space
``sum_j v_j eta_j = chi_J`` cut by ``v_j >= 0`` on J_plus and ``v_j <= -1``
on J_minus.  Its lattice points are in bijection with the connected
components of the closure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arrangement import ArrangementSpec, fiber_membership
from .closure import AssumptionError, PartitionCertificate, SignConfiguration, assumption3_defect
from .exact import LinearProgram, dot, lp_solve, rank, rref, solve_linear, vec


class UnboundedPolytopeError(ArithmeticError):
    """A coordinate is unbounded on a polytope that should be bounded."""


@dataclass
class RationalPolytope:
    dim: int
    eq_A: tuple = ()
    eq_b: tuple = ()
    le_A: tuple = ()
    le_b: tuple = ()
    labels: tuple = ()
    # optional data for the closed-form bounding box: (weights z_j, alpha_J, signs)
    witness: Optional[tuple] = None
    _box: object = field(default=None, repr=False, compare=False)
    _vertices: object = field(default=None, repr=False, compare=False)

    def contains(self, v: Sequence) -> bool:
        return all(dot(r, v) == b for r, b in zip(self.eq_A, self.eq_b)) and all(
            dot(r, v) <= b for r, b in zip(self.le_A, self.le_b)
        )

    def scaled(self, q) -> "RationalPolytope":
        """``q * P`` for ``q > 0``."""
        q = Fraction(q)
        if q <= 0:
            raise ValueError("dilation factor must be positive")
        return RationalPolytope(
            self.dim,
            self.eq_A,
            tuple(q * b for b in self.eq_b),
            self.le_A,
            tuple(q * b for b in self.le_b),
            self.labels,
        )

    def translated(self, t: Sequence) -> "RationalPolytope":
        """``P + t``."""
        t = vec(t)
        return RationalPolytope(
            self.dim,
            self.eq_A,
            tuple(b + dot(r, t) for r, b in zip(self.eq_A, self.eq_b)),
            self.le_A,
            tuple(b + dot(r, t) for r, b in zip(self.le_A, self.le_b)),
            self.labels,
        )

    def _lp(self, objective=None, maximize=True):
        return lp_solve(
            LinearProgram(self.dim, self.eq_A, self.eq_b, self.le_A, self.le_b, objective, maximize)
        )

    def is_empty(self) -> bool:
        if self.dim == 0:
            return not self.contains(())
        return not self._lp().is_feasible

    def bounding_box(self):
        """Tight per-coordinate ``(lo, hi)`` intervals, or None when empty."""
        if self._box is None:
            self._box = _lp_box(self)
        return self._box

    def vertices(self) -> list:
        if self._vertices is None:
            self._vertices = _vertices(self)
        return self._vertices

    def affine_dim(self) -> int:
        vs = self.vertices()
        if not vs:
            return -1
        diffs = tuple(tuple(a - b for a, b in zip(v, vs[0])) for v in vs[1:])
        return rank(diffs) if diffs else 0

    def lattice_points(self) -> list:
        return _lattice_points(self)

    def denominator(self) -> int:
        """Least ``d`` with ``d * P`` integral (lcm of vertex denominators)."""
        return math.lcm(1, *(c.denominator for v in self.vertices() for c in v))


def _lp_box(p: RationalPolytope):
    if p.dim == 0:
        return None if not p.contains(()) else ()
    if p.is_empty():
        return None
    box = []
    for j in range(p.dim):
        e = tuple(Fraction(int(k == j)) for k in range(p.dim))
        hi = p._lp(e, maximize=True)
        lo = p._lp(e, maximize=False)
        if hi.status != "optimal" or lo.status != "optimal":
            raise UnboundedPolytopeError(f"coordinate {j} is unbounded")
        box.append((lo.value, hi.value))
    box = tuple(box)
    if p.witness is not None:
        formula = witness_box(*p.witness)
        for (lo, hi), (flo, fhi) in zip(box, formula):
            if not (flo <= lo and hi <= fhi):
                raise ArithmeticError("LP box escapes the closed-form witness box")
    return box


def witness_box(weights, alpha_J, signs) -> tuple:
    """Closed-form box from a positive relation ``sum z_j lambda_j = 0``.

    With ``q_j`` the cone bound of coordinate j, each coordinate is squeezed
    by ``-lambda_j(v - alpha) <= (1/z_j) sum_{k != j} z_k q_k``.
    """
    q = [a if s < 0 else -a - 1 for a, s in zip(alpha_J, signs)]
    out = []
    for j, (a, s) in enumerate(zip(alpha_J, signs)):
        slack = sum((weights[k] * q[k] for k in range(len(q)) if k != j), Fraction(0)) / weights[j]
        out.append((Fraction(0), a + slack) if s < 0 else (a - slack, Fraction(-1)))
    return tuple(out)


def _vertices(p: RationalPolytope) -> list:
    if p.dim == 0:
        return [()] if p.contains(()) else []
    r_eq = rank(p.eq_A) if p.eq_A else 0
    need = p.dim - r_eq
    found = set()
    for active in itertools.combinations(range(len(p.le_A)), need):
        A = tuple(p.eq_A) + tuple(p.le_A[i] for i in active)
        if rank(A) != p.dim:
            continue
        b = tuple(p.eq_b) + tuple(p.le_b[i] for i in active)
        x = solve_linear(A, b)
        if x is not None and p.contains(x):
            found.add(x)
    return sorted(found)


def _lattice_points(p: RationalPolytope) -> list:
    if p.dim == 0:
        return [()] if p.contains(()) else []
    box = p.bounding_box()
    if box is None:
        return []
    n = p.dim
    if p.eq_A:
        R, pivots = rref(tuple(tuple(r) + (b,) for r, b in zip(p.eq_A, p.eq_b)))
        if pivots and pivots[-1] == n:
            return []
    else:
        R, pivots = (), ()
    free = [j for j in range(n) if j not in pivots]
    ranges = [range(math.ceil(box[j][0]), math.floor(box[j][1]) + 1) for j in free]
    points = []
    for values in itertools.product(*ranges):
        v = [Fraction(0)] * n
        for j, val in zip(free, values):
            v[j] = Fraction(val)
        ok = True
        for row, piv in zip(R, pivots):
            x = row[n] - sum((row[j] * v[j] for j in free), Fraction(0))
            if x.denominator != 1 or not box[piv][0] <= x <= box[piv][1]:
                ok = False
                break
            v[piv] = x
        if ok and all(dot(r, v) <= b for r, b in zip(p.le_A, p.le_b)):
            points.append(tuple(int(a) for a in v))
    return sorted(points)


# ---------------------------------------------------------------------------
# the polytope of a sign configuration


def build_polytope(
    spec: ArrangementSpec,
    alpha: Sequence,
    sc: SignConfiguration,
    cert: Optional[PartitionCertificate] = None,
) -> RationalPolytope:
    defect = assumption3_defect(spec, sc)
    if defect is not None:
        raise AssumptionError(defect)
    alpha = vec(alpha)
    J = sc.J
    m = len(J)
    eq_A = tuple(tuple(spec.G[k][j] for j in J) for k in range(spec.d)) if m else ()
    eq_b = tuple(sum((alpha[j] * spec.G[k][j] for j in J), Fraction(0)) for k in range(spec.d)) if m else ()
    le_A, le_b = [], []
    for pos, j in enumerate(J):
        row = [Fraction(0)] * m
        if j in sc.J_plus:
            row[pos] = Fraction(-1)
            le_b.append(Fraction(0))
        else:
            row[pos] = Fraction(1)
            le_b.append(Fraction(-1))
        le_A.append(tuple(row))
    witness = None
    if cert is not None and m:
        witness = (
            tuple(cert.witness_z[j] for j in J),
            tuple(alpha[j] for j in J),
            tuple(sc.sign(j) for j in J),
        )
    p = RationalPolytope(m, eq_A, eq_b, tuple(le_A), tuple(le_b), labels=J, witness=witness)
    try:
        p.bounding_box()
    except UnboundedPolytopeError as exc:
        raise UnboundedPolytopeError(
            f"polytope of J={tuple(j + 1 for j in J)} is unbounded; J is inconsistent with the arrangement"
        ) from exc
    return p


def bounding_box(p: RationalPolytope):
    return p.bounding_box()


def enumerate_lattice_points(p: RationalPolytope) -> list:
    return p.lattice_points()


def vertex_enumeration(p: RationalPolytope) -> list:
    return p.vertices()


def dset_representatives(spec: ArrangementSpec, alpha: Sequence, sc: SignConfiguration, p: RationalPolytope) -> list:
    """Lift lattice points of the polytope to canonical component representatives."""
    alpha = vec(alpha)
    reps = []
    for v in p.lattice_points():
        delta = list(alpha)
        for j, vj in zip(sc.J, v):
            delta[j] = Fraction(vj)
        delta = tuple(delta)
        if not fiber_membership(spec, delta):
            raise ArithmeticError(f"lifted representative {delta} is off the fiber")
        reps.append(delta)
    return reps
