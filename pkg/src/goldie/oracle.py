"""Brute-force component count, independent of the partition algorithm.

The support is ``alpha + (ker G ∩ Z^n)`` cut by the sign clauses.  We walk
a box of lattice coefficients, collect the lattice directions inside the
box along which the support recedes, and count support points modulo their
span.
Two consecutive radii must agree before a count is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .arrangement import ArrangementSpec, fiber_membership, sign_class
from .exact import common_denominator, integer_kernel_basis, kernel_basis, rank, solve_linear, vec


@dataclass(frozen=True)
class OracleResult:
    radii: tuple
    span_dim: Optional[int]
    component_count: Optional[int]
    stabilized: bool
    history: tuple = field(default=())  # (radius, span_dim, count) per radius

    def to_dict(self) -> dict:
        return {
            "radii": list(self.radii),
            "span_dim": self.span_dim,
            "component_count": self.component_count,
            "stabilized": self.stabilized,
            "history": [list(h) for h in self.history],
        }


class SupportModel:
    """Support points of ``alpha`` inside the coefficient box ``[-R, R]^k``."""

    def __init__(self, spec: ArrangementSpec, alpha: Sequence, radius: int):
        self.spec = spec
        self.alpha = vec(alpha)
        self.radius = radius
        self.basis = integer_kernel_basis(spec.G)  # rows in Z^n
        k = len(self.basis)
        self.k = k
        B = np.array(self.basis, dtype=np.int64).reshape(k, spec.n)

        T = [i for i in range(spec.r) if sign_class(self.alpha[i]) is not None]
        # flip negative-class coordinates so that membership reads y >= 0
        flip = np.array([1 if sign_class(self.alpha[i]) == "nonneg" else -1 for i in T], dtype=np.int64)
        offset = np.array([0 if f == 1 else -1 for f in flip], dtype=np.int64)
        alpha_T = np.array([int(self.alpha[i]) for i in T], dtype=np.int64)
        B_T = B[:, T]

        if k:
            axes = np.arange(-radius, radius + 1, dtype=np.int64)
            grid = np.stack(np.meshgrid(*([axes] * k), indexing="ij"), axis=-1).reshape(-1, k)
        else:
            grid = np.zeros((1, 0), dtype=np.int64)
        Y = (alpha_T + grid @ B_T) * flip + offset
        mask = np.all(Y >= 0, axis=1)
        self.points = grid[mask]

        # d is a recession direction iff y(p + t d) >= 0 for all t >= 0, i.e. its
        # linear part is >= 0 on T; search every lattice vector of the box
        directions = []
        if k:
            lin = (grid @ B_T) * flip
            cands = grid[np.all(lin >= 0, axis=1) & np.any(grid != 0, axis=1)]
            cands = cands[np.argsort(np.abs(cands).max(axis=1), kind="stable")]
            target = int(np.linalg.matrix_rank(cands.astype(float))) if len(cands) else 0
            chosen = np.zeros((0, k), dtype=np.int64)
            for c in cands:
                if len(chosen) == target:
                    break
                trial = np.vstack([chosen, c])
                if np.linalg.matrix_rank(trial.astype(float)) > len(chosen):
                    chosen = trial
            directions = [tuple(Fraction(int(a)) for a in c) for c in chosen]
            if directions and rank(tuple(directions)) != len(directions):
                raise ArithmeticError("float rank disagrees with exact rank")
        self.directions = directions
        self.span_dim = len(directions)
        # rows orthogonal to the detected span give a class key
        if k:
            perp = kernel_basis(tuple(directions), k) if directions else [
                tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k)
            ]
            D = common_denominator(a for row in perp for a in row)
            self.key_matrix = np.array([[int(D * a) for a in row] for row in perp], dtype=np.int64).reshape(-1, k)
        else:
            self.key_matrix = np.zeros((0, 0), dtype=np.int64)

    def _keys(self, coeffs: np.ndarray) -> np.ndarray:
        return coeffs @ self.key_matrix.T

    @property
    def class_count(self) -> int:
        if len(self.points) == 0:
            return 0
        return len(np.unique(self._keys(self.points), axis=0))

    def closure_contains(self, gamma: Sequence) -> bool:
        """Is ``gamma`` in ``p + span(directions)`` for a support point ``p`` in the box?"""
        gamma = vec(gamma)
        if not fiber_membership(self.spec, gamma):
            return False
        if self.k == 0:
            return gamma == self.alpha
        # gamma - alpha = sum c_l b_l with rational c
        A = tuple(tuple(Fraction(self.basis[l][i]) for l in range(self.k)) for i in range(self.spec.n))
        c = solve_linear(A, tuple(g - a for g, a in zip(gamma, self.alpha)))
        if c is None:
            return False
        key = tuple(sum((Fraction(int(m)) * x for m, x in zip(row, c)), Fraction(0)) for row in self.key_matrix)
        if any(Fraction(v).denominator != 1 for v in key):
            return False
        keys = {tuple(int(a) for a in row) for row in self._keys(self.points)}
        return tuple(int(v) for v in key) in keys


def oracle_component_count(
    spec: ArrangementSpec, alpha: Sequence, radii: Sequence = (10, 15)
) -> OracleResult:
    history = []
    for R in radii:
        model = SupportModel(spec, alpha, R)
        history.append((R, model.span_dim, model.class_count))
    stable = len(history) >= 2 and history[-1][1:] == history[-2][1:]
    last = history[-1]
    return OracleResult(
        tuple(radii),
        last[1] if stable else None,
        last[2] if stable else None,
        stable,
        tuple(history),
    )
