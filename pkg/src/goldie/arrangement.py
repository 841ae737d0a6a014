"""Subtorus data, the affine fiber it cuts out, and the raw support region.

An arrangement is given by a rational ``d x n`` matrix ``G`` whose rows span
the subtorus ``g`` inside the diagonal torus; column ``i`` of ``G`` is the
restriction ``eta_i`` of the ``i``-th coordinate functional.  A character
``chi`` is a vector in ``Q^d``.  Points of the parameter space are vectors
in ``Q^n``; indices are 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import DimensionError, Matrix, Vector, frac, is_integral, mat, mat_vec, rank, vec


class SpecError(ValueError):
    """Malformed or inconsistent arrangement input."""


@dataclass(frozen=True)
class ArrangementSpec:
    n: int
    r: int
    G: Matrix
    chi: Vector

    @property
    def d(self) -> int:
        return len(self.G)

    def eta(self, i: int) -> Vector:
        return tuple(row[i] for row in self.G)

    def etas(self, indices) -> list:
        return [self.eta(i) for i in indices]

    def with_chi(self, chi: Sequence) -> "ArrangementSpec":
        return ArrangementSpec(self.n, self.r, self.G, vec(chi))


@dataclass(frozen=True)
class ConstraintSystem:
    """Index set T of integral coordinates among the first r, with the
    sign ``sigma_i`` of the functional ``lambda_i(u) = sigma_i * u_i`` and
    bound ``q_i`` so that the cone is ``lambda_i(u) <= q_i``."""

    T: tuple
    sigma: dict
    q: dict

    def functional(self, i: int, n: int) -> Vector:
        out = [Fraction(0)] * n
        out[i] = Fraction(self.sigma[i])
        return tuple(out)


def validate_spec(raw: dict) -> tuple:
    """Build a checked spec from a parsed instance mapping.

    Returns ``(spec, alpha)`` where ``alpha`` is None if the input has none.
    ``chi`` is derived as ``G alpha`` when omitted.
    """
    try:
        n = int(raw["n"])
        r = int(raw["r"])
        rows = raw["g_basis"]
    except KeyError as exc:
        raise SpecError(f"missing field {exc.args[0]!r}") from exc
    if not 0 <= r <= n:
        raise SpecError(f"need 0 <= r <= n, got r={r}, n={n}")
    try:
        G = mat(rows)
        alpha = vec(raw["alpha"]) if raw.get("alpha") is not None else None
        chi = vec(raw["chi"]) if raw.get("chi") is not None else None
    except (TypeError, ValueError) as exc:
        raise SpecError(str(exc)) from exc
    if any(len(row) != n for row in G):
        raise SpecError(f"g_basis rows must have length n={n}")
    if rank(G) != len(G):
        raise SpecError("g_basis rows are linearly dependent")
    if alpha is not None and len(alpha) != n:
        raise SpecError(f"alpha must have length n={n}")
    if chi is None:
        if alpha is None:
            raise SpecError("need chi or alpha")
        chi = mat_vec(G, alpha)
    if len(chi) != len(G):
        raise SpecError(f"chi must have length d={len(G)}")
    return ArrangementSpec(n, r, G, chi), alpha


def change_basis(spec: ArrangementSpec, M: Sequence) -> ArrangementSpec:
    """Rewrite ``G`` and ``chi`` in another basis of ``g``: ``G' = M G``, ``chi' = M chi``."""
    M = mat(M)
    if len(M) != spec.d or rank(M) != spec.d:
        raise SpecError("basis change must be an invertible d x d matrix")
    cols = [spec.eta(i) for i in range(spec.n)]
    G2 = tuple(tuple(sum((m * c[k] for k, m in enumerate(row)), Fraction(0)) for c in cols) for row in M)
    return ArrangementSpec(spec.n, spec.r, G2, mat_vec(M, spec.chi))


def fiber_membership(spec: ArrangementSpec, beta: Sequence) -> bool:
    if len(beta) != spec.n:
        raise DimensionError(f"point of length {len(beta)} in dimension {spec.n}")
    return mat_vec(spec.G, beta) == tuple(spec.chi)


def constraint_system(spec: ArrangementSpec, alpha: Sequence) -> ConstraintSystem:
    if not fiber_membership(spec, alpha):
        raise SpecError("alpha does not lie on the fiber G x = chi")
    T, sigma, q = [], {}, {}
    for i in range(spec.r):
        a = frac(alpha[i])
        if not is_integral(a):
            continue
        T.append(i)
        if a >= 0:
            sigma[i], q[i] = -1, a
        else:
            sigma[i], q[i] = 1, -a - 1
    return ConstraintSystem(tuple(T), sigma, q)


def sign_class(a) -> Optional[str]:
    """``"nonneg"`` for integers >= 0, ``"neg"`` for integers < 0, else None."""
    a = frac(a)
    if not is_integral(a):
        return None
    return "nonneg" if a >= 0 else "neg"


def support_membership(spec: ArrangementSpec, alpha: Sequence, beta: Sequence) -> bool:
    """Is ``beta`` a weight of the simple module generated in degree ``alpha``?"""
    if not all(is_integral(frac(b) - frac(a)) for a, b in zip(alpha, beta)):
        return False
    if not fiber_membership(spec, beta):
        return False
    for i in range(spec.r):
        if (sign_class(beta[i]) == "nonneg") != (sign_class(alpha[i]) == "nonneg"):
            return False
    return True
