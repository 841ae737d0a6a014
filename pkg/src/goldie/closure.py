"""Zariski closure of a support region.

The integral coordinates ``T`` split uniquely into a bounded part ``J`` and a
part ``I_T`` whose inequalities disappear under closure.  ``J`` is decided
by one exact LP per index; both halves come with rational witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arrangement import ArrangementSpec, ConstraintSystem, SpecError, constraint_system, fiber_membership
from .exact import (
    LinearProgram,
    in_span,
    is_integral,
    kernel_basis,
    lattice_membership,
    lp_solve,
    rank,
    vec,
)


class AssumptionError(ValueError):
    """The direct-sum condition on the eta's fails; no polytope model exists."""


@dataclass(frozen=True)
class PartitionCertificate:
    T: tuple
    J: tuple
    I_T: tuple
    witness_e: tuple  # point of ker G in Q^n
    witness_z: dict  # T -> Fraction

    def check(self, spec: ArrangementSpec, cs: ConstraintSystem) -> list:
        """Return the list of violated certificate clauses (empty if valid)."""
        problems = []
        n = spec.n
        if set(self.J) | set(self.I_T) != set(self.T) or set(self.J) & set(self.I_T):
            problems.append("J and I_T do not partition T")
        if any(v != 0 for v in _mv(spec.G, self.witness_e)):
            problems.append("witness e not in ker G")
        for l, k in enumerate(kernel_basis(spec.G, n)):
            if sum((self.witness_z[t] * cs.sigma[t] * k[t] for t in self.T), Fraction(0)) != 0:
                problems.append(f"sum z_k lambda_k nonzero on kernel vector {l}")
        for j in self.J:
            if not self.witness_z[j] > 0:
                problems.append(f"z_{j} not positive")
            if cs.sigma[j] * self.witness_e[j] != 0:
                problems.append(f"lambda_{j}(e) != 0")
        for i in self.I_T:
            if self.witness_z[i] != 0:
                problems.append(f"z_{i} not zero")
            if not cs.sigma[i] * self.witness_e[i] > 0:
                problems.append(f"lambda_{i}(e) not positive")
        return problems


def _mv(G, x):
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in G)


def partition_indices(spec: ArrangementSpec, cs: ConstraintSystem) -> PartitionCertificate:
    T = cs.T
    m = len(T)
    K = kernel_basis(spec.G, spec.n)
    # sum_t z_t lambda_t vanishes on E  <=>  vanishes on every kernel basis vector
    eq_A = tuple(tuple(Fraction(cs.sigma[t]) * k[t] for t in T) for k in K)
    eq_b = (Fraction(0),) * len(K)
    nonneg = tuple(tuple(Fraction(-int(a == b)) for b in range(m)) for a in range(m))

    J, z_total = [], [Fraction(0)] * m
    for pos, t in enumerate(T):
        le_A = nonneg + (nonneg[pos],)
        le_b = (Fraction(0),) * m + (Fraction(-1),)
        res = lp_solve(LinearProgram(m, eq_A, eq_b, le_A, le_b))
        if res.is_feasible:
            J.append(t)
            z_total = [a + b for a, b in zip(z_total, res.point)]
    J = tuple(J)
    I_T = tuple(t for t in T if t not in J)

    if I_T:
        k = len(K)
        comp = lambda t: tuple(Fraction(cs.sigma[t]) * kv[t] for kv in K)  # noqa: E731
        res = lp_solve(
            LinearProgram(
                k,
                eq_A=tuple(comp(j) for j in J),
                eq_b=(Fraction(0),) * len(J),
                le_A=tuple(tuple(-c for c in comp(i)) for i in I_T),
                le_b=(Fraction(-1),) * len(I_T),
            )
        )
        if not res.is_feasible:
            raise ArithmeticError("no witness e for the unbounded indices; LP failure")
        e = tuple(sum((c * kv[i] for c, kv in zip(res.point, K)), Fraction(0)) for i in range(spec.n))
    else:
        e = (Fraction(0),) * spec.n

    return PartitionCertificate(T, J, I_T, e, dict(zip(T, z_total)))


@dataclass(frozen=True)
class SignConfiguration:
    J_plus: tuple
    J_minus: tuple
    I: tuple

    @property
    def J(self) -> tuple:
        return tuple(sorted(self.J_plus + self.J_minus))

    def sign(self, j: int) -> int:
        """-1 on J_plus, +1 on J_minus: the sign of the functional lambda_j."""
        return -1 if j in self.J_plus else 1


def sign_configuration(cert: PartitionCertificate, alpha: Sequence) -> SignConfiguration:
    n = len(alpha)
    J_plus = tuple(j for j in cert.J if alpha[j] >= 0)
    J_minus = tuple(j for j in cert.J if alpha[j] < 0)
    I = tuple(i for i in range(n) if i not in cert.J)
    return SignConfiguration(J_plus, J_minus, I)


def assumption3_defect(spec: ArrangementSpec, sc: SignConfiguration) -> Optional[str]:
    """None if ``g* = span(eta_J) (+) span(eta_I)``, else a description of the overlap."""
    etas_J = spec.etas(sc.J)
    etas_I = spec.etas(sc.I)
    rJ = rank(tuple(etas_J)) if etas_J else 0
    rI = rank(tuple(etas_I)) if etas_I else 0
    if rJ + rI == spec.d and rank(tuple(etas_J + etas_I)) == spec.d:
        return None
    J_names = ", ".join(f"eta{j + 1}" for j in sc.J)
    overlap = [
        f"eta{i + 1} in span{{{J_names}}}"
        for i in sc.I
        if any(a != 0 for a in spec.eta(i)) and etas_J and in_span(spec.eta(i), etas_J)
    ]
    msg = f"rank span(eta_J) = {rJ}, rank span(eta_I) = {rI}, dim g* = {spec.d}: sum is not direct"
    if overlap:
        msg += "; " + ", ".join(overlap)
    return msg


def check_assumption3(spec: ArrangementSpec, sc: SignConfiguration) -> bool:
    return assumption3_defect(spec, sc) is None


@dataclass(frozen=True)
class RegionClosure:
    spec: ArrangementSpec
    alpha: tuple
    certificate: PartitionCertificate
    signs: SignConfiguration
    theta: tuple  # sum_{j in J} alpha_j eta_j, in Q^d
    lattice_gens: tuple  # eta_i for i in I

    @property
    def J(self) -> tuple:
        return self.signs.J


def region_closure(spec: ArrangementSpec, alpha: Sequence) -> RegionClosure:
    alpha = vec(alpha)
    cs = constraint_system(spec, alpha)
    cert = partition_indices(spec, cs)
    sc = sign_configuration(cert, alpha)
    theta = _theta(spec, sc.J, alpha)
    return RegionClosure(spec, alpha, cert, sc, theta, tuple(spec.etas(sc.I)))


def _theta(spec, J, point) -> tuple:
    return tuple(sum((point[j] * spec.G[k][j] for j in J), Fraction(0)) for k in range(spec.d))


def closure_membership(rc: RegionClosure, gamma: Sequence) -> bool:
    gamma = vec(gamma)
    if not fiber_membership(rc.spec, gamma):
        return False
    for j in rc.signs.J_plus:
        if not (is_integral(gamma[j]) and gamma[j] >= 0):
            return False
    for j in rc.signs.J_minus:
        if not (is_integral(gamma[j]) and gamma[j] < 0):
            return False
    diff = tuple(a - b for a, b in zip(_theta(rc.spec, rc.J, gamma), rc.theta))
    return lattice_membership(diff, rc.lattice_gens)


def closure_inclusion(rc_a: RegionClosure, rc_b: RegionClosure) -> bool:
    """Is the closure of ``rc_a`` contained in the closure of ``rc_b``?"""
    if rc_a.spec != rc_b.spec:
        raise SpecError("closures belong to different arrangements")
    sa, sb = rc_a.signs, rc_b.signs
    if not (set(sb.J_plus) <= set(sa.J_plus) and set(sb.J_minus) <= set(sa.J_minus)):
        return False
    diff = tuple(a - b for a, b in zip(rc_b.theta, rc_a.theta))
    return lattice_membership(diff, rc_b.lattice_gens)


@dataclass(frozen=True)
class ComponentFibers:
    """Connected components as fibers ``V(h - chi_i(h))`` of a torus ``h ⊇ g``.

    ``h_basis`` are vectors in the coordinates of the diagonal torus: first
    ``sigma_j * pi_j`` for ``j`` in J, then rows of G completing the span.
    """

    h_basis: tuple
    characters: tuple

    def component_of(self, gamma: Sequence) -> Optional[int]:
        values = tuple(sum((a * b for a, b in zip(h, gamma)), Fraction(0)) for h in self.h_basis)
        for k, ch in enumerate(self.characters):
            if values == ch:
                return k
        return None


def component_fibers(rc: RegionClosure, dset: Sequence) -> ComponentFibers:
    n = rc.spec.n
    basis = []
    for j in rc.J:
        v = [Fraction(0)] * n
        v[j] = Fraction(rc.signs.sign(j))
        basis.append(tuple(v))
    for row in rc.spec.G:
        if not in_span(row, basis):
            basis.append(tuple(row))
    characters = tuple(
        tuple(sum((a * b for a, b in zip(h, delta)), Fraction(0)) for h in basis) for delta in dset
    )
    return ComponentFibers(tuple(basis), characters)
