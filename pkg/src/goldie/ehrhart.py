"""Dilation families: apex, rescaling, reference polytope and quasi-polynomials.

For a sign configuration ``J = J_plus ∪ J_minus`` the dilation ``x * alpha``
moves the polytope ``P_J`` by a homothety centred at the apex ``z``
(0 on J_plus, -1 on J_minus).  Writing ``z = a0 * alpha_J (mod V_0)`` with
``a0 = a_Z / a_N`` the count for ``x`` is the number of lattice points of
``(a_N x - a_Z) * Q`` where ``Q = (P_J - z) / (a_N - a_Z)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arrangement import ArrangementSpec, constraint_system
from .closure import SignConfiguration
from .exact import solve_linear, vec
from .polytope import RationalPolytope


class NoDilationAxis(ValueError):
    """``sum z_j eta_j`` is not a rational multiple of ``chi_J``."""


class QuasiPolynomialFitError(ArithmeticError):
    pass


def apex(sc: SignConfiguration) -> tuple:
    return tuple(Fraction(0) if j in sc.J_plus else Fraction(-1) for j in sc.J)


def compute_a0(spec: ArrangementSpec, alpha: Sequence, sc: SignConfiguration, z: Sequence) -> Fraction:
    alpha = vec(alpha)
    J = sc.J
    w = tuple(sum((zj * spec.G[k][j] for zj, j in zip(z, J)), Fraction(0)) for k in range(spec.d))
    chi_J = tuple(sum((alpha[j] * spec.G[k][j] for j in J), Fraction(0)) for k in range(spec.d))
    if all(c == 0 for c in chi_J):
        if all(c == 0 for c in w):
            return Fraction(0)
        raise NoDilationAxis("chi_J = 0 but the apex does not lie in V_0")
    k = next(k for k, c in enumerate(chi_J) if c != 0)
    a0 = w[k] / chi_J[k]
    if any(wk != a0 * ck for wk, ck in zip(w, chi_J)):
        raise NoDilationAxis(f"sum z_j eta_j = {fmt_vec(w)} is not a multiple of chi_J = {fmt_vec(chi_J)}")
    return a0


@dataclass(frozen=True)
class Rescaling:
    """``f(x) = (x - a0) / (1 - a0) = s(x) / scale`` with ``s(x) = a_N x - a_Z``."""

    a_N: int
    a_Z: int

    @property
    def a0(self) -> Fraction:
        return Fraction(self.a_Z, self.a_N)

    @property
    def scale(self) -> int:
        return self.a_N - self.a_Z

    def s(self, x) -> Fraction:
        return self.a_N * Fraction(x) - self.a_Z

    def f(self, x) -> Fraction:
        return self.s(x) / self.scale


def integral_rescaling(a0) -> Rescaling:
    a0 = Fraction(a0)
    if a0 == 1:
        raise ValueError("a0 = 1: the apex coincides with alpha_J, no rescaling exists")
    resc = Rescaling(a0.denominator, a0.numerator)
    if resc.scale <= 0:
        raise ValueError(f"a0 = {a0} > 1 cannot come from a bounded polytope")
    return resc


def count_dilation(base: RationalPolytope, q) -> int:
    """Number of integer points in ``q * base``."""
    return len(base.scaled(q).lattice_points())


# ---------------------------------------------------------------------------
# quasi-polynomials


def _expand_affine(coeffs, a, b) -> tuple:
    """Coefficients of ``p(a x + b)`` from those of ``p`` (constant first)."""
    out = [Fraction(0)] * len(coeffs)
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        for i in range(k + 1):
            out[i] += c * math.comb(k, i) * Fraction(a) ** i * Fraction(b) ** (k - i)
    return tuple(out)


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Polynomial with coefficients periodic in ``t mod period``."""

    period: int
    coeffs: tuple  # one tuple per residue class, constant term first

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise ValueError("need one coefficient row per residue class")
        object.__setattr__(self, "coeffs", tuple(_trim(vec(row)) for row in self.coeffs))

    def __call__(self, t) -> Fraction:
        row = self.coeffs[int(t) % self.period]
        return sum((c * Fraction(t) ** k for k, c in enumerate(row)), Fraction(0))

    @property
    def degree(self) -> int:
        return max((len(row) - 1 for row in self.coeffs if any(row)), default=0)

    def reduced(self) -> "QuasiPolynomial":
        for m in range(1, self.period + 1):
            if self.period % m == 0 and all(self.coeffs[i] == self.coeffs[i % m] for i in range(self.period)):
                return QuasiPolynomial(m, self.coeffs[:m])
        return self

    def compose_affine(self, a: int, b: int) -> "QuasiPolynomial":
        """``x -> self(a x + b)`` for integers ``a > 0``, ``b``."""
        m = self.period
        rows = tuple(_expand_affine(self.coeffs[(a * rho + b) % m], a, b) for rho in range(m))
        return QuasiPolynomial(m, rows).reduced()

    def to_dict(self) -> dict:
        return {"period": self.period, "coefficients": [[str(c) for c in row] for row in self.coeffs]}

    @classmethod
    def from_dict(cls, d: dict) -> "QuasiPolynomial":
        return cls(int(d["period"]), tuple(tuple(vec(row)) for row in d["coefficients"]))

    def to_text(self) -> str:
        lines = [str(self.period)]
        lines += [" ".join(str(c) for c in row) for row in self.coeffs]
        return "\n".join(lines)

    def pretty(self, var: str = "t") -> str:
        def poly(row):
            terms = []
            for k in range(len(row) - 1, -1, -1):
                c = row[k]
                if c == 0:
                    continue
                mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
                if mono and c == 1:
                    terms.append(mono)
                elif mono:
                    terms.append(f"({c}){mono}" if c.denominator != 1 else f"{c}{mono}")
                else:
                    terms.append(str(c))
            return " + ".join(terms).replace("+ -", "- ") or "0"

        if self.period == 1:
            return poly(self.coeffs[0])
        return "; ".join(f"{var}≡{rho} mod {self.period}: {poly(row)}" for rho, row in enumerate(self.coeffs))


def fit_quasipolynomial(Q: RationalPolytope) -> QuasiPolynomial:
    """Ehrhart quasi-polynomial of ``Q`` by exact interpolation of counts.

    Per residue class, ``dim + 1`` positive dilations determine the branch
    and two more validate it.
    """
    if Q.is_empty():
        return QuasiPolynomial(1, ((Fraction(0),),))
    period = Q.denominator()
    deg = max(Q.affine_dim(), 0)

    def attempt(m):
        rows = []
        for rho in range(m):
            start = rho if rho > 0 else m
            ts = [start + m * k for k in range(deg + 3)]
            counts = [count_dilation(Q, t) for t in ts]
            A = tuple(tuple(Fraction(t) ** k for k in range(deg + 1)) for t in ts[: deg + 1])
            coeffs = solve_linear(A, counts[: deg + 1])
            branch = QuasiPolynomial(1, (coeffs,))
            if any(branch(t) != c for t, c in zip(ts, counts)):
                return None
            rows.append(coeffs)
        return QuasiPolynomial(m, tuple(rows))

    qp = attempt(period) or attempt(2 * period)
    if qp is None:
        raise QuasiPolynomialFitError(f"counts of Q do not follow a quasi-polynomial of period {period}")
    return qp.reduced()


# ---------------------------------------------------------------------------
# admissibility


def is_admissible_dilation(spec: ArrangementSpec, alpha: Sequence, x) -> bool:
    """Does ``x * alpha`` keep the index set T and its sign classes?"""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("dilation factor must be positive")
    alpha = vec(alpha)
    base = constraint_system(spec, alpha)
    xa = tuple(x * a for a in alpha)
    dil = constraint_system(spec.with_chi(tuple(x * c for c in spec.chi)), xa)
    return base.T == dil.T and base.sigma == dil.sigma


def admissible_denominators(spec: ArrangementSpec, alpha: Sequence) -> tuple:
    """Denominators of the non-integral coordinates among the first r."""
    return tuple(sorted({Fraction(a).denominator for a in vec(alpha)[: spec.r] if Fraction(a).denominator != 1}))


@dataclass(frozen=True)
class GoldieFamily:
    """Everything needed to evaluate Goldie ranks along ``x * alpha``.

    ``status`` is ``"closed-form"`` (quasi-polynomial available),
    ``"trivial"`` (J empty, constant 1), ``"degenerate"`` (alpha_J equals the
    apex) or ``"no-dilation-axis"``; the last two carry no quasi-polynomial.
    """

    alpha: tuple
    signs: SignConfiguration
    polytope: RationalPolytope
    apex: tuple
    status: str
    rescaling: Optional[Rescaling] = None
    reference: Optional[RationalPolytope] = None
    ehrhart: Optional[QuasiPolynomial] = None
    rank_quasi: Optional[QuasiPolynomial] = None
    denominators: tuple = ()
    note: str = ""

    @property
    def has_closed_form(self) -> bool:
        return self.rank_quasi is not None


def build_family(spec: ArrangementSpec, alpha: Sequence, sc: SignConfiguration, P: RationalPolytope) -> GoldieFamily:
    alpha = vec(alpha)
    z = apex(sc)
    dens = admissible_denominators(spec, alpha)
    alpha_J = tuple(alpha[j] for j in sc.J)
    common = dict(alpha=alpha, signs=sc, polytope=P, apex=z, denominators=dens)
    if not sc.J:
        const = QuasiPolynomial(1, ((Fraction(1),),))
        return GoldieFamily(status="trivial", ehrhart=const, rank_quasi=const, note="J is empty", **common)
    if alpha_J == z:
        return GoldieFamily(status="degenerate", note="alpha_J equals the apex; no closed form derived", **common)
    try:
        a0 = compute_a0(spec, alpha, sc, z)
    except NoDilationAxis as exc:
        return GoldieFamily(status="no-dilation-axis", note=f"no closed form derived: {exc}", **common)
    resc = integral_rescaling(a0)
    Q = P.translated(tuple(-c for c in z)).scaled(Fraction(1, resc.scale))
    ehp = fit_quasipolynomial(Q)
    return GoldieFamily(
        status="closed-form",
        rescaling=resc,
        reference=Q,
        ehrhart=ehp,
        rank_quasi=ehp.compose_affine(resc.a_N, -resc.a_Z),
        **common,
    )


def fmt_vec(v) -> str:
    return "(" + ", ".join(str(a) for a in v) + ")"
