"""Normal ordering in the localized Weyl algebra ``A_{r,s}``.

Generators are ``x_1..x_n`` (invertible for indices above ``r``) and
``d_1..d_n`` with ``[d_i, x_j] = delta_ij``.  A normal-ordered monomial is
``c * x^a d^b``; an element is a finite map ``(a, b) -> c``.

Indices in the textual syntax are 1-based (``x1^3 d2``), internal tuples
are 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class WeylMonomial:
    coefficient: Fraction
    a: tuple  # x-exponents
    b: tuple  # d-exponents


def weight_of(m: WeylMonomial) -> tuple:
    """Torus weight of a normal-ordered monomial: x-exponents minus d-exponents."""
    return tuple(ai - bi for ai, bi in zip(m.a, m.b))


class WeylAlgebra:
    def __init__(self, n: int, r: int):
        if not 0 <= r <= n:
            raise WeylError(f"need 0 <= r <= n, got r={r}, n={n}")
        self.n = n
        self.r = r

    # -- construction ------------------------------------------------------

    def element(self, terms=None) -> "WeylElement":
        return WeylElement(self, terms or {})

    def one(self) -> "WeylElement":
        zero = (0,) * self.n
        return self.element({(zero, zero): Fraction(1)})

    def monomial(self, m: WeylMonomial) -> "WeylElement":
        self._check_exponents(m.a, m.b)
        return self.element({(tuple(m.a), tuple(m.b)): Fraction(m.coefficient)})

    def x(self, i: int, e: int = 1) -> "WeylElement":
        return self.normalize([("x", i, e)])

    def d(self, i: int, e: int = 1) -> "WeylElement":
        return self.normalize([("d", i, e)])

    def pi(self, i: int) -> "WeylElement":
        """``x_i d_i``, a basis element of the torus."""
        return self.normalize([("x", i, 1), ("d", i, 1)])

    def a_alpha(self, alpha: Sequence[int]) -> WeylMonomial:
        return build_a_alpha(alpha, self.r)

    def _check_exponents(self, a, b):
        if len(a) != self.n or len(b) != self.n:
            raise WeylError("exponent vectors must have length n")
        for i, (ai, bi) in enumerate(zip(a, b)):
            if bi < 0:
                raise WeylError(f"negative exponent on d{i + 1}")
            if ai < 0 and i < self.r:
                raise WeylError(f"negative exponent on non-invertible x{i + 1}")

    # -- rewriting ---------------------------------------------------------

    def normalize(self, word: Iterable, coefficient=1) -> "WeylElement":
        """Normal-order a product of generator powers.

        ``word`` is a sequence of ``(kind, i, e)`` with kind ``"x"`` or
        ``"d"`` and ``i`` 0-based.  Rewrites the leftmost ``d_i x_j^e`` pair:
        different indices commute, equal indices use
        ``d x^e = x^e d + e x^(e-1)``.
        """
        factors = []
        for kind, i, e in word:
            if kind not in ("x", "d") or not 0 <= i < self.n:
                raise WeylError(f"bad generator {kind}{i + 1}")
            if e < 0 and (kind == "d" or i < self.r):
                raise WeylError(f"negative exponent on non-invertible {kind}{i + 1}")
            if e == 0:
                continue
            if kind == "d":
                factors.extend([("d", i, 1)] * e)
            else:
                factors.append(("x", i, e))

        out: dict = {}
        stack = [(Fraction(coefficient), factors)]
        while stack:
            c, w = stack.pop()
            k = next((k for k in range(len(w) - 1) if w[k][0] == "d" and w[k + 1][0] == "x"), None)
            if k is None:
                a, b = [0] * self.n, [0] * self.n
                for kind, i, e in w:
                    (a if kind == "x" else b)[i] += e
                key = (tuple(a), tuple(b))
                out[key] = out.get(key, Fraction(0)) + c
                continue
            (_, i, _), (_, j, e) = w[k], w[k + 1]
            head, tail = w[:k], w[k + 2:]
            stack.append((c, head + [w[k + 1], w[k]] + tail))
            if i == j:
                lower = [("x", j, e - 1)] if e != 1 else []
                stack.append((c * e, head + lower + tail))
        return self.element({k: v for k, v in out.items() if v != 0})

    def parse(self, text: str) -> "WeylElement":
        return parse_element(text, self)


def build_a_alpha(alpha: Sequence[int], r: int) -> WeylMonomial:
    """``prod x_i^(alpha_i)``, using ``d_i^(-alpha_i)`` for ``i <= r`` with ``alpha_i < 0``."""
    a, b = [], []
    for i, ai in enumerate(alpha):
        ai = int(ai)
        if i < r and ai < 0:
            a.append(0)
            b.append(-ai)
        else:
            a.append(ai)
            b.append(0)
    return WeylMonomial(Fraction(1), tuple(a), tuple(b))


def _monomial_word(a, b) -> list:
    return [("x", i, e) for i, e in enumerate(a) if e] + [("d", i, e) for i, e in enumerate(b) if e]


class WeylElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: WeylAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {k: Fraction(v) for k, v in terms.items() if v != 0}

    def monomials(self) -> list:
        return [WeylMonomial(c, a, b) for (a, b), c in sorted(self.terms.items())]

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return WeylElement(self.algebra, out)

    def __neg__(self):
        return WeylElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return WeylElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return other * self
        alg = self.algebra
        total = alg.element()
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                word = _monomial_word(a1, b1) + _monomial_word(a2, b2)
                total = total + alg.normalize(word, c1 * c2)
        return total

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def renormalize(self) -> "WeylElement":
        total = self.algebra.element()
        for (a, b), c in self.terms.items():
            total = total + self.algebra.normalize(_monomial_word(a, b), c)
        return total

    def weights(self) -> set:
        return {tuple(ai - bi for ai, bi in zip(a, b)) for a, b in self.terms}

    def __repr__(self):
        return f"WeylElement({format_element(self)!r})"


def commutator(s: WeylElement, t: WeylElement) -> WeylElement:
    return s * t - t * s


# ---------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"\s*(?:(?P<gen>[xd])(?P<idx>\d+)(?:\^(?P<exp>-?\d+))?|(?P<num>\d+(?:/\d+)?)|(?P<op>[+\-*]))")


def parse_element(text: str, algebra: WeylAlgebra) -> WeylElement:
    """Parse e.g. ``"d1 x1^2 - 3 x2 + x3^-6"``; juxtaposition is the product."""
    pos, tokens = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WeylError(f"cannot parse {text[pos:]!r}")
        tokens.append(m)
        pos = m.end()

    total = algebra.element()
    sign, coef, word, seen = 1, Fraction(1), [], False

    def flush():
        nonlocal total
        if seen:
            total = total + algebra.normalize(word, sign * coef)

    for tok in tokens:
        if tok["op"] in ("+", "-"):
            if seen:
                flush()
                sign, coef, word, seen = 1, Fraction(1), [], False
            if tok["op"] == "-":
                sign = -sign
        elif tok["op"] == "*":
            continue
        elif tok["num"] is not None:
            coef *= Fraction(tok["num"])
            seen = True
        else:
            i = int(tok["idx"]) - 1
            e = int(tok["exp"]) if tok["exp"] is not None else 1
            word.append((tok["gen"], i, e))
            seen = True
    if not seen and tokens:
        raise WeylError(f"dangling operator in {text!r}")
    flush()
    return total


def format_element(el: WeylElement) -> str:
    if el.is_zero():
        return "0"
    parts = []
    for (a, b), c in sorted(el.terms.items(), key=lambda kv: (-sum(kv[0][0]) - sum(kv[0][1]), kv[0])):
        factors = [f"x{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(a) if e]
        factors += [f"d{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(b) if e]
        mag = abs(c)
        body = " ".join(factors)
        if not factors:
            body = str(mag)
        elif mag != 1:
            body = f"{mag} {body}"
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out
