"""Random small instances for property tests and sweeps."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import ArrangementSpec, validate_spec
from .closure import assumption3_defect, region_closure
from .exact import rank


@dataclass
class GeneratorConfig:
    max_n: int = 5
    max_d: int = 2
    entry_bound: int = 2
    max_denominator: int = 3
    numerator_bound: int = 4
    integral_bias: float = 0.8  # chance that a coordinate is an integer
    sign_bias: float = 0.5  # chance that a row has entries of one sign only
    max_polytope_points: Optional[int] = 400
    seed: int = 0


@dataclass
class GeneratorStats:
    accepted: int = 0
    rejected: Counter = field(default_factory=Counter)

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "rejected": dict(self.rejected)}


def _random_alpha(rng: random.Random, cfg: GeneratorConfig, n: int) -> tuple:
    out = []
    for _ in range(n):
        if rng.random() < cfg.integral_bias:
            out.append(Fraction(rng.randint(-cfg.numerator_bound, cfg.numerator_bound)))
        else:
            q = rng.randint(2, cfg.max_denominator)
            out.append(Fraction(rng.randint(-cfg.numerator_bound * q, cfg.numerator_bound * q), q))
    return tuple(out)


def _random_row(rng: random.Random, cfg: GeneratorConfig, n: int) -> list:
    # one-signed rows make bounded coordinates (nonempty J) common
    if rng.random() < cfg.sign_bias:
        s = rng.choice((1, -1))
        return [s * rng.randint(0, cfg.entry_bound) for _ in range(n)]
    return [rng.randint(-cfg.entry_bound, cfg.entry_bound) for _ in range(n)]


def draw(rng: random.Random, cfg: GeneratorConfig, stats: GeneratorStats):
    """One accepted ``(spec, alpha)`` pair; rejected draws are counted in ``stats``."""
    while True:
        n = rng.randint(1, cfg.max_n)
        d = rng.randint(1, min(cfg.max_d, n))
        r = n if rng.random() < 0.6 else rng.randint(0, n)
        G = [_random_row(rng, cfg, n) for _ in range(d)]
        if rank(G) < d:
            stats.rejected["rank-deficient"] += 1
            continue
        alpha = _random_alpha(rng, cfg, n)
        spec, alpha = validate_spec({"n": n, "r": r, "g_basis": G, "alpha": alpha})
        rc = region_closure(spec, alpha)
        if assumption3_defect(spec, rc.signs) is not None:
            stats.rejected["direct-sum"] += 1
            continue
        if cfg.max_polytope_points is not None and _too_big(spec, alpha, rc, cfg.max_polytope_points):
            stats.rejected["too-large"] += 1
            continue
        stats.accepted += 1
        return spec, alpha


def _too_big(spec: ArrangementSpec, alpha, rc, limit: int) -> bool:
    # crude bound from the witness box; keeps brute force cheap
    from .polytope import build_polytope

    P = build_polytope(spec, alpha, rc.signs, rc.certificate)
    box = P.bounding_box() or ()
    size = 1
    for lo, hi in box:
        size *= max(int(hi - lo) + 1, 1)
    return size > limit


def instances(count: int, cfg: Optional[GeneratorConfig] = None):
    """``count`` accepted instances plus the rejection statistics."""
    cfg = cfg or GeneratorConfig()
    rng = random.Random(cfg.seed)
    stats = GeneratorStats()
    out = [draw(rng, cfg, stats) for _ in range(count)]
    return out, stats
