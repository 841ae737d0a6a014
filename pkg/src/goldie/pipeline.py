"""End-to-end analysis: closure, polytope, count, family table.

Reports are plain dicts ready for JSON.  Rationals are written as ``"p/q"``
strings (integers without a slash) and indices are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .arrangement import ArrangementSpec, SpecError, constraint_system, validate_spec
from .closure import AssumptionError, RegionClosure, component_fibers, region_closure
from .ehrhart import GoldieFamily, build_family, is_admissible_dilation
from .exact import vec
from .polytope import RationalPolytope, build_polytope, dset_representatives


def q(x) -> str:
    return str(Fraction(x))


def qv(v) -> list:
    return [q(a) for a in v]


def idx(indices) -> list:
    return [i + 1 for i in indices]


def load_instance(path) -> tuple:
    """Read an instance file; returns ``(spec, alpha)``."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(raw, dict):
        raise SpecError(f"{path}: expected a JSON object")
    spec, alpha = validate_spec(raw)
    if alpha is None:
        raise SpecError(f"{path}: instance needs an alpha")
    return spec, alpha


def spec_to_dict(spec: ArrangementSpec, alpha=None) -> dict:
    out = {"n": spec.n, "r": spec.r, "g_basis": [qv(row) for row in spec.G], "chi": qv(spec.chi)}
    if alpha is not None:
        out["alpha"] = qv(alpha)
    return out


@dataclass
class Analysis:
    spec: ArrangementSpec
    alpha: tuple
    closure: RegionClosure
    polytope: RationalPolytope
    points: list
    dset: list = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.points)


def run_analysis(spec: ArrangementSpec, alpha: Sequence) -> Analysis:
    """Full pipeline; raises AssumptionError when the direct-sum check fails."""
    alpha = vec(alpha)
    rc = region_closure(spec, alpha)
    P = build_polytope(spec, alpha, rc.signs, rc.certificate)
    points = P.lattice_points()
    dset = dset_representatives(spec, alpha, rc.signs, P)
    return Analysis(spec, alpha, rc, P, points, dset)


def goldie_rank(spec: ArrangementSpec, alpha: Sequence) -> int:
    return run_analysis(spec, alpha).rank


def analysis_report(an: Analysis, with_dset: bool = False) -> dict:
    rc = an.closure
    cert, sc = rc.certificate, rc.signs
    fibers = component_fibers(rc, an.dset)
    box = an.polytope.bounding_box()
    rep = {
        "instance": spec_to_dict(an.spec, an.alpha),
        "T": idx(cert.T),
        "partition": {
            "J": idx(cert.J),
            "I_T": idx(cert.I_T),
            "witness_e": qv(cert.witness_e),
            "witness_z": {str(t + 1): q(z) for t, z in sorted(cert.witness_z.items())},
        },
        "signs": {"J_plus": idx(sc.J_plus), "J_minus": idx(sc.J_minus), "I": idx(sc.I)},
        "assumption3": True,
        "polytope": {
            "coordinates": idx(sc.J),
            "box": [[q(lo), q(hi)] for lo, hi in box] if box else [],
            "vertices": [qv(v) for v in an.polytope.vertices()],
        },
        "components": an.rank,
        "goldie_rank": an.rank,
        "fibers": {
            "h_basis": [qv(h) for h in fibers.h_basis],
            "characters": [qv(c) for c in fibers.characters],
        },
    }
    if with_dset:
        rep["dset"] = [qv(d) for d in an.dset]
    return rep


def analyze(spec: ArrangementSpec, alpha: Sequence, with_dset: bool = False) -> dict:
    return analysis_report(run_analysis(spec, alpha), with_dset)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilyRow:
    x: int
    admissible: bool
    predicted: Optional[int] = None
    direct: Optional[int] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.predicted is None or self.direct is None:
            return None
        return self.predicted == self.direct


def dilated(spec: ArrangementSpec, alpha: Sequence, x) -> tuple:
    """``(x chi, x alpha)`` as a fresh, re-validated instance."""
    x = Fraction(x)
    raw = {
        "n": spec.n,
        "r": spec.r,
        "g_basis": [qv(row) for row in spec.G],
        "chi": [q(x * c) for c in spec.chi],
        "alpha": [q(x * a) for a in alpha],
    }
    return validate_spec(raw)


def goldie_family(spec: ArrangementSpec, alpha: Sequence, xmax: int, verify: bool = False) -> tuple:
    """Closed form (if any) and an evaluation table for ``x = 1..xmax``.

    Without a closed form every admissible row is filled by direct counting.
    """
    an = run_analysis(spec, alpha)
    fam = build_family(spec, an.alpha, an.closure.signs, an.polytope)
    rows = []
    for x in range(1, xmax + 1):
        if not is_admissible_dilation(spec, an.alpha, x):
            rows.append(FamilyRow(x, False))
            continue
        pred = None
        if fam.has_closed_form:
            val = fam.rank_quasi(x)
            if val.denominator != 1:
                raise ArithmeticError(f"quasi-polynomial is non-integral at x={x}")
            pred = int(val)
        direct = None
        if verify or pred is None:
            direct = goldie_rank(*dilated(spec, an.alpha, x))
        rows.append(FamilyRow(x, True, pred, direct))
    return fam, rows


def family_report(fam: GoldieFamily, rows: list) -> dict:
    out = {
        "alpha": qv(fam.alpha),
        "J_plus": idx(fam.signs.J_plus),
        "J_minus": idx(fam.signs.J_minus),
        "apex": qv(fam.apex),
        "status": fam.status,
        "admissible_denominators": list(fam.denominators),
    }
    if fam.rescaling is not None:
        r = fam.rescaling
        out["a0"] = q(r.a0)
        out["a_N"], out["a_Z"], out["scale"] = r.a_N, r.a_Z, r.scale
        out["reference_vertices"] = [qv(v) for v in fam.reference.vertices()]
    if fam.ehrhart is not None:
        out["ehrhart_Q"] = fam.ehrhart.to_dict()
    if fam.rank_quasi is not None:
        out["rank_quasi"] = fam.rank_quasi.to_dict()
    if fam.note:
        out["note"] = fam.note
    out["table"] = [
        {"x": row.x, "admissible": row.admissible, "predicted": row.predicted, "direct": row.direct}
        for row in rows
    ]
    return out


def check_instance(spec: ArrangementSpec, alpha: Sequence) -> None:
    """Raise SpecError if alpha is off the fiber."""
    constraint_system(spec, alpha)


__all__ = [
    "Analysis",
    "AssumptionError",
    "FamilyRow",
    "analysis_report",
    "analyze",
    "check_instance",
    "dilated",
    "dumps",
    "family_report",
    "goldie_family",
    "goldie_rank",
    "load_instance",
    "run_analysis",
    "spec_to_dict",
]
