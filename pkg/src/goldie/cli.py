"""Command-line entry point: ``goldie <command> ...``.

Exit codes: 0 ok, 1 failed weyl-check, 2 bad input, 3 assumption violated,
4 oracle inconclusive.
"""

from __future__ import annotations

import argparse
import itertools
import sys

from .arrangement import SpecError
from .closure import AssumptionError, closure_inclusion, region_closure
from .exact import DimensionError
from .oracle import oracle_component_count
from .pipeline import analyze, dumps, family_report, goldie_family, goldie_rank, load_instance
from .polytope import UnboundedPolytopeError
from .weyl import WeylAlgebra, WeylError, commutator, format_element

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ASSUMPTION, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


def _emit(args, payload: dict, text: str) -> None:
    print(dumps(payload) if args.json else text)


def cmd_analyze(args) -> int:
    spec, alpha = load_instance(args.file)
    rep = analyze(spec, alpha, with_dset=args.dset)
    if args.json:
        print(dumps(rep))
        return EXIT_OK
    part = rep["partition"]
    lines = [
        f"T = {rep['T']}",
        f"J = {part['J']}  I_T = {part['I_T']}",
        f"J+ = {rep['signs']['J_plus']}  J- = {rep['signs']['J_minus']}  I = {rep['signs']['I']}",
        f"witness e = ({', '.join(part['witness_e'])})",
        "direct sum check: ok",
        f"box = {rep['polytope']['box']}",
        f"components = {rep['components']}",
        f"goldie rank = {rep['goldie_rank']}",
    ]
    if args.dset:
        lines += ["D-set:"] + ["  (" + ", ".join(d) + ")" for d in rep["dset"]]
    print("\n".join(lines))
    return EXIT_OK


def cmd_rank(args) -> int:
    spec, alpha = load_instance(args.file)
    r = goldie_rank(spec, alpha)
    _emit(args, {"goldie_rank": r}, str(r))
    return EXIT_OK


def cmd_family(args) -> int:
    spec, alpha = load_instance(args.file)
    fam, rows = goldie_family(spec, alpha, args.xmax, verify=args.verify)
    rep = family_report(fam, rows)
    bad = [row.x for row in rows if row.agrees is False]
    if args.json:
        print(dumps(rep))
    else:
        print(f"status: {fam.status}")
        if fam.rescaling is not None:
            r = fam.rescaling
            print(f"a0 = {r.a0}  s(x) = {r.a_N}x - {r.a_Z}" if r.a_Z >= 0 else f"a0 = {r.a0}  s(x) = {r.a_N}x + {-r.a_Z}")
        if fam.ehrhart is not None:
            print(f"EHP_Q(t) = {fam.ehrhart.pretty('t')}")
        if fam.rank_quasi is not None:
            print(f"rank(x) = {fam.rank_quasi.pretty('x')}")
        if fam.note:
            print(f"note: {fam.note}")
        print(f"{'x':>4} {'adm':>4} {'predicted':>10} {'direct':>8}")
        for row in rows:
            pred = "-" if row.predicted is None else str(row.predicted)
            direct = "-" if row.direct is None else str(row.direct)
            adm = "yes" if row.admissible else "no"
            print(f"{row.x:>4} {adm:>4} {pred:>10} {direct:>8}")
    if bad:
        print(f"mismatch at x = {bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec, alpha = load_instance(args.file)
    try:
        radii = tuple(int(r) for r in args.radius.split(","))
    except ValueError:
        raise SpecError(f"bad radius list {args.radius!r}")
    res = oracle_component_count(spec, alpha, radii)
    text = (
        f"components = {res.component_count} (unbounded span dim {res.span_dim})"
        if res.stabilized
        else "inconclusive: " + ", ".join(f"R={R}: {c}" for R, _, c in res.history)
    )
    _emit(args, res.to_dict(), text)
    return EXIT_OK if res.stabilized else EXIT_INCONCLUSIVE


def weyl_check(n: int, r: int, box: int) -> list:
    """Torus action on every ``a_alpha`` with entries in ``[-box, box]``; returns failures."""
    A = WeylAlgebra(n, r)
    pis = [A.pi(i) for i in range(n)]
    failures = []
    for alpha in itertools.product(range(-box, box + 1), repeat=n):
        a = A.monomial(A.a_alpha(alpha))
        for i, p in enumerate(pis):
            if commutator(p, a) != alpha[i] * a:
                failures.append((alpha, i))
    return failures


def cmd_weyl(args) -> int:
    if args.expr:
        A = WeylAlgebra(args.n, args.r)
        el = A.parse(args.expr)
        ok = el.renormalize() == el
        _emit(args, {"normal_form": format_element(el), "idempotent": ok}, format_element(el))
        return EXIT_OK if ok else EXIT_FAIL
    fails = weyl_check(args.n, args.r, args.box)
    total = (2 * args.box + 1) ** args.n
    payload = {
        "n": args.n,
        "r": args.r,
        "box": args.box,
        "checked": total,
        "failures": [{"alpha": list(a), "i": i + 1} for a, i in fails],
    }
    text = f"[pi_i, a_alpha] = alpha_i a_alpha on {total} weights: " + ("ok" if not fails else f"{len(fails)} failures")
    _emit(args, payload, text)
    return EXIT_OK if not fails else EXIT_FAIL


def cmd_include(args) -> int:
    spec_a, alpha = load_instance(args.file_a)
    spec_b, beta = load_instance(args.file_b)
    res = closure_inclusion(region_closure(spec_a, alpha), region_closure(spec_b, beta))
    _emit(args, {"included": res}, "true" if res else "false")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goldie", description="Goldie ranks via region closures and lattice polytopes.")
    p.add_argument("--json", action="store_true", help="structured output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="full closure/polytope report")
    s.add_argument("file")
    s.add_argument("--dset", action="store_true", help="dump component representatives")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("rank", help="Goldie rank of the instance")
    s.add_argument("file")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("family", help="quasi-polynomial along x * alpha")
    s.add_argument("file")
    s.add_argument("--xmax", type=int, default=10)
    s.add_argument("--verify", action="store_true", help="recount every dilated instance")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("oracle", help="brute-force component count")
    s.add_argument("file")
    s.add_argument("--radius", default="10,15")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("weyl-check", help="normal-ordering self test")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--box", type=int, default=2)
    s.add_argument("--expr", default=None, help="normal-order an expression such as 'd1 x1^2'")
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("include", help="is closure(A) contained in closure(B)?")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_include)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    # allow --json after the subcommand too
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.json = want_json
    try:
        return args.func(args)
    except AssumptionError as exc:
        print(f"assumption violated: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    except (SpecError, DimensionError, WeylError, UnboundedPolytopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
