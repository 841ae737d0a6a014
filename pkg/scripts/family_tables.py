"""Print closed forms and verified count tables for dilation families.

    python scripts/family_tables.py fixtures/instA.json fixtures/instC.json --xmax 12
"""

import argparse

from goldie.pipeline import goldie_family, load_instance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("files", nargs="+")
    ap.add_argument("--xmax", type=int, default=12)
    args = ap.parse_args()

    for path in args.files:
        spec, alpha = load_instance(path)
        fam, rows = goldie_family(spec, alpha, args.xmax, verify=True)
        print(f"== {path}  [{fam.status}]")
        if fam.rank_quasi is not None:
            print(f"   rank(x) = {fam.rank_quasi.pretty('x')}")
        if fam.rescaling is not None:
            r = fam.rescaling
            print(f"   a0 = {r.a0}, s(x) = {r.a_N}x - ({r.a_Z}), EHP_Q(t) = {fam.ehrhart.pretty('t')}")
        xs = " ".join(f"{row.x:>4}" for row in rows)
        pred = " ".join(f"{'-' if row.predicted is None else row.predicted:>4}" for row in rows)
        cnt = " ".join(f"{'-' if row.direct is None else row.direct:>4}" for row in rows)
        print(f"   x      {xs}\n   EHP    {pred}\n   count  {cnt}")
        mism = [row.x for row in rows if row.agrees is False]
        if mism:
            print(f"   MISMATCH at {mism}")


if __name__ == "__main__":
    main()
