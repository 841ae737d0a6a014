"""Compare the polytope pipeline against the brute-force oracle on random instances.

    python scripts/random_sweep.py --count 200 --seed 0
"""

import argparse
import collections
import json
import time

from goldie.generate import GeneratorConfig, instances
from goldie.oracle import oracle_component_count
from goldie.pipeline import goldie_rank, spec_to_dict


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--radii", default="10,15")
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    radii = tuple(int(r) for r in args.radii.split(","))
    cfg = GeneratorConfig(max_n=args.max_n, seed=args.seed)
    t0 = time.perf_counter()
    pool, stats = instances(args.count, cfg)
    ranks = collections.Counter()
    bad = []
    for spec, alpha in pool:
        g = goldie_rank(spec, alpha)
        res = oracle_component_count(spec, alpha, radii)
        ranks[g] += 1
        if not res.stabilized or res.component_count != g:
            bad.append({"instance": spec_to_dict(spec, alpha), "rank": g, "oracle": res.to_dict()})
    elapsed = time.perf_counter() - t0

    print(f"instances: {len(pool)}  generator: {stats.to_dict()}")
    print("rank histogram: " + ", ".join(f"{k}:{v}" for k, v in sorted(ranks.items())))
    print(f"mismatches: {len(bad)}  time: {elapsed:.1f}s")
    for b in bad:
        print(json.dumps(b))


if __name__ == "__main__":
    main()
