"""Compare every closed form with its dimension-count oracle on random specs.

    python scripts/oracle_sweep.py --count 500 --seed 1 --max-q 9 --max-genus 30
"""

import argparse
import random
import time

from wsemigroup import gamma, gamma_oracle, gap_set
from wsemigroup.riemann_roch import gap_set_oracle
from wsemigroup.sampling import SweepConfig, random_spec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-q", type=int, default=9)
    ap.add_argument("--max-genus", type=int, default=30)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cfg = SweepConfig(max_q=args.max_q, max_genus=args.max_genus)
    stats = {"gap": 0, "gamma": 0, "bad": 0}
    t0 = time.perf_counter()
    for _ in range(args.count):
        spec = random_spec(rng, cfg)
        ones = spec.degree_one_places()
        for l in ones:
            stats["gap"] += 1
            if list(gap_set(spec, l)) != gap_set_oracle(spec, l):
                stats["bad"] += 1
                print("gap mismatch:", spec, l)
        for t in (2, 3):
            if len(ones) >= t:
                places = ones[:t]
                stats["gamma"] += 1
                if gamma(spec, places).values() != gamma_oracle(spec, places):
                    stats["bad"] += 1
                    print("Gamma mismatch:", spec, places)
    print(f"{stats['gap']} gap sets, {stats['gamma']} Gamma sets, "
          f"{stats['bad']} mismatches, {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if stats["bad"] else 0)


if __name__ == "__main__":
    main()
