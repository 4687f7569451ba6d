"""Run the theorem suite over a corpus and tabulate statements by outcome.

The corpus is every table of order <= N plus a seeded batch of random
transformation semigroups.  A JSON summary can be written with --out.

    python scripts/corpus_check.py --max-n 4 --random 1000 --seed 2024
"""
import argparse
import json
import time
from collections import Counter

import numpy as np

from absorb_lab.cli import ordered_map
from absorb_lab.generators import enumerate_semigroups, random_corpus_seeds, random_transformation_semigroup
from absorb_lab.suite import verify_theorem_suite


def _random(seed):
    rng = np.random.default_rng(seed)
    degree, ngen = int(rng.integers(1, 5)), int(rng.integers(1, 4))
    return random_transformation_semigroup(degree, ngen, seed)


def _run(S):
    return [(r.name, r.applicable, r.checked, r.failures) for r in verify_theorem_suite(S).results]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--random", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", help="write a JSON summary here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    corpus = [S for n in range(1, args.max_n + 1) for S in enumerate_semigroups(n)]
    corpus += [_random(s) for s in random_corpus_seeds(args.seed, args.random)]
    rows = ordered_map(_run, corpus)

    checked, failed, applicable = Counter(), Counter(), Counter()
    for row in rows:
        for name, app, c, f in row:
            checked[name] += c
            failed[name] += f
            applicable[name] += app
    width = max(map(len, checked))
    print(f"{'statement':<{width}} {'applies':>7} {'checks':>9} {'fails':>5}")
    for name in checked:
        print(f"{name:<{width}} {applicable[name]:>7} {checked[name]:>9} {failed[name]:>5}")
    print(f"{len(corpus)} semigroups in {time.perf_counter() - t0:.1f} s, "
          f"{sum(failed.values())} failing checks")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"semigroups": len(corpus), "seed": args.seed,
                       "statements": {k: {"applies": applicable[k], "checked": checked[k], "failed": failed[k]}
                                      for k in checked}}, fh, indent=2)


if __name__ == "__main__":
    main()
