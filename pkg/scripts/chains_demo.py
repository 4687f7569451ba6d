"""Symbolic answers for the chain presets, then cross-checks against truncations.

    python scripts/chains_demo.py [--k 1 2 3 4 5 6] [--random 100 --seed 0]
"""
import argparse
from collections import Counter

import numpy as np

from absorb_lab import chains


def show(name, C):
    print(f"{name}: {C}")
    for key, val in (("A_s", chains.symbolic_a_s(C)), ("A_fin", chains.symbolic_a_fin(C)),
                     ("A", chains.symbolic_a_w(C)), ("P(A_fin)", chains.symbolic_primitives(C, "AFIN")),
                     ("P(A)", chains.symbolic_primitives(C, "AW"))):
        print(f"  {key:<9}{val.describe()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3, 4, 5, 6])
    ap.add_argument("--random", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for name, C in chains.PRESETS.items():
        show(name, C)
        statuses = Counter()
        for k in args.k:
            for it in chains.cross_check(C, k).items:
                statuses[(it.name, it.status)] += 1
        for (item, status), n in sorted(statuses.items()):
            print(f"    k in {args.k[0]}..{args.k[-1]}: {item:<26}{status} x{n}")

    rng = np.random.default_rng(args.seed)
    strict = agree = 0
    for _ in range(args.random):
        C = chains.random_chain_spec(rng)
        agree += chains.symbolic_a_s(C) == chains.symbolic_a_fin(C)
        strict += chains.symbolic_a_fin(C) < chains.symbolic_a_w(C)
    print(f"\nrandom specs: {args.random}, A_s == A_fin on {agree}, A_fin strictly inside A on {strict}")


if __name__ == "__main__":
    main()
