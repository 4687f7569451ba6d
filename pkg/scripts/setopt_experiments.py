"""Seeded experiments on planar polyhedra under closed Minkowski addition.

Reports how often each support-value case occurs in the halfspace sums,
checks the translate group on a grid, reconstructs random polyhedra from
their halfspace sums, and prints the five-cone Cayley table.

    python scripts/setopt_experiments.py --count 500 --seed 1
"""
import argparse
from collections import Counter
from fractions import Fraction

import numpy as np

from absorb_lab import setopt
from absorb_lab.quasi import a_w, quasi_primitives


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    cases, bad = Counter(), 0
    for _ in range(args.count):
        C = setopt.random_cone(rng)
        A = setopt.random_poly(rng, C, extra_ray_prob=0.3)
        y = setopt.random_dual_normal(rng, C)
        r = setopt.halfspace_oplus(A, y, setopt.random_z(rng, y), C)
        cases["s = -inf" if r.s is setopt.NEG_INFINITY else "finite s"] += 1
        bad += not r.verdict
    print(f"halfspace sums: {dict(cases)}, mismatches {bad}")

    samples = [Fraction(k, 2) for k in range(-4, 5)]
    v = setopt.translate_group_check((2, 1), (Fraction(2, 5), Fraction(1, 5)), samples)
    print(f"translate group on {len(samples)} offsets: {v.checked} identities, ok={v.ok}")

    sizes, bad = Counter(), 0
    done = 0
    while done < args.count:
        C = setopt.random_cone(rng)
        A = setopt.random_poly(rng, C)
        if A.kind is not setopt.Kind.POLY:
            continue
        r = setopt.duality_reconstruct(A)
        sizes[len(r.normals)] += 1
        bad += not r.verdict
        done += 1
    print(f"duality: facet-normal counts {dict(sorted(sizes.items()))}, failures {bad}")

    S = setopt.five_cone_instance().materialize().semigroup
    w = max(map(len, S.labels)) + 1
    print("\nfive-cone table")
    print(" " * w + "".join(f"{lab:>{w}}" for lab in S.labels))
    for i, row in enumerate(S.table):
        print(f"{S.labels[i]:>{w}}" + "".join(f"{S.labels[j]:>{w}}" for j in row))
    print(f"A(W) = {S.labels_of(a_w(S))}, P(A(W)) = {S.labels_of(quasi_primitives(S))}")


if __name__ == "__main__":
    main()
