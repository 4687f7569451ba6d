"""Count associative tables of order 1..4 and time each backtracking cell order.

    python scripts/census.py [--max-n 4]
"""
import argparse
import time

from absorb_lab.generators import brute_force_count, enumerate_tables

ORDERS = ("row", "column", "diagonal")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4, choices=range(1, 5))
    args = ap.parse_args()

    print(f"{'n':>2} {'order':>9} {'tables':>7} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        found = {}
        for order in ORDERS:
            t0 = time.perf_counter()
            found[order] = set(enumerate_tables(n, order))
            print(f"{n:>2} {order:>9} {len(found[order]):>7} {time.perf_counter() - t0:>8.2f}")
        agree = len({frozenset(s) for s in found.values()}) == 1
        line = f"   orders agree: {agree}"
        if n <= 3:
            t0 = time.perf_counter()
            line += f"; brute force over all {n ** (n * n)} tables: {brute_force_count(n)}" \
                    f" ({time.perf_counter() - t0:.2f} s)"
        print(line)


if __name__ == "__main__":
    main()
