"""Naive reference implementations with plain Python sets.

Deliberately written straight from the definitions, without bitmasks, caches
or the downset trick, so the package can be checked against them.
"""
from itertools import combinations, product


def first_assoc_violation(t):
    n = len(t)
    for i, j, k in product(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            return (i, j, k)
    return None


def is_assoc(t):
    return first_assoc_violation(t) is None


def count_assoc_tables(n):
    return sum(1 for flat in product(range(n), repeat=n * n)
               if is_assoc([flat[r * n:(r + 1) * n] for r in range(n)]))


def idempotents(t):
    return {e for e in range(len(t)) if t[e][e] == e}


def w_left(t, u):
    return {t[w][u] for w in range(len(t))} | {u}


def w_right(t, u):
    return {t[u][w] for w in range(len(t))} | {u}


def w_two(t, u):
    n = range(len(t))
    return {t[t[a][u]][b] for a in n for b in n} | {t[a][u] for a in n} | {t[u][b] for b in n} | {u}


def classes(t, fn):
    return {u: frozenset(v for v in range(len(t)) if fn(t, v) == fn(t, u)) for u in range(len(t))}


def h_class(t, u):
    L = classes(t, w_left)[u]
    R = classes(t, w_right)[u]
    return L & R


def is_ideal(t, X):
    X = set(X)
    n = range(len(t))
    return all(t[w][x] in X and t[x][w] in X for w in n for x in X)


def all_ideals(t):
    n = len(t)
    return [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r) if is_ideal(t, c)]


def is_group(t, X):
    X = set(X)
    if not X or any(t[a][b] not in X for a in X for b in X):
        return False
    ids = [e for e in X if all(t[e][x] == x == t[x][e] for x in X)]
    return bool(ids) and all(any(t[x][y] == ids[0] == t[y][x] for y in X) for x in X)


def rees_leq(t, e, f):
    return t[e][f] == e and t[f][e] == e


def e_below(t, e):
    return {f for f in idempotents(t) if rees_leq(t, f, e)}


def quasi_absorbing(t):
    out = set()
    for a in idempotents(t):
        B = e_below(t, a)
        total = all(rees_leq(t, x, y) or rees_leq(t, y, x) for x in B for y in B)
        if total and all(t[w][a] == a == t[a][w] for w in range(len(t)) if w not in B):
            out.add(a)
    return out


def stages(t):
    rest = set(range(len(t)))
    out = []
    while True:
        st = {a for a in rest if all(t[w][a] == a == t[a][w] for w in rest)}
        if not st:
            return out
        out.append(st)
        rest -= st


def primitives(t, A):
    A = set(A)
    return {e for e in idempotents(t) - A
            if all(f == e or f in A for f in idempotents(t) if rees_leq(t, f, e))}


def is_A_minimal(t, D, A):
    D, A = frozenset(D), frozenset(A)
    return not D <= A and all(E <= A for E in all_ideals(t) if E < D)


def is_bottleneck(t, A):
    A = frozenset(A)
    return all(D <= A or A <= D for D in all_ideals(t))


def raw_support(points, rays, y):
    """inf of y·x over conv(points) + cone(rays), from uncanonicalized generators."""
    from fractions import Fraction
    dot = lambda a, b: sum(Fraction(p) * Fraction(q) for p, q in zip(a, b))  # noqa: E731
    if any(dot(y, r) < 0 for r in rays):
        return None
    return min(dot(y, p) for p in points)
