"""The lattice of two-sided ideals and ideal-relative minimality notions.

Every ideal X is the union of the principal ideals W(u), u ∈ X, and each W(u)
is the union of the J-classes below J(u).  So the two-sided ideals are exactly
the downsets of the J-class poset (ordered by W(u) ⊆ W(v)), expanded to
element sets.  Enumerating downsets costs 2^(#J-classes) in the worst case
instead of 2^n for a subset scan.

"Properly contains" in A-minimality is read strictly: D is A-minimal when
D ⊄ A and every ideal E ⊊ D satisfies E ⊆ A.
"""
from __future__ import annotations

from typing import Iterator

from .core import ElemSet, FiniteSemigroup
from .errors import ANotProper, BadParameter, EmptyB, TooManyJClasses
from .green import green_classes, require_ideal

MAX_J_CLASSES = 24


def _downsets(n_classes: int, below: list[int], class_masks: list[int], order: list[int]) -> Iterator[int]:
    """Yield element masks of every downset of a poset.

    ``below[c]`` is the bitmask of classes strictly below c; ``order`` is a
    linear extension (smaller classes first).
    """
    def rec(pos: int, chosen: int, elems: int):
        if pos == len(order):
            yield elems
            return
        c = order[pos]
        yield from rec(pos + 1, chosen, elems)
        if below[c] & ~chosen == 0:
            yield from rec(pos + 1, chosen | 1 << c, elems | class_masks[c])

    yield from rec(0, 0, 0)


def _class_poset(ids: tuple[int, ...], principal: tuple[ElemSet, ...]):
    reps: dict[int, int] = {}
    class_masks: dict[int, int] = {}
    for u, c in enumerate(ids):
        reps.setdefault(c, principal[u].mask)
        class_masks[c] = class_masks.get(c, 0) | 1 << u
    k = len(reps)
    below = [0] * k
    for a in range(k):
        for b in range(k):
            if a != b and reps[a] & ~reps[b] == 0:
                below[b] |= 1 << a
    order = sorted(range(k), key=lambda c: bin(reps[c]).count("1"))
    return k, below, [class_masks[c] for c in range(k)], order


def enumerate_ideals(S: FiniteSemigroup, max_classes: int = MAX_J_CLASSES) -> Iterator[ElemSet]:
    """Every two-sided ideal of S exactly once, starting with ∅."""
    g = green_classes(S)
    k, below, masks, order = _class_poset(g.j_ids, g.two_sided)
    if k > max_classes:
        raise TooManyJClasses(f"{k} J-classes exceeds the limit of {max_classes}")
    for m in _downsets(k, below, masks, order):
        yield ElemSet(S.n, m)


def all_ideals(S: FiniteSemigroup) -> list[ElemSet]:
    """Cached list of ideals, sorted by size then members."""
    if "ideals" not in S._cache:
        S._cache["ideals"] = sorted(enumerate_ideals(S), key=lambda X: (len(X), X.to_list()))
    return S._cache["ideals"]


def enumerate_left_ideals(S: FiniteSemigroup, max_classes: int = MAX_J_CLASSES) -> Iterator[ElemSet]:
    """Left ideals as downsets of the L-class poset."""
    g = green_classes(S)
    k, below, masks, order = _class_poset(g.l_ids, g.left)
    if k > max_classes:
        raise TooManyJClasses(f"{k} L-classes exceeds the limit of {max_classes}")
    for m in _downsets(k, below, masks, order):
        yield ElemSet(S.n, m)


def enumerate_right_ideals(S: FiniteSemigroup, max_classes: int = MAX_J_CLASSES) -> Iterator[ElemSet]:
    g = green_classes(S)
    k, below, masks, order = _class_poset(g.r_ids, g.right)
    if k > max_classes:
        raise TooManyJClasses(f"{k} R-classes exceeds the limit of {max_classes}")
    for m in _downsets(k, below, masks, order):
        yield ElemSet(S.n, m)


def _check_method(method: str) -> None:
    if method not in ("fast", "brute"):
        raise BadParameter(f"method must be 'fast' or 'brute', got {method!r}")


def is_A_minimal(S: FiniteSemigroup, D: ElemSet, A: ElemSet, method: str = "fast") -> bool:
    """D ⊄ A and every ideal properly inside D is a subset of A."""
    _check_method(method)
    require_ideal(S, D, "D")
    require_ideal(S, A, "A")
    if D <= A:
        return False
    if method == "fast":
        W = green_classes(S).two_sided
        return all(W[u] == D for u in D - A)
    return all(E <= A for E in all_ideals(S) if E < D)


def is_A_simple(S: FiniteSemigroup, A: ElemSet, method: str = "fast") -> bool:
    """The only ideals are W and subsets of A (A must be a proper ideal)."""
    _check_method(method)
    require_ideal(S, A, "A")
    if A == S.universe:
        raise ANotProper("A must be a proper subset of W")
    full = S.universe
    if method == "fast":
        W = green_classes(S).two_sided
        return all(W[u] == full for u in full - A)
    return all(E == full or E <= A for E in all_ideals(S))


def is_bottleneck(S: FiniteSemigroup, A: ElemSet, method: str = "fast") -> bool:
    """Every ideal D satisfies D ⊆ A or A ⊆ D."""
    _check_method(method)
    require_ideal(S, A, "A")
    if method == "fast":
        W = green_classes(S).two_sided
        return all(A <= W[u] for u in A.complement())
    return all(D <= A or A <= D for D in all_ideals(S))


def is_minimal_meeting(S: FiniteSemigroup, D: ElemSet, B: ElemSet, method: str = "fast") -> bool:
    """D meets B and no ideal properly inside D meets B."""
    _check_method(method)
    require_ideal(S, D, "D")
    if not B:
        raise EmptyB("B must be non-empty")
    if D.isdisjoint(B):
        return False
    if method == "fast":
        W = green_classes(S).two_sided
        return all(W[u] == D for u in D & B)
    return all(E.isdisjoint(B) for E in all_ideals(S) if E < D)


def bottleneck_ideals(S: FiniteSemigroup) -> list[ElemSet]:
    return [A for A in all_ideals(S) if is_bottleneck(S, A)]


def minimal_ideals_over(S: FiniteSemigroup, A: ElemSet) -> list[ElemSet]:
    """All A-minimal ideals."""
    return [D for D in all_ideals(S) if is_A_minimal(S, D, A)]
