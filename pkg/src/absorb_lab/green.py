"""Principal ideals, Green's L/R/H/J classes, ideal predicates and group tests."""
from __future__ import annotations

from dataclasses import dataclass

from .core import ElemSet, FiniteSemigroup, idempotents
from .errors import IndexOutOfRange, NotAnIdeal, PreconditionViolated


def _check_index(S: FiniteSemigroup, u: int) -> None:
    if not 0 <= u < S.n:
        raise IndexOutOfRange(f"element {u} not in [0, {S.n})")


def _left_mask(S: FiniteSemigroup, u: int) -> int:
    return S.col_masks[u] | 1 << u


def _right_mask(S: FiniteSemigroup, u: int) -> int:
    return S.row_masks[u] | 1 << u


def _or_over(masks: tuple[int, ...], m: int) -> int:
    out, i = 0, 0
    while m:
        if m & 1:
            out |= masks[i]
        m >>= 1
        i += 1
    return out


def principal_left(S: FiniteSemigroup, u: int) -> ElemSet:
    """W_L(u) = (W + {u}) ∪ {u}."""
    _check_index(S, u)
    return ElemSet(S.n, _left_mask(S, u))


def principal_right(S: FiniteSemigroup, u: int) -> ElemSet:
    """W_R(u) = ({u} + W) ∪ {u}."""
    _check_index(S, u)
    return ElemSet(S.n, _right_mask(S, u))


def principal_two_sided(S: FiniteSemigroup, u: int) -> ElemSet:
    """W(u) = (W_L(u) + W) ∪ W_L(u), cross-checked against (W + W_R(u)) ∪ W_R(u)."""
    _check_index(S, u)
    wl = _left_mask(S, u)
    via_left = _or_over(S.row_masks, wl) | wl
    wr = _right_mask(S, u)
    via_right = _or_over(S.col_masks, wr) | wr
    assert via_left == via_right, f"two formulas for W({u}) disagree"
    return ElemSet(S.n, via_left)


def _class_ids(keys: list) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(k, len(seen)) for k in keys)


@dataclass(frozen=True)
class GreenSummary:
    """Principal ideals of every element and the partitions they induce.

    Class ids are assigned in order of first appearance when scanning
    elements ``0..n-1``.  ``j_order`` holds pairs ``(a, b)`` of J-class ids
    with ``W(u) ⊆ W(v)`` for ``u`` in class ``a``, ``v`` in class ``b``
    (reflexive pairs included).
    """

    semigroup: FiniteSemigroup
    left: tuple[ElemSet, ...]
    right: tuple[ElemSet, ...]
    two_sided: tuple[ElemSet, ...]
    l_ids: tuple[int, ...]
    r_ids: tuple[int, ...]
    h_ids: tuple[int, ...]
    j_ids: tuple[int, ...]
    j_order: frozenset[tuple[int, int]]

    def _cls(self, ids: tuple[int, ...], u: int) -> ElemSet:
        c = ids[u]
        return ElemSet.of(len(ids), (v for v, k in enumerate(ids) if k == c))

    def L(self, u: int) -> ElemSet:
        return self._cls(self.l_ids, u)

    def R(self, u: int) -> ElemSet:
        return self._cls(self.r_ids, u)

    def H(self, u: int) -> ElemSet:
        return self._cls(self.h_ids, u)

    def J(self, u: int) -> ElemSet:
        return self._cls(self.j_ids, u)

    @staticmethod
    def _partition(ids: tuple[int, ...]) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, k in enumerate(ids):
            out.setdefault(k, []).append(v)
        return [out[k] for k in sorted(out)]

    def classes(self, kind: str) -> list[list[int]]:
        ids = {"L": self.l_ids, "R": self.r_ids, "H": self.h_ids, "J": self.j_ids}[kind]
        return self._partition(ids)

    def to_json(self) -> dict:
        return {
            "W_L": [s.to_list() for s in self.left],
            "W_R": [s.to_list() for s in self.right],
            "W": [s.to_list() for s in self.two_sided],
            "L": self.classes("L"),
            "R": self.classes("R"),
            "H": self.classes("H"),
            "J": self.classes("J"),
            "J_order": sorted([a, b] for a, b in self.j_order if a != b),
        }


def green_classes(S: FiniteSemigroup) -> GreenSummary:
    """Group elements by equal principal ideals (cached per semigroup)."""
    cached = S._cache.get("green")
    if cached is not None:
        return cached
    n = S.n
    left = [_left_mask(S, u) for u in range(n)]
    right = [_right_mask(S, u) for u in range(n)]
    two = [principal_two_sided(S, u).mask for u in range(n)]
    j_ids = _class_ids(two)
    reps: dict[int, int] = {}
    for u, c in enumerate(j_ids):
        reps.setdefault(c, two[u])
    j_order = frozenset((a, b) for a, ma in reps.items() for b, mb in reps.items() if ma & ~mb == 0)
    summary = GreenSummary(
        semigroup=S,
        left=tuple(ElemSet(n, m) for m in left),
        right=tuple(ElemSet(n, m) for m in right),
        two_sided=tuple(ElemSet(n, m) for m in two),
        l_ids=_class_ids(left),
        r_ids=_class_ids(right),
        h_ids=_class_ids(list(zip(left, right))),
        j_ids=j_ids,
        j_order=j_order,
    )
    S._cache["green"] = summary
    return summary


def is_left_ideal(S: FiniteSemigroup, X: ElemSet) -> bool:
    """W + X ⊆ X (the empty set qualifies)."""
    return S.left_translate(X) <= X


def is_right_ideal(S: FiniteSemigroup, X: ElemSet) -> bool:
    return S.right_translate(X) <= X


def is_ideal(S: FiniteSemigroup, X: ElemSet) -> bool:
    return is_left_ideal(S, X) and is_right_ideal(S, X)


def require_ideal(S: FiniteSemigroup, X: ElemSet, which: str) -> None:
    if X.n != S.n:
        raise ValueError(f"{which} is bound to a universe of size {X.n}, not {S.n}")
    if not is_ideal(S, X):
        raise NotAnIdeal(which)


def group_identity(S: FiniteSemigroup, X: ElemSet) -> int | None:
    """The two-sided identity of ``(X, +)`` if X is a group, else None."""
    if not X:
        return None
    xs = X.to_list()
    t = S.table
    if any(t[a][b] not in X for a in xs for b in xs):
        return None
    ident = next((e for e in xs if all(t[e][x] == x == t[x][e] for x in xs)), None)
    if ident is None:
        return None
    for x in xs:
        if not any(t[x][y] == ident == t[y][x] for y in xs):
            return None
    return ident


def is_group(S: FiniteSemigroup, X: ElemSet) -> bool:
    """Closed under +, with an identity for X and inverses in X.  Empty X is not a group."""
    return group_identity(S, X) is not None


@dataclass(frozen=True)
class HVerdict:
    h_eq_we_minus_a: bool
    group: bool


def h_theorem_verdict(S: FiniteSemigroup, e: int, A: ElemSet) -> HVerdict:
    """Evaluate both sides of "H(e) = W(e)\\A iff (W(e)\\A, +) is a group".

    The two booleans are computed independently; callers compare them.
    """
    _check_index(S, e)
    if e not in idempotents(S) or e in A:
        raise PreconditionViolated(f"{e} must be an idempotent outside A")
    require_ideal(S, A, "A")
    g = green_classes(S)
    rest = g.two_sided[e] - A
    return HVerdict(h_eq_we_minus_a=g.H(e) == rest, group=is_group(S, rest))
