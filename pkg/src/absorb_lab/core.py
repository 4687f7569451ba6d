"""Finite semigroups given by Cayley tables.

Elements are the dense indices ``0..n-1``; ``table[i][j]`` is ``i + j``.
Labels are for display only.  Subsets of a semigroup are :class:`ElemSet`
values backed by an integer bitmask, so unions, intersections and the
Minkowski-style sums used throughout reduce to bit operations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from numbers import Integral
from typing import Iterable, Iterator, Sequence

from .errors import (
    AssociativityViolation,
    BadParameter,
    IndexOutOfRange,
    NotClosedUnderOperation,
    NotSquare,
    OutOfRangeEntry,
    ParseError,
)


@dataclass(frozen=True)
class ElemSet:
    """A subset of ``{0, ..., n-1}`` bound to a universe of size ``n``."""

    n: int
    mask: int = 0

    @classmethod
    def of(cls, n: int, items: Iterable[int] = ()) -> "ElemSet":
        mask = 0
        for i in items:
            if not 0 <= i < n:
                raise IndexOutOfRange(f"element {i} not in [0, {n})")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "ElemSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "ElemSet") -> None:
        if not isinstance(other, ElemSet):
            raise TypeError(f"expected ElemSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"ElemSet universes differ ({self.n} vs {other.n})")

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __or__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.n, self.mask | other.mask)

    def __and__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "ElemSet":
        return ElemSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __le__(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElemSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "ElemSet") -> bool:
        return other <= self

    def __gt__(self, other: "ElemSet") -> bool:
        return other < self

    def isdisjoint(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"ElemSet({self.to_list()})"


@dataclass(frozen=True)
class FiniteSemigroup:
    """An associative Cayley table.

    Build instances with :func:`validate_table`; the constructor itself does
    not re-check associativity so that trusted generators stay cheap.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.table)

    def add(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label: str) -> int:
        """Index of the element carrying ``label``."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    @property
    def universe(self) -> ElemSet:
        return ElemSet.full(self.n)

    @property
    def empty(self) -> ElemSet:
        return ElemSet(self.n, 0)

    def elems(self, items: Iterable[int | str] = ()) -> ElemSet:
        """ElemSet from indices or labels."""
        return ElemSet.of(self.n, (i if isinstance(i, int) else self.index(i) for i in items))

    def labels_of(self, X: ElemSet) -> list[str]:
        return [self.label(i) for i in X]

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        # row_masks[a] = {a} + W
        out = []
        for row in self.table:
            m = 0
            for v in row:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        # col_masks[b] = W + {b}
        out = [0] * self.n
        for row in self.table:
            for j, v in enumerate(row):
                out[j] |= 1 << v
        return tuple(out)

    def left_translate(self, X: ElemSet) -> ElemSet:
        """``W + X``."""
        m = 0
        cols = self.col_masks
        for x in X:
            m |= cols[x]
        return ElemSet(self.n, m)

    def right_translate(self, X: ElemSet) -> ElemSet:
        """``X + W``."""
        m = 0
        rows = self.row_masks
        for x in X:
            m |= rows[x]
        return ElemSet(self.n, m)

    def sumset(self, X: ElemSet, Y: ElemSet) -> ElemSet:
        """Minkowski sum ``X + Y``; empty if either side is empty."""
        m = 0
        ys = list(Y)
        for x in X:
            row = self.table[x]
            for y in ys:
                m |= 1 << row[y]
        return ElemSet(self.n, m)


def validate_table(raw: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Check a raw grid and return it as an immutable semigroup.

    Raises :class:`OutOfRangeEntry` for the first bad cell in row-major
    order and :class:`AssociativityViolation` for the lexicographically first
    triple ``(i, j, k)`` with ``(i+j)+k != i+(j+k)``.
    """
    n = len(raw)
    if n < 1:
        raise NotSquare("table must have at least one row")
    rows = []
    for i, row in enumerate(raw):
        row = tuple(row)
        if len(row) != n:
            raise NotSquare(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, Integral) or not 0 <= v < n:
                raise OutOfRangeEntry(i, j, v, n)
        rows.append(tuple(int(v) for v in row))
    t = tuple(rows)
    r = range(n)
    for i in r:
        ti = t[i]
        for j in r:
            tij = t[ti[j]]
            tj = t[j]
            for k in r:
                if tij[k] != ti[tj[k]]:
                    raise AssociativityViolation(i, j, k, tij[k], ti[tj[k]])
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise BadParameter(f"{len(labels)} labels for {n} elements")
        if len(set(labels)) != n:
            raise BadParameter("labels must be distinct")
        if any(not s or any(c.isspace() for c in s) for s in labels):
            raise BadParameter("labels must be non-empty and contain no whitespace")
    return FiniteSemigroup(t, labels)


def is_commutative(S: FiniteSemigroup) -> bool:
    t = S.table
    return all(t[i][j] == t[j][i] for i in range(S.n) for j in range(i + 1, S.n))


def idempotents(S: FiniteSemigroup) -> ElemSet:
    """E(W) = {e : e + e = e}."""
    if "E" not in S._cache:
        S._cache["E"] = ElemSet.of(S.n, (e for e in range(S.n) if S.table[e][e] == e))
    return S._cache["E"]


def absorbing_element(S: FiniteSemigroup) -> int | None:
    """The absorbing element, if any.

    Following the convention that absorbing elements only exist in
    semigroups with at least two elements, a singleton reports ``None``.
    """
    if S.n < 2:
        return None
    for a in range(S.n):
        if S.row_masks[a] == 1 << a and S.col_masks[a] == 1 << a:
            return a
    return None


def is_isolated_absorbing(S: FiniteSemigroup) -> bool:
    """True iff S has an absorbing element whose removal leaves a subsemigroup."""
    a = absorbing_element(S)
    if a is None:
        return False
    return all(S.table[v][w] != a for v in range(S.n) for w in range(S.n) if v != a and w != a)


def is_closed(S: FiniteSemigroup, X: ElemSet) -> bool:
    return S.sumset(X, X) <= X


def restrict(S: FiniteSemigroup, X: ElemSet) -> tuple[FiniteSemigroup, list[int]]:
    """Materialise the subsemigroup ``(X, +)`` with its own dense indices.

    Returns the new semigroup and the list mapping new index -> old index.
    """
    if not X:
        raise NotClosedUnderOperation("cannot restrict to the empty set")
    if not is_closed(S, X):
        raise NotClosedUnderOperation(f"{X.to_list()} is not closed under +")
    old = X.to_list()
    new = {o: i for i, o in enumerate(old)}
    table = tuple(tuple(new[S.table[a][b]] for b in old) for a in old)
    labels = tuple(S.label(o) for o in old) if S.labels is not None else None
    return FiniteSemigroup(table, labels), old


# --- text / JSON formats -------------------------------------------------

def to_text(S: FiniteSemigroup) -> str:
    lines = [str(S.n)]
    lines += [" ".join(str(v) for v in row) for row in S.table]
    if S.labels is not None:
        lines.append("labels: " + " ".join(S.labels))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> FiniteSemigroup:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the element count, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError("element count must be >= 1")
    body = lines[1:]
    labels = None
    if body and body[-1].startswith("labels:"):
        labels = body[-1][len("labels:"):].split()
        body = body[:-1]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, found {len(body)}")
    try:
        raw = [[int(tok) for tok in ln.split()] for ln in body]
    except ValueError as exc:
        raise ParseError(f"non-integer table entry: {exc}") from None
    return validate_table(raw, labels)


def to_json(S: FiniteSemigroup) -> str:
    obj = {"n": S.n, "table": [list(r) for r in S.table]}
    if S.labels is not None:
        obj["labels"] = list(S.labels)
    return json.dumps(obj, ensure_ascii=False) + "\n"


def from_json(text: str) -> FiniteSemigroup:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(obj, dict) or "table" not in obj:
        raise ParseError("JSON table must be an object with a 'table' key")
    S = validate_table(obj["table"], obj.get("labels"))
    if "n" in obj and obj["n"] != S.n:
        raise ParseError(f"declared n={obj['n']} but table has {S.n} rows")
    return S


def load(path) -> FiniteSemigroup:
    """Read a table file, choosing the parser from its first character."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)
