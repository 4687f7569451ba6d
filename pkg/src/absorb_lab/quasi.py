"""Rees order on idempotents, quasi-absorbing sets and A-primitive elements.

Three routes to the quasi-absorbing set are kept separate on purpose:

* :func:`stepwise_quasi_absorbing` peels absorbing elements off one at a time,
* :func:`a_fin` evaluates the E^lin / finite E^≤ predicate literally,
* :func:`a_w` evaluates the same predicate without the finiteness clause.

On a finite semigroup all three coincide; the test suite relies on that.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import ElemSet, FiniteSemigroup, idempotents
from .errors import NotIdempotent
from .green import require_ideal


def _require_idempotent(S: FiniteSemigroup, e: int) -> None:
    if not 0 <= e < S.n or S.table[e][e] != e:
        raise NotIdempotent(f"{S.label(e) if 0 <= e < S.n else e} is not idempotent")


def rees_leq(S: FiniteSemigroup, e: int, f: int) -> bool:
    """e ≤_H f, i.e. e + f = f + e = e, for idempotents e and f."""
    _require_idempotent(S, e)
    _require_idempotent(S, f)
    return S.table[e][f] == e and S.table[f][e] == e


def _below_mask(S: FiniteSemigroup, e: int) -> int:
    t = S.table
    m = 0
    for f in idempotents(S):
        if t[f][e] == f and t[e][f] == f:
            m |= 1 << f
    return m


def e_below(S: FiniteSemigroup, e: int) -> ElemSet:
    """E^≤(e) = {f ∈ E(W) : f ≤_H e}."""
    _require_idempotent(S, e)
    return ElemSet(S.n, _below_mask(S, e))


def _all_below(S: FiniteSemigroup) -> dict[int, ElemSet]:
    if "e_below" not in S._cache:
        S._cache["e_below"] = {e: ElemSet(S.n, _below_mask(S, e)) for e in idempotents(S)}
    return S._cache["e_below"]


def _is_chain(S: FiniteSemigroup, X: ElemSet) -> bool:
    t = S.table
    xs = X.to_list()
    for i, a in enumerate(xs):
        for b in xs[i + 1:]:
            ab_leq = t[a][b] == a and t[b][a] == a
            ba_leq = t[a][b] == b and t[b][a] == b
            if not (ab_leq or ba_leq):
                return False
    return True


def e_lin(S: FiniteSemigroup) -> ElemSet:
    """Idempotents e for which ≤_H is a total order on E^≤(e)."""
    below = _all_below(S)
    return ElemSet.of(S.n, (e for e, B in below.items() if _is_chain(S, B)))


def stepwise_quasi_absorbing(S: FiniteSemigroup) -> tuple[ElemSet, list[ElemSet]]:
    """A_s(W) and the stage list [A_1, A_2, ...] of the peeling procedure.

    A_n collects the elements of the remainder that absorb every element of
    the remainder; the loop stops at the first empty stage.
    """
    t = S.table
    removed = 0
    stages: list[ElemSet] = []
    remaining = list(range(S.n))
    while remaining:
        stage = 0
        for a in remaining:
            if all(t[w][a] == a and t[a][w] == a for w in remaining):
                stage |= 1 << a
        if not stage:
            break
        stages.append(ElemSet(S.n, stage))
        removed |= stage
        remaining = [w for w in remaining if not removed >> w & 1]
    return ElemSet(S.n, removed), stages


def _absorbs_outside(S: FiniteSemigroup, a: int, inside: ElemSet) -> bool:
    t = S.table
    return all(t[w][a] == a and t[a][w] == a for w in range(S.n) if w not in inside)


def a_fin(S: FiniteSemigroup) -> ElemSet:
    """{α ∈ E^lin(W) : E^≤(α) finite, α absorbs every w ∉ E^≤(α)}."""
    below = _all_below(S)
    lin = e_lin(S)
    out = []
    for a in lin:
        B = below[a]
        finite = len(B) <= S.n  # always true for a Cayley table, kept literally
        if finite and _absorbs_outside(S, a, B):
            out.append(a)
    return ElemSet.of(S.n, out)


def a_w(S: FiniteSemigroup) -> ElemSet:
    """Quasi-absorbing elements: {α ∈ E^lin(W) : α absorbs every w ∉ E^≤(α)}."""
    if "A(W)" not in S._cache:
        below = _all_below(S)
        S._cache["A(W)"] = ElemSet.of(S.n, (a for a in e_lin(S) if _absorbs_outside(S, a, below[a])))
    return S._cache["A(W)"]


def primitives(S: FiniteSemigroup, A: ElemSet) -> ElemSet:
    """P(A): idempotents e ∉ A such that every idempotent f ≤_H e is e or lies in A."""
    require_ideal(S, A, "A")
    below = _all_below(S)
    out = []
    for e, B in below.items():
        if e in A:
            continue
        if (B - A).mask == 1 << e:
            out.append(e)
    return ElemSet.of(S.n, out)


def quasi_primitives(S: FiniteSemigroup) -> ElemSet:
    return primitives(S, a_w(S))


@dataclass(frozen=True)
class QuasiReport:
    rees_order: frozenset[tuple[int, int]]
    e_below: dict[int, ElemSet]
    e_lin: ElemSet
    a_s: ElemSet
    stages: list[ElemSet]
    a_fin: ElemSet
    a_w: ElemSet
    primitives: dict[str, ElemSet] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "A_s": self.a_s.to_list(),
            "stages": [s.to_list() for s in self.stages],
            "A_fin": self.a_fin.to_list(),
            "A": self.a_w.to_list(),
            "E_lin": self.e_lin.to_list(),
            "primitives": {k: v.to_list() for k, v in self.primitives.items()},
        }


def quasi_report(S: FiniteSemigroup) -> QuasiReport:
    below = _all_below(S)
    order = frozenset((f, e) for e, B in below.items() for f in B)
    a_s, stages = stepwise_quasi_absorbing(S)
    aw = a_w(S)
    return QuasiReport(
        rees_order=order,
        e_below=dict(below),
        e_lin=e_lin(S),
        a_s=a_s,
        stages=stages,
        a_fin=a_fin(S),
        a_w=aw,
        primitives={"A(W)": primitives(S, aw)},
    )
