"""Executable statements about Green's relations, quasi-absorbing sets and ideals.

:func:`verify_theorem_suite` evaluates every statement on one semigroup and
returns a structured pass/fail record, with the first counterexample kept for
each failing statement.  Statements restricted to commutative semigroups are
reported as not applicable elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import ElemSet, FiniteSemigroup, absorbing_element, idempotents, is_closed, is_commutative, restrict
from .errors import TooManyJClasses
from .green import (
    green_classes,
    group_identity,
    h_theorem_verdict,
    is_group,
    is_ideal,
    is_left_ideal,
    is_right_ideal,
)
from .ideals import (
    all_ideals,
    enumerate_left_ideals,
    enumerate_right_ideals,
    is_A_minimal,
    is_A_simple,
    is_bottleneck,
    is_minimal_meeting,
)
from .quasi import _all_below, a_fin, a_w, e_lin, primitives, stepwise_quasi_absorbing

SUITES = ("green", "quasi", "ideals")

# Above this many ideals the pairwise statements use a deterministic
# subsample of pairs; the report marks such statements as sampled.
PAIR_LIMIT = 4096


@dataclass
class StatementResult:
    name: str
    suite: str
    applicable: bool = True
    checked: int = 0
    failures: int = 0
    counterexample: dict | None = None
    sampled: bool = False

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out = {"name": self.name, "suite": self.suite, "applicable": self.applicable,
               "passed": self.passed, "checked": self.checked}
        if self.sampled:
            out["sampled"] = True
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteReport:
    results: list[StatementResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[StatementResult]:
        return [r for r in self.results if not r.passed]

    def get(self, name: str) -> StatementResult:
        return next(r for r in self.results if r.name == name)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.results]


class _Recorder:
    def __init__(self, report: SuiteReport, suite: str):
        self.report = report
        self.suite = suite

    def start(self, name: str, applicable: bool = True) -> StatementResult:
        r = StatementResult(f"{self.suite}.{name}", self.suite, applicable=applicable)
        self.report.results.append(r)
        return r


def _check(r: StatementResult, cond: bool, **payload) -> None:
    r.checked += 1
    if not cond:
        r.failures += 1
        if r.counterexample is None:
            r.counterexample = {k: (v.to_list() if isinstance(v, ElemSet) else v) for k, v in payload.items()}


def _ideal_scope(S: FiniteSemigroup) -> tuple[list[ElemSet], bool]:
    """All ideals when enumerable; otherwise a fallback family (not exhaustive)."""
    try:
        return all_ideals(S), True
    except TooManyJClasses:
        g = green_classes(S)
        fam = {S.empty, S.universe, a_w(S)} | set(g.two_sided)
        return sorted(fam, key=lambda X: (len(X), X.to_list())), False


def _pairs(items: list, limit: int = PAIR_LIMIT):
    total = len(items) ** 2
    if total <= limit:
        return [(a, b) for a in items for b in items], False
    stride = -(-total // limit)
    flat = [(items[k // len(items)], items[k % len(items)]) for k in range(0, total, stride)]
    return flat, True


def _union_w_minus_h(S: FiniteSemigroup, P: ElemSet) -> ElemSet:
    g = green_classes(S)
    out = S.empty
    for f in P:
        out |= g.two_sided[f] - g.H(f)
    return out


def _union_lr_minus_h(S: FiniteSemigroup, P: ElemSet) -> ElemSet:
    g = green_classes(S)
    out = S.empty
    for f in P:
        out |= (g.left[f] & g.right[f]) - g.H(f)
    return out


# --- green -------------------------------------------------------------------

def _green_suite(S: FiniteSemigroup, rep: SuiteReport, ideals: list[ElemSet], exhaustive: bool) -> None:
    rec = _Recorder(rep, "green")
    g = green_classes(S)
    n = S.n
    E = idempotents(S)
    comm = is_commutative(S)

    r = rec.start("principal_ideal_lemma")
    for u in range(n):
        for v in range(n):
            _check(r, (v in g.left[u]) == (g.left[v] <= g.left[u]), kind="L", u=u, v=v)
            _check(r, (v in g.right[u]) == (g.right[v] <= g.right[u]), kind="R", u=u, v=v)
            _check(r, (v in g.two_sided[u]) == (g.two_sided[v] <= g.two_sided[u]), kind="J", u=u, v=v)

    r = rec.start("class_inclusions")
    for u in range(n):
        H, L, R = g.H(u), g.L(u), g.R(u)
        _check(r, H <= L <= g.left[u] <= g.two_sided[u], u=u)
        _check(r, H <= R <= g.right[u] <= g.two_sided[u], u=u)

    r = rec.start("commutative_classes_coincide", applicable=comm)
    if comm:
        for u in range(n):
            _check(r, g.L(u) == g.R(u) == g.H(u), u=u)

    r = rec.start("class_outside_one_sided_ideal")
    try:
        lefts = list(enumerate_left_ideals(S))
        rights = list(enumerate_right_ideals(S))
    except TooManyJClasses:
        lefts = [g.left[u] for u in range(n)] + [g.left[u] - g.L(u) for u in range(n)]
        rights = [g.right[u] for u in range(n)] + [g.right[u] - g.R(u) for u in range(n)]
        r.sampled = True
    for A in lefts:
        for u in A.complement():
            _check(r, g.H(u) <= g.L(u) <= g.left[u] - A <= g.two_sided[u] - A, side="left", A=A, u=u)
    for A in rights:
        for u in A.complement():
            _check(r, g.H(u) <= g.R(u) <= g.right[u] - A <= g.two_sided[u] - A, side="right", A=A, u=u)

    r = rec.start("idempotent_principal_ideals")
    t = S.table
    for e in E:
        WL, WR = g.left[e], g.right[e]
        _check(r, WL == S.left_translate(S.elems([e])), e=e, part="W_L(e) = W+{e}")
        _check(r, WR == S.right_translate(S.elems([e])), e=e, part="W_R(e) = {e}+W")
        for u in range(n):
            _check(r, (u in WL) == (t[u][e] == u), e=e, u=u, part="u in W_L(e) iff u = u+e")
            _check(r, (u in WR) == (t[e][u] == u), e=e, u=u, part="u in W_R(e) iff u = e+u")
        _check(r, g.two_sided[e] == S.sumset(WL, WR), e=e, part="W(e) = W_L(e)+W_R(e)")

    r = rec.start("principal_minus_class_is_one_sided_ideal")
    for u in range(n):
        _check(r, is_left_ideal(S, g.left[u] - g.L(u)), u=u, side="left")
        _check(r, is_right_ideal(S, g.right[u] - g.R(u)), u=u, side="right")

    r = rec.start("principal_minus_h_is_ideal", applicable=comm)
    if comm:
        for u in range(n):
            _check(r, is_ideal(S, g.two_sided[u] - g.H(u)), u=u)

    r = rec.start("h_group_theorem")
    r.sampled = not exhaustive
    for A in ideals:
        for e in E - A:
            v = h_theorem_verdict(S, e, A)
            _check(r, v.h_eq_we_minus_a == v.group, A=A, e=e,
                   h_eq=v.h_eq_we_minus_a, group=v.group)


# --- quasi -------------------------------------------------------------------

def _quasi_suite(S: FiniteSemigroup, rep: SuiteReport, ideals: list[ElemSet], exhaustive: bool) -> None:
    rec = _Recorder(rep, "quasi")
    g = green_classes(S)
    t = S.table
    n = S.n
    E = idempotents(S)
    Es = E.to_list()
    below = _all_below(S)
    comm = is_commutative(S)
    As, stages = stepwise_quasi_absorbing(S)
    Af = a_fin(S)
    Aw = a_w(S)

    r = rec.start("rees_order_is_partial_order")
    for e in Es:
        _check(r, e in below[e], e=e, part="reflexive")
        for f in Es:
            if f in below[e] and e in below[f]:
                _check(r, e == f, e=e, f=f, part="antisymmetric")
            for h in Es:
                if h in below[f] and f in below[e]:
                    _check(r, h in below[e], e=e, f=f, h=h, part="transitive")
            if f in below[e]:
                _check(r, below[f] <= below[e], e=e, f=f, part="E<=(f) inside E<=(e)")

    r = rec.start("stages_are_singletons")
    for i, st in enumerate(stages):
        _check(r, len(st) == 1, stage=i, members=st)
    for i in range(len(stages) - 1):
        a, b = stages[i].to_list()[0], stages[i + 1].to_list()[0]
        _check(r, a in below.get(b, S.empty), stage=i, part="alpha_n <=_H alpha_(n+1)")

    r = rec.start("three_routes_agree")
    _check(r, As == Af == Aw, A_s=As, A_fin=Af, A=Aw)

    r = rec.start("membership_lemma")
    for name, Q in (("A_fin", Af), ("A", Aw)):
        for b in range(n):
            witnessed = any(b in below[a] for a in Q)
            _check(r, (b in Q) == witnessed, set=name, beta=b)

    r = rec.start("pairwise_sums")
    for a in Aw:
        for b in Aw:
            _check(r, t[a][b] == t[b][a] and t[a][b] in (a, b), alpha=a, beta=b)

    r = rec.start("quasi_absorbing_is_ideal")
    _check(r, Aw <= E, part="A(W) inside E(W)", A=Aw)
    _check(r, is_ideal(S, Aw), part="A(W) ideal", A=Aw)
    _check(r, is_ideal(S, Af), part="A_fin(W) ideal", A=Af)

    r = rec.start("inside_principal_one_sided")
    for u in Aw.complement():
        _check(r, Aw <= g.left[u] & g.right[u], u=u)

    r = rec.start("quasi_group_corollary")
    for e in E - Aw:
        rest = g.two_sided[e] - Aw
        lhs = g.H(e) == rest
        ident = group_identity(S, rest)
        _check(r, lhs == (ident == e), e=e, h_eq=lhs, identity=ident)

    r = rec.start("primitive_h_theorem")
    r.sampled = not exhaustive
    prims = {}
    for A in ideals:
        P = primitives(S, A)
        prims[A] = P
        U = _union_lr_minus_h(S, P)
        for e in P:
            _check(r, g.H(e) == (g.left[e] & g.right[e]) - U, A=A, e=e)

    r = rec.start("commutative_primitive_h", applicable=comm)
    if comm:
        for A, P in prims.items():
            U = _union_w_minus_h(S, P)
            for e in P:
                _check(r, g.H(e) == g.two_sided[e] - U, A=A, e=e)

    r = rec.start("commutative_primitive_union_is_ideal", applicable=comm)
    if comm:
        for A, P in prims.items():
            _check(r, is_ideal(S, _union_w_minus_h(S, P)), A=A)

    r = rec.start("primitive_monotone_in_ideal")
    pairs, r.sampled = _pairs(list(prims))
    r.sampled = r.sampled or not exhaustive
    for A, B in pairs:
        if A <= B:
            for e in prims[A] - B:
                _check(r, e in prims[B], A=A, B=B, e=e)

    r = rec.start("idempotents_subsemigroup", applicable=comm)
    if comm:
        _check(r, is_closed(S, E), E=E)

    alpha = absorbing_element(S)
    r = rec.start("absorbing_in_e_lin", applicable=alpha is not None)
    if alpha is not None:
        _check(r, below[alpha] == S.elems([alpha]) and alpha in e_lin(S) and alpha in Aw, alpha=alpha)


# --- ideals ------------------------------------------------------------------

def _ideals_suite(S: FiniteSemigroup, rep: SuiteReport, ideals: list[ElemSet], exhaustive: bool) -> None:
    rec = _Recorder(rep, "ideals")
    g = green_classes(S)
    n = S.n
    W = S.universe
    E = idempotents(S)
    comm = is_commutative(S)
    Aw = a_w(S)
    As, _ = stepwise_quasi_absorbing(S)
    below = _all_below(S)

    r = rec.start("enumeration_sound", applicable=exhaustive)
    if exhaustive:
        _check(r, len(set(ideals)) == len(ideals), part="no duplicates")
        _check(r, S.empty in ideals and W in ideals, part="contains empty set and W")
        for X in ideals:
            _check(r, is_ideal(S, X), X=X)
        if n <= 12:
            scan = [ElemSet(n, m) for m in range(1 << n) if is_ideal(S, ElemSet(n, m))]
            _check(r, set(scan) == set(ideals), part="subset scan", scan=len(scan), found=len(ideals))

    pairs, sampled = _pairs(ideals)
    r = rec.start("fast_brute_agreement", applicable=exhaustive)
    r.sampled = sampled
    if exhaustive:
        for D, A in pairs:
            _check(r, is_A_minimal(S, D, A, "fast") == is_A_minimal(S, D, A, "brute"), pred="A_minimal", D=D, A=A)
        for A in ideals:
            _check(r, is_bottleneck(S, A, "fast") == is_bottleneck(S, A, "brute"), pred="bottleneck", A=A)
            if A != W:
                _check(r, is_A_simple(S, A, "fast") == is_A_simple(S, A, "brute"), pred="A_simple", A=A)
                B = W - A
                for D in ideals:
                    _check(r, is_minimal_meeting(S, D, B, "fast") == is_minimal_meeting(S, D, B, "brute"),
                           pred="meeting", D=D, B=B)

    r = rec.start("subsemigroup_simplicity_remark")
    r.sampled = sampled or not exhaustive
    for D, A in pairs:
        AD = A & D
        if not AD < D:
            continue
        sub, old = restrict(S, D)
        new = {o: i for i, o in enumerate(old)}
        sub_A = sub.elems(new[a] for a in AD)
        if is_A_simple(sub, sub_A):
            _check(r, is_A_minimal(S, D, A), D=D, A=A)

    r = rec.start("bottleneck_lemma")
    bottle = {A: is_bottleneck(S, A) for A in ideals}
    for A, is_b in bottle.items():
        if is_b:
            for e in E - A:
                _check(r, A < g.two_sided[e], A=A, e=e)

    r = rec.start("quasi_absorbing_sets_are_bottlenecks")
    _check(r, is_bottleneck(S, Aw), which="A(W)", A=Aw)
    _check(r, is_bottleneck(S, As), which="A_s(W)", A=As)
    for a in Aw:
        _check(r, is_ideal(S, below[a]) and is_bottleneck(S, below[a]), which="E<=(a)", a=a)

    r = rec.start("minimal_meeting_implication")
    r.sampled = sampled or not exhaustive
    for D, A in pairs:
        if A != W and is_A_minimal(S, D, A):
            _check(r, is_minimal_meeting(S, D, W - A), D=D, A=A)

    r = rec.start("minimal_meeting_bottleneck_equivalence")
    r.sampled = sampled or not exhaustive
    for D, A in pairs:
        if A != W and bottle.get(A, False):
            _check(r, is_A_minimal(S, D, A) == is_minimal_meeting(S, D, W - A), D=D, A=A)

    r = rec.start("minimal_ideal_equivalences", applicable=comm)
    r2 = rec.start("general_implications")
    r.sampled = r2.sampled = not exhaustive
    for A in ideals:
        for e in E - A:
            We = g.two_sided[e]
            rest = We - A
            b1 = g.H(e) == rest
            b2 = is_group(S, rest)
            b3 = is_A_minimal(S, We, A)
            sub, old = restrict(S, We)
            new = {o: i for i, o in enumerate(old)}
            b4 = is_A_simple(sub, sub.elems(new[a] for a in A & We))
            if comm:
                _check(r, b1 == b2 == b3 == b4, A=A, e=e, values=[b1, b2, b3, b4])
            _check(r2, (not b2 or b4) and (not b4 or b3) and b1 == b2, A=A, e=e, values=[b1, b2, b3, b4])

    r = rec.start("group_trace_theorem", applicable=comm)
    r2 = rec.start("group_trace_corollary", applicable=comm)
    r.sampled = r2.sampled = not exhaustive
    if comm:
        for A in ideals:
            P = primitives(S, A)
            U = _union_w_minus_h(S, P)
            for e in P:
                We = g.two_sided[e]
                grp = is_group(S, We - A)
                _check(r, grp == ((We & A) == (We & U)), A=A, e=e, group=grp)
                if A <= We and U <= We:
                    _check(r2, grp == (A == U), A=A, e=e, group=grp)


def verify_theorem_suite(S: FiniteSemigroup, suites=SUITES) -> SuiteReport:
    """Run the selected statement groups ("green", "quasi", "ideals") on S."""
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    rep = SuiteReport()
    ideals, exhaustive = _ideal_scope(S)
    if "green" in suites:
        _green_suite(S, rep, ideals, exhaustive)
    if "quasi" in suites:
        _quasi_suite(S, rep, ideals, exhaustive)
    if "ideals" in suites:
        _ideals_suite(S, rep, ideals, exhaustive)
    return rep


def noncommutative_witnesses(S: FiniteSemigroup) -> list[dict]:
    """Elements u for which W(u)\\H(u) is not an ideal (only possible when S
    is not commutative)."""
    g = green_classes(S)
    out = []
    for u in range(S.n):
        X = g.two_sided[u] - g.H(u)
        if not is_ideal(S, X):
            out.append({"u": S.label(u), "W(u)\\H(u)": S.labels_of(X)})
    return out


__all__ = ["verify_theorem_suite", "SuiteReport", "StatementResult", "SUITES", "noncommutative_witnesses"]
