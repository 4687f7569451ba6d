"""Acceptance criteria 1-8.

Each test prints one ``[criterion N] PASS|FAIL`` line (visible under ``-v``
or ``-s``) and then asserts.  Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from absorb_lab import chains, setopt
from absorb_lab.core import ElemSet, restrict
from absorb_lab.generators import (
    brute_force_count,
    enumerate_semigroups,
    enumerate_tables,
    generate_family,
    random_corpus_seeds,
    random_transformation_semigroup,
)
from absorb_lab.green import green_classes, is_ideal
from absorb_lab.ideals import all_ideals, is_A_minimal, is_A_simple, is_bottleneck, is_minimal_meeting
from absorb_lab.quasi import a_w, primitives, quasi_primitives
from absorb_lab.suite import verify_theorem_suite

import oracles

FAMILY_INSTANCES = (
    [f"{fam}:{k}" for fam in ("left_zero", "right_zero", "min_chain", "max_chain", "cyclic", "null")
     for k in range(1, 7)]
    + [f"paper_example_ef_gadget:{k}" for k in range(1, 7)]
    + [f"two_omega_truncation:{k}" for k in range(1, 5)]
    + ["paper_example_left_zero", "paper_example_bottleneck", "inf_addition_toy"]
    + ["adjoin_zero:left_zero:3", "adjoin_zero:cyclic:4", "adjoin_zero:paper_example_bottleneck",
       "adjoin_identity:right_zero:2", "adjoin_identity:null:3", "adjoin_identity:paper_example_left_zero",
       "adjoin_zero:adjoin_identity:cyclic:3"]
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(num: int, title: str):
        log = {"detail": ""}
        t0 = time.perf_counter()
        ok = False
        try:
            yield log
            ok = True
        finally:
            dt = time.perf_counter() - t0
            with capsys.disabled():
                print(f"\n[criterion {num}] {'PASS' if ok else 'FAIL'} {title} "
                      f"({dt:.1f} s) {log['detail']}")
    return run


def test_criterion_1_enumeration(criterion):
    with criterion(1, "associative table counts 1/8/113/3492") as log:
        t0 = time.perf_counter()
        counts = {n: sum(1 for _ in enumerate_semigroups(n)) for n in (1, 2, 3)}
        brute = {n: brute_force_count(n) for n in (1, 2, 3)}
        by_rows = set(enumerate_tables(4, "row"))
        by_cols = set(enumerate_tables(4, "column"))
        counts[4] = len(by_rows)
        dt = time.perf_counter() - t0
        log["detail"] = f"counts={counts} brute(n<=3)={brute}"
        assert counts == {1: 1, 2: 8, 3: 113, 4: 3492}
        assert brute == {1: 1, 2: 8, 3: 113}
        assert by_rows == by_cols
        assert dt < 60


def test_criterion_2_theorem_suite(criterion, small_corpus, order4):
    with criterion(2, "theorem suite on n<=4, 1000 random, families") as log:
        t0 = time.perf_counter()
        failures = []
        corpus = [("enum", S) for S in small_corpus + order4]
        for s in random_corpus_seeds(2024, 1000):
            rng = np.random.default_rng(s)
            degree, ngen = int(rng.integers(1, 5)), int(rng.integers(1, 4))
            corpus.append((f"trans:{degree}:{ngen}:seed={s}", random_transformation_semigroup(degree, ngen, s)))
        corpus += [(spec, generate_family(spec)) for spec in FAMILY_INSTANCES]
        evaluations = 0
        for name, S in corpus:
            rep = verify_theorem_suite(S)
            evaluations += sum(r.checked for r in rep.results)
            failures += [(name, r.name) for r in rep.failures()]
        dt = time.perf_counter() - t0
        log["detail"] = f"semigroups={len(corpus)} evaluations={evaluations} failures={len(failures)}"
        assert failures == []
        assert dt < 600


def test_criterion_3_worked_examples(criterion):
    with criterion(3, "left-zero, bottleneck and twin-top examples") as log:
        L = generate_family("paper_example_left_zero")
        g = green_classes(L)
        for x in range(L.n):
            assert g.left[x] == g.two_sided[x] == L.universe
            assert g.right[x] == g.H(x) == ElemSet.of(L.n, [x])
        e = L.index("e")
        assert not is_ideal(L, g.two_sided[e] - g.H(e))

        B = generate_family("paper_example_bottleneck")
        assert B.labels_of(a_w(B)) == ["α"]
        assert is_bottleneck(B, B.elems(["w", "α"]))

        for k in range(1, 7):
            C = chains.PRESETS["ef_gadget"]
            T = chains.truncate(C, k)
            chain_ideal = T.elems(i for i, lab in enumerate(T.labels) if lab not in ("E", "F"))
            assert T.labels_of(primitives(T, chain_ideal)) == ["E", "F"]
            F = generate_family(f"paper_example_ef_gadget:{k}")
            assert F.table == T.table
            assert F.labels_of(primitives(F, F.elems(range(k)))) == ["e", "f"]
        log["detail"] = "A(W)={α}, P(chain)={E,F} for k=1..6"


def test_criterion_4_infinite_examples(criterion):
    with criterion(4, "four infinite chain examples and A_s = A_fin") as log:
        P = chains.PRESETS
        C = P["nat_max"]
        assert chains.symbolic_a_s(C).is_empty() and chains.symbolic_a_w(C).is_all()

        C = P["two_omega"]
        af, aw = chains.symbolic_a_fin(C), chains.symbolic_a_w(C)
        assert af == chains.SymbolicSet.build(C, {0: "all"}) and af < aw and aw.is_all()
        assert chains.symbolic_primitives(C, "AFIN").is_empty()

        C = P["ef_gadget"]
        assert chains.symbolic_a_fin(C).is_empty()
        assert chains.symbolic_a_w(C) == chains.SymbolicSet.chain_part(C)
        assert chains.symbolic_primitives(C, "AW").describe() == "{E, F}"

        C = P["d1_d2"]
        p = chains.symbolic_primitives(C, "AFIN")
        assert len(p.elements()) == 1 and p <= chains.symbolic_a_w(C)
        assert chains.symbolic_primitives(C, "AW").is_empty()

        rng = np.random.default_rng(np.random.SeedSequence(4))
        specs = [chains.random_chain_spec(rng) for _ in range(100)]
        bad = [str(C) for C in specs if chains.symbolic_a_s(C) != chains.symbolic_a_fin(C)]
        log["detail"] = f"random specs=100 A_s!=A_fin: {len(bad)}"
        assert bad == []


def test_criterion_5_trivial_primitives(criterion):
    with criterion(5, "P(A_fin) empty or a singleton in A when A_fin < A") as log:
        rng = np.random.default_rng(np.random.SeedSequence(5))
        strict, bad = 0, []
        for _ in range(100):
            C = chains.random_chain_spec(rng)
            af, aw = chains.symbolic_a_fin(C), chains.symbolic_a_w(C)
            if af < aw:
                strict += 1
                p = chains.symbolic_primitives(C, "AFIN")
                if not (p.is_empty() or (len(p.elements()) == 1 and p <= aw)):
                    bad.append(str(C))
        log["detail"] = f"specs=100 with A_fin<A: {strict} failures={len(bad)}"
        assert strict > 0 and bad == []


def test_criterion_6_setopt(criterion):
    with criterion(6, "halfspace sums, translate group, duality") as log:
        t0 = time.perf_counter()
        rng = np.random.default_rng(np.random.SeedSequence(6))
        thm = []
        for _ in range(200):
            C = setopt.random_cone(rng)
            A = setopt.random_poly(rng, C)
            y = setopt.random_dual_normal(rng, C)
            thm.append(setopt.halfspace_oplus(A, y, setopt.random_z(rng, y), C).verdict)
        grid = setopt.translate_group_check((1, 1), (Fraction(1, 2), Fraction(1, 2)), range(-2, 3),
                                            setopt.POSITIVE_QUADRANT)
        dual = []
        while len(dual) < 100:
            C = setopt.random_cone(rng)
            A = setopt.random_poly(rng, C)
            if A.kind is setopt.Kind.POLY:
                dual.append(setopt.duality_reconstruct(A).verdict)
        dt = time.perf_counter() - t0
        log["detail"] = f"halfspace {sum(thm)}/200, grid {grid.checked} checks, duality {sum(dual)}/100"
        assert all(thm) and grid.ok and all(dual)
        assert dt < 60


def test_criterion_7_five_cone_bridge(criterion):
    with criterion(7, "five-cone table through the finite analyzer") as log:
        S = setopt.five_cone_instance().materialize().semigroup
        A = a_w(S)
        assert S.labels_of(A) == ["∅̂", "R̂²"]
        assert S.labels_of(quasi_primitives(S)) == ["h1", "h2"]
        W = green_classes(S).two_sided[S.index("h1")]
        assert is_A_minimal(S, W, A)
        sub, old = restrict(S, W)
        trace = sub.elems(i for i, o in enumerate(old) if o in A)
        assert is_A_simple(sub, trace)
        log["detail"] = f"W(h1)={S.labels_of(W)}"


def test_criterion_8_predicate_equivalences(criterion, small_corpus, order4):
    with criterion(8, "fast vs brute predicates and bottleneck equivalence, n<=4") as log:
        pairs, disagreements = 0, []
        for S in small_corpus + order4:
            ideals = all_ideals(S)
            for A in ideals:
                bn = is_bottleneck(S, A, "fast")
                if bn != is_bottleneck(S, A, "brute") or bn != oracles.is_bottleneck(S.table, A):
                    disagreements.append((S.table, "bottleneck", A.to_list()))
                if A != S.universe and is_A_simple(S, A, "fast") != is_A_simple(S, A, "brute"):
                    disagreements.append((S.table, "simple", A.to_list()))
                B = A.complement()
                for D in ideals:
                    pairs += 1
                    m = is_A_minimal(S, D, A, "fast")
                    if m != is_A_minimal(S, D, A, "brute"):
                        disagreements.append((S.table, "minimal", D.to_list(), A.to_list()))
                    if bn and B and is_minimal_meeting(S, D, B) != m:
                        disagreements.append((S.table, "meeting", D.to_list(), A.to_list()))
        log["detail"] = f"(D, A) pairs={pairs} disagreements={len(disagreements)}"
        assert disagreements == []
