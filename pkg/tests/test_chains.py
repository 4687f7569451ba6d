import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from absorb_lab.chains import (
    AGREE,
    EXPECTED_DIVERGENCE,
    FIN,
    NOT_APPLICABLE,
    OMEGA,
    OMEGA_STAR,
    PRESETS,
    ChainSemigroup,
    SymbolicSet,
    cross_check,
    parse_chain_spec,
    random_chain_spec,
    symbolic_a_fin,
    symbolic_a_s,
    symbolic_a_w,
    symbolic_e_lin,
    symbolic_primitives,
    truncate,
)
from absorb_lab.core import is_commutative
from absorb_lab.errors import BadK, ChainSpecError
from absorb_lab.generators import generate_family
from absorb_lab.quasi import a_w

import oracles


def chain_specs():
    return st.integers(0, 2**32 - 1).map(lambda s: random_chain_spec(np.random.default_rng(s)))


class TestConstruction:
    def test_gadget_needs_top_maximum(self):
        with pytest.raises(ChainSpecError):
            ChainSemigroup((OMEGA,), gadget=True)
        ChainSemigroup((OMEGA, FIN(2)), gadget=True)

    def test_empty_rejected(self):
        with pytest.raises(ChainSpecError):
            ChainSemigroup(())

    def test_bad_fin(self):
        with pytest.raises((ChainSpecError, ValueError)):
            FIN(0)

    def test_gadget_sums(self):
        C = PRESETS["ef_gadget"]
        assert C.add("E", "F") == C.add("F", "E") == C.top() == (0, 0)
        assert C.add("E", (0, 3)) == (0, 3)
        assert C.rees_leq((0, 1), (0, 0)) and not C.rees_leq("E", "F")

    def test_addresses(self):
        C = ChainSemigroup((FIN(2), OMEGA_STAR))
        assert C.is_element((0, 1)) and not C.is_element((0, 2))
        assert C.is_element((1, 99)) and not C.is_element("E")
        assert C.label((1, 0)) == "b1[-1]" and C.label((0, 1)) == "b0[1]"


class TestSpecFormat:
    def test_text(self):
        C = parse_chain_spec("blocks = [omega_star, fin:3, omega]")
        assert C.blocks == (OMEGA_STAR, FIN(3), OMEGA) and not C.gadget

    def test_gadget_text(self):
        C = parse_chain_spec("blocks = [omega_star]; gadget = twin_top")
        assert C == PRESETS["ef_gadget"]

    def test_json(self):
        C = parse_chain_spec('{"blocks": ["omega", "fin:2"], "gadget": "twin_top"}')
        assert C.blocks == (OMEGA, FIN(2)) and C.gadget

    @pytest.mark.parametrize("bad", ["", "blocks = omega", "blocks = [aleph]", "blocks = [omega]; colour = red",
                                     "blocks = [omega]; gadget = twin_top", "{bad json"])
    def test_errors(self, bad):
        with pytest.raises(ChainSpecError):
            parse_chain_spec(bad)

    @given(chain_specs())
    def test_round_trip(self, C):
        assert parse_chain_spec(C.to_text()) == C
        assert parse_chain_spec(C.to_json()) == C


class TestSymbolicSet:
    def test_full_fin_block_normalizes(self):
        C = ChainSemigroup((FIN(2), OMEGA))
        assert SymbolicSet.build(C, {0: {0, 1}}) == SymbolicSet.build(C, {0: "all"})

    def test_algebra(self):
        C = ChainSemigroup((FIN(3), OMEGA))
        a = SymbolicSet.build(C, {0: {0}})
        b = SymbolicSet.build(C, {0: {0, 1}})
        assert a < b and a <= b and not b <= a
        assert (a | b) == b and (a & b) == a
        assert (0, 0) in a and (0, 1) not in a
        assert SymbolicSet.empty(C).is_empty() and SymbolicSet.all(C).is_all()

    def test_describe(self):
        C = PRESETS["two_omega"]
        assert SymbolicSet.empty(C).describe() == "EMPTY"
        assert SymbolicSet.all(C).describe() == "ALL"
        assert symbolic_a_fin(C).describe() == "{b0:omega}"


class TestInfiniteExamples:
    def test_nat_max(self):
        C = PRESETS["nat_max"]
        assert symbolic_a_s(C).is_empty() and symbolic_a_fin(C).is_empty()
        assert symbolic_a_w(C).is_all()

    def test_two_omega(self):
        C = PRESETS["two_omega"]
        af = symbolic_a_fin(C)
        assert af == SymbolicSet.build(C, {0: "all"})
        assert af < symbolic_a_w(C) and symbolic_a_w(C).is_all()
        assert symbolic_primitives(C, "AFIN").is_empty()

    def test_ef_gadget(self):
        C = PRESETS["ef_gadget"]
        assert symbolic_a_fin(C).is_empty()
        assert symbolic_a_w(C) == SymbolicSet.chain_part(C)
        assert symbolic_primitives(C, "AW") == SymbolicSet.build(C, {}, ["E", "F"])
        assert symbolic_primitives(C, "AFIN").is_empty()

    def test_d1_d2(self):
        C = PRESETS["d1_d2"]
        p = symbolic_primitives(C, "AFIN")
        assert p.elements() == [(1, 0)]
        assert p <= symbolic_a_w(C)
        assert symbolic_primitives(C, "AW").is_empty()

    def test_fin_chain(self):
        C = ChainSemigroup((FIN(3),))
        assert symbolic_a_fin(C).is_all() and symbolic_a_s(C).is_all()

    def test_primitives_need_downset(self):
        C = ChainSemigroup((FIN(3),))
        with pytest.raises(ChainSpecError):
            symbolic_primitives(C, SymbolicSet.build(C, {0: {1}}))
        with pytest.raises(ChainSpecError):
            symbolic_primitives(C, "BOTH")


class TestInvariants:
    @given(chain_specs())
    def test_a_s_equals_a_fin(self, C):
        assert symbolic_a_s(C) == symbolic_a_fin(C)

    @given(chain_specs())
    def test_a_fin_inside_a_w(self, C):
        assert symbolic_a_fin(C) <= symbolic_a_w(C) <= symbolic_e_lin(C)

    @given(chain_specs())
    def test_trivial_primitives(self, C):
        af, aw = symbolic_a_fin(C), symbolic_a_w(C)
        if af < aw:
            p = symbolic_primitives(C, "AFIN")
            assert p.is_empty() or (len(p.elements()) == 1 and p <= aw)

    @settings(max_examples=30, deadline=None)
    @given(chain_specs(), st.integers(1, 3))
    def test_truncations_validate(self, C, k):
        T = truncate(C, k)
        assert oracles.is_assoc(T.table) and is_commutative(T)
        assert all(T.table[i][i] == i for i in range(T.n))


class TestTruncate:
    def test_ef_gadget_matches_family(self):
        T = truncate(PRESETS["ef_gadget"], 3)
        assert T.table == generate_family("paper_example_ef_gadget:3").table

    def test_fin_is_min_chain(self):
        assert truncate(ChainSemigroup((FIN(3),)), 10).table == generate_family("min_chain:3").table

    def test_omega_star_is_reversed_max_chain(self):
        # indices run Rees-least first, max_chain lists its numbers upwards
        T = truncate(PRESETS["nat_max"], 4)
        M = generate_family("max_chain:4")
        flip = [3, 2, 1, 0]
        assert all(flip[T.table[i][j]] == M.table[flip[i]][flip[j]] for i in range(4) for j in range(4))

    def test_bad_k(self):
        with pytest.raises(BadK):
            truncate(PRESETS["nat_max"], 0)


class TestCrossCheck:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_ef_gadget(self, k):
        rep = cross_check(PRESETS["ef_gadget"], k)
        assert rep.ok
        assert rep.status("primitives_of_chain_ideal") == AGREE
        assert rep.status("gadget_in_E_lin") == AGREE

    def test_nat_max_divergence(self):
        rep = cross_check(PRESETS["nat_max"], 5)
        assert rep.status("A_s") == EXPECTED_DIVERGENCE
        assert rep.status("primitives_of_chain_ideal") == NOT_APPLICABLE
        assert rep.ok

    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_finite_chain_agrees(self, m):
        rep = cross_check(ChainSemigroup((FIN(m),)), m + 2)
        assert all(it.status in (AGREE, NOT_APPLICABLE) for it in rep.items)

    def test_two_omega_a_is_exact(self):
        C = PRESETS["two_omega"]
        T = truncate(C, 4)
        assert a_w(T) == T.universe
        assert cross_check(C, 4).status("A") == AGREE

    @settings(max_examples=25, deadline=None)
    @given(chain_specs(), st.integers(1, 3))
    def test_random_specs_never_fail(self, C, k):
        assert cross_check(C, k).ok
