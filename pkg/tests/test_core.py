import json

import pytest
from hypothesis import given, strategies as st

from absorb_lab.core import (
    ElemSet,
    absorbing_element,
    from_json,
    from_text,
    idempotents,
    is_commutative,
    is_isolated_absorbing,
    load,
    restrict,
    to_json,
    to_text,
    validate_table,
)
from absorb_lab.errors import (
    AssociativityViolation,
    BadParameter,
    IndexOutOfRange,
    NotClosedUnderOperation,
    NotSquare,
    OutOfRangeEntry,
    ParseError,
)
from absorb_lab.generators import generate_family

import oracles
from helpers import BOTTLENECK, LEFT_ZERO, semigroups, tables


class TestElemSet:
    def test_set_algebra(self):
        a = ElemSet.of(5, [0, 2, 4])
        b = ElemSet.of(5, [2, 3])
        assert (a | b).to_list() == [0, 2, 3, 4]
        assert (a & b).to_list() == [2]
        assert (a - b).to_list() == [0, 4]
        assert a.complement().to_list() == [1, 3]
        assert len(a) == 3 and 4 in a and 1 not in a and 7 not in a

    def test_order(self):
        a = ElemSet.of(4, [1])
        b = ElemSet.of(4, [1, 2])
        assert a < b and a <= b and b > a and not b <= a
        assert ElemSet(4) <= a and not ElemSet(4)

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            ElemSet.of(3, [0]) | ElemSet.of(4, [0])

    def test_member_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            ElemSet.of(3, [3])

    @given(st.integers(1, 12).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1)), st.sets(st.integers(0, n - 1)))))
    def test_matches_python_sets(self, args):
        n, x, y = args
        X, Y = ElemSet.of(n, x), ElemSet.of(n, y)
        assert set(X | Y) == x | y
        assert set(X & Y) == x & y
        assert set(X - Y) == x - y
        assert set(X.complement()) == set(range(n)) - x
        assert (X <= Y) == (x <= y)
        assert X.isdisjoint(Y) == x.isdisjoint(y)


class TestValidate:
    def test_singleton(self):
        S = validate_table([[0]])
        assert S.n == 1 and is_commutative(S)

    def test_left_zero_is_valid_and_noncommutative(self):
        S = validate_table(LEFT_ZERO)
        assert not is_commutative(S)

    def test_first_associativity_violation(self):
        # frozen from oracles.first_assoc_violation
        with pytest.raises(AssociativityViolation) as info:
            validate_table([[1, 0], [0, 0]])
        assert (info.value.i, info.value.j, info.value.k) == (0, 0, 1)

    def test_out_of_range_names_cell(self):
        with pytest.raises(OutOfRangeEntry) as info:
            validate_table([[0, 1], [2, 0]])
        assert (info.value.i, info.value.j, info.value.value) == (1, 0, 2)

    @pytest.mark.parametrize("raw", [[], [[0, 0]], [[0], [0, 0]]])
    def test_not_square(self, raw):
        with pytest.raises(NotSquare):
            validate_table(raw)

    def test_rejects_bools_and_floats(self):
        with pytest.raises(OutOfRangeEntry):
            validate_table([[True]])
        with pytest.raises(OutOfRangeEntry):
            validate_table([[0.0]])

    def test_label_rules(self):
        with pytest.raises(BadParameter):
            validate_table(LEFT_ZERO, ["e", "e"])
        with pytest.raises(BadParameter):
            validate_table(LEFT_ZERO, ["e f", "g"])
        with pytest.raises(BadParameter):
            validate_table(LEFT_ZERO, ["e"])

    def test_immutable(self):
        S = validate_table(LEFT_ZERO)
        with pytest.raises(AttributeError):
            S.table = ()

    @given(st.integers(1, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_agrees_with_triple_scan(self, raw):
        bad = oracles.first_assoc_violation(raw)
        if bad is None:
            assert validate_table(raw).table == tuple(map(tuple, raw))
        else:
            with pytest.raises(AssociativityViolation) as info:
                validate_table(raw)
            assert (info.value.i, info.value.j, info.value.k) == bad


class TestPredicates:
    def test_commutativity(self):
        assert is_commutative(validate_table(BOTTLENECK))
        assert is_commutative(generate_family("cyclic:5"))
        assert not is_commutative(generate_family("left_zero:3"))

    def test_idempotents(self):
        assert idempotents(validate_table(LEFT_ZERO)).to_list() == [0, 1]
        assert idempotents(validate_table(BOTTLENECK)).to_list() == [0, 3]
        assert idempotents(generate_family("null:4")).to_list() == [0]

    def test_absorbing(self):
        assert absorbing_element(validate_table(BOTTLENECK)) == 3
        assert absorbing_element(validate_table(LEFT_ZERO)) is None
        # a singleton is not counted as having an absorbing element
        assert absorbing_element(validate_table([[0]])) is None

    def test_isolated_absorbing(self):
        assert is_isolated_absorbing(generate_family("adjoin_zero:cyclic:3"))
        assert not is_isolated_absorbing(validate_table(BOTTLENECK))

    @given(semigroups())
    def test_idempotents_nonempty(self, S):
        assert idempotents(S)
        assert set(idempotents(S)) == oracles.idempotents(S.table)


class TestRestrict:
    def test_restrict_to_ideal(self):
        S = validate_table(BOTTLENECK, ["u", "v", "w", "α"])
        sub, old = restrict(S, S.elems(["w", "α"]))
        assert old == [2, 3]
        assert sub.table == ((1, 1), (1, 1))
        assert sub.labels == ("w", "α")

    def test_not_closed(self):
        S = validate_table(BOTTLENECK)
        with pytest.raises(NotClosedUnderOperation):
            restrict(S, ElemSet.of(4, [1]))


class TestFormats:
    def test_text_layout(self):
        S = generate_family("paper_example_left_zero")
        assert to_text(S) == "2\n0 0\n1 1\nlabels: e f\n"

    def test_json_layout(self):
        S = generate_family("paper_example_bottleneck")
        obj = json.loads(to_json(S))
        assert obj == {"n": 4, "table": [list(r) for r in BOTTLENECK], "labels": ["u", "v", "w", "α"]}

    @given(tables())
    def test_round_trip(self, S):
        assert from_text(to_text(S)) == S
        assert from_json(to_json(S)) == S
        assert to_text(from_text(to_text(S))) == to_text(S)

    def test_labelled_round_trip(self):
        S = generate_family("paper_example_ef_gadget:3")
        assert from_text(to_text(S)) == S
        assert from_json(to_json(S)).labels == S.labels

    @pytest.mark.parametrize("text", ["", "x\n", "2\n0 0\n", "2\n0 a\n1 1\n"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            from_text(text)

    def test_json_n_mismatch(self):
        with pytest.raises(ParseError):
            from_json('{"n": 3, "table": [[0]]}')

    def test_load_sniffs_format(self, tmp_path):
        S = generate_family("min_chain:3")
        (tmp_path / "a.txt").write_text(to_text(S))
        (tmp_path / "b.json").write_text(to_json(S))
        assert load(tmp_path / "a.txt") == load(tmp_path / "b.json") == S
