"""Core data model: universes, assignments, labeled data, instance files."""

import json
import random

import pytest
from hypothesis import given, strategies as st

from boolsep import (
    Assignment,
    ContradictoryPair,
    DnfForm,
    EmptyLabelSet,
    LengthMismatch,
    OverlappingLabels,
    PairSolution,
    ParseError,
    Term,
    TriValue,
    VarUniverse,
    eval_partial,
    iter_assignments,
    make_labeled_data,
    named_universe,
    parse_instance,
    serialize_instance,
    verify_pair,
)
from helpers import random_dnf


def pt(*bits):
    return Assignment.from_bits(bits)


class TestVarUniverse:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            VarUniverse(())

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            VarUniverse(("a", "b", "a"))

    def test_index_and_len(self):
        u = VarUniverse(("a", "b", "c"))
        assert len(u) == 3
        assert u.index("b") == 1


class TestAssignment:
    def test_round_trip_bits(self):
        a = pt(1, 0, 1, 1)
        assert a.bits() == (1, 0, 1, 1)
        assert a.word == 0b1101
        assert a.bit(0) == 1 and a.bit(1) == 0

    def test_rejects_bad_bit(self):
        with pytest.raises(ValueError):
            Assignment.from_bits((1, 2))

    def test_rejects_word_out_of_range(self):
        with pytest.raises(ValueError):
            Assignment(4, 2)


class TestMakeLabeledData:
    def test_minimal_valid(self):
        u = named_universe(2)
        d = make_labeled_data(u, {pt(1, 0)}, {pt(0, 1)})
        assert d.a_points == {pt(1, 0)}
        assert d.b_points == {pt(0, 1)}

    def test_overlap_rejected(self):
        u = named_universe(1)
        with pytest.raises(OverlappingLabels):
            make_labeled_data(u, {pt(1)}, {pt(1)})

    def test_empty_side_rejected(self):
        u = named_universe(1)
        with pytest.raises(EmptyLabelSet):
            make_labeled_data(u, set(), {pt(0)})

    def test_width_mismatch_rejected(self):
        u = named_universe(2)
        with pytest.raises(LengthMismatch):
            make_labeled_data(u, {pt(1)}, {pt(0, 1)})

    def test_duplicates_collapse(self):
        u = named_universe(1)
        d = make_labeled_data(u, [pt(1), pt(1)], [pt(0)])
        assert len(d.a_points) == 1


def single_literal_pair(universe):
    theta = DnfForm(frozenset({Term(frozenset({0}), frozenset())}))
    theta_prime = DnfForm(frozenset({Term(frozenset(), frozenset({0}))}))
    return PairSolution("dnf", universe, theta, theta_prime)


class TestEvalPartial:
    def test_one_and_zero(self):
        pair = single_literal_pair(named_universe(1))
        assert eval_partial(pair, pt(1)) is TriValue.ONE
        assert eval_partial(pair, pt(0)) is TriValue.ZERO

    def test_undefined(self):
        # neither side of a one-vs-other-ones pair fires on (1,1)
        u = named_universe(2)
        theta = DnfForm(frozenset({Term(frozenset({0}), frozenset({1}))}))
        theta_prime = DnfForm(frozenset({Term(frozenset({1}), frozenset({0}))}))
        pair = PairSolution("dnf", u, theta, theta_prime)
        assert eval_partial(pair, pt(1, 1)) is TriValue.UNDEFINED

    def test_tight_instance_approximation_is_undefined_off_support(self):
        from boolsep import approx_min_length_dnf, tight_instance

        d = tight_instance(named_universe(3), 2)
        pair = approx_min_length_dnf(d)
        assert eval_partial(pair, pt(1, 1, 1)) is TriValue.UNDEFINED

    def test_contradictory_pair_raises(self):
        u = named_universe(1)
        both = DnfForm(frozenset({Term(frozenset(), frozenset())}))
        pair = PairSolution("dnf", u, both, both)
        with pytest.raises(ContradictoryPair):
            eval_partial(pair, pt(0))

    def test_verified_pairs_never_raise(self):
        # any pair that passes verification stays consistent at every point
        rng = random.Random(5)
        u = named_universe(6)
        d = make_labeled_data(u, {pt(1, 0, 0, 0, 0, 0)}, {pt(0, 0, 0, 0, 0, 0)})
        found = 0
        while found < 20:
            pair = PairSolution("dnf", u, random_dnf(rng, 6), random_dnf(rng, 6))
            if not verify_pair(d, pair).feasible:
                continue
            found += 1
            for x in iter_assignments(u):
                eval_partial(pair, x)


class TestInstanceFiles:
    def test_round_trip_minimal(self):
        u = named_universe(2)
        d = make_labeled_data(u, {pt(1, 0)}, {pt(0, 1)})
        assert parse_instance(serialize_instance(d)) == d

    def test_duplicate_across_labels_rejected(self):
        doc = {"vars": ["x1"], "A": [[1]], "B": [[1]]}
        with pytest.raises(OverlappingLabels):
            parse_instance(json.dumps(doc))

    def test_unknown_field_rejected(self):
        doc = {"vars": ["x1"], "A": [[1]], "B": [[0]], "extra": 1}
        with pytest.raises(ParseError):
            parse_instance(json.dumps(doc))

    def test_bad_bit_rejected(self):
        doc = {"vars": ["x1"], "A": [[2]], "B": [[0]]}
        with pytest.raises(ParseError):
            parse_instance(json.dumps(doc))

    def test_wrong_row_length_rejected(self):
        doc = {"vars": ["x1", "x2"], "A": [[1]], "B": [[0, 0]]}
        with pytest.raises(LengthMismatch):
            parse_instance(json.dumps(doc))

    def test_invalid_json_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("{not json")


@given(st.data())
def test_instance_round_trip_property(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    points = data.draw(
        st.sets(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=2),
    )
    points = sorted(points)
    split = data.draw(st.integers(min_value=1, max_value=len(points) - 1))
    u = named_universe(n)
    d = make_labeled_data(
        u,
        {Assignment(w, n) for w in points[:split]},
        {Assignment(w, n) for w in points[split:]},
    )
    assert parse_instance(serialize_instance(d)) == d
