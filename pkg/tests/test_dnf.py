"""DNF forms: evaluation, size measures, pair compatibility, prime implicants."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from boolsep import (
    Assignment,
    DnfForm,
    IndexOutOfRange,
    Term,
    dnf_depth,
    dnf_length,
    dnf_pair_noncontradictory,
    eval_dnf,
    named_universe,
    prime_implicants,
)
from boolsep.dnf import dnf_from_obj, dnf_to_obj
from helpers import brute_primes, overlap_exhaustive, random_dnf, random_onset, term_to_masks


def pt(*bits):
    return Assignment.from_bits(bits)


def form(*terms):
    return DnfForm(frozenset(Term(frozenset(p), frozenset(n)) for p, n in terms))


def test_term_rejects_clashing_literals():
    with pytest.raises(ValueError):
        Term(frozenset({1}), frozenset({1}))


class TestEval:
    def test_mixed_term(self):
        theta = form(({0}, {1}))
        assert eval_dnf(theta, pt(1, 0)) == 1
        assert eval_dnf(theta, pt(1, 1)) == 0

    def test_empty_form_is_constant_zero(self):
        assert eval_dnf(form(), pt(0)) == 0
        assert eval_dnf(form(), pt(1)) == 0

    def test_empty_term_is_constant_one(self):
        theta = form((set(), set()))
        assert eval_dnf(theta, pt(0, 0)) == 1
        assert eval_dnf(theta, pt(1, 1)) == 1

    def test_index_out_of_range(self):
        theta = form(({3}, set()))
        with pytest.raises(IndexOutOfRange):
            eval_dnf(theta, pt(0, 1))


class TestSizes:
    def test_length_and_depth(self):
        theta = form(({1}, {2}), ({3}, set()))
        assert dnf_length(theta) == 3
        assert dnf_depth(theta) == 2

    def test_empty_form_conventions(self):
        assert dnf_length(form()) == 0
        assert dnf_depth(form()) == 0
        assert dnf_depth(form((set(), set()))) == 0

    def test_all_negated_term(self):
        theta = form((set(), {0, 1}))
        assert dnf_length(theta) == 2
        assert dnf_depth(theta) == 2


class TestNoncontradictory:
    def test_opposite_literals(self):
        assert dnf_pair_noncontradictory(form(({0}, set())), form((set(), {0})))

    def test_independent_literals_overlap(self):
        assert not dnf_pair_noncontradictory(form(({0}, set())), form(({1}, set())))

    def test_agrees_with_exhaustive_sweep(self):
        rng = random.Random(99)
        width = 10
        for _ in range(150):
            theta = random_dnf(rng, width)
            theta_prime = random_dnf(rng, width)
            fast = dnf_pair_noncontradictory(theta, theta_prime)
            slow = not overlap_exhaustive(theta, theta_prime, width)
            assert fast == slow


class TestPrimeImplicants:
    def test_adjacent_pair_merges(self):
        u = named_universe(2)
        got = prime_implicants(u, {pt(1, 1), pt(1, 0)})
        assert got == frozenset({Term(frozenset({0}), frozenset())})

    def test_isolated_points_stay_minterms(self):
        u = named_universe(2)
        got = prime_implicants(u, {pt(1, 0), pt(0, 1)})
        assert got == frozenset(
            {
                Term(frozenset({0}), frozenset({1})),
                Term(frozenset({1}), frozenset({0})),
            }
        )

    def test_full_space_gives_empty_term(self):
        u = named_universe(1)
        got = prime_implicants(u, {pt(0), pt(1)})
        assert got == frozenset({Term(frozenset(), frozenset())})

    def test_rejects_empty_on_set(self):
        with pytest.raises(ValueError):
            prime_implicants(named_universe(2), set())

    @pytest.mark.parametrize("width", [3, 4, 6, 8])
    def test_matches_brute_force(self, width):
        rng = random.Random(width)
        for _ in range(12):
            on = random_onset(rng, width, p=rng.uniform(0.2, 0.9))
            if not on:
                continue
            got = {term_to_masks(t) for t in prime_implicants(named_universe(width), on)}
            assert got == brute_primes(width, {x.word for x in on})

    def test_covers_and_stays_inside_on_set(self):
        rng = random.Random(3)
        width = 5
        for _ in range(20):
            on = random_onset(rng, width, p=0.4)
            if not on:
                continue
            words = {x.word for x in on}
            covered = set()
            for t in prime_implicants(named_universe(width), on):
                pos, neg = term_to_masks(t)
                sats = {w for w in range(1 << width) if (w & pos) == pos and not w & neg}
                assert sats <= words
                covered |= sats
            assert covered == words


@settings(max_examples=60)
@given(st.data())
def test_noncontradictory_equivalence_property(data):
    width = data.draw(st.integers(min_value=1, max_value=5))
    rng = random.Random(data.draw(st.integers(min_value=0, max_value=10**6)))
    theta = random_dnf(rng, width)
    theta_prime = random_dnf(rng, width)
    assert dnf_pair_noncontradictory(theta, theta_prime) == (
        not overlap_exhaustive(theta, theta_prime, width)
    )


def test_solution_obj_round_trip():
    u = named_universe(3)
    theta = form(({0}, {2}), ({1}, set()))
    obj = dnf_to_obj(theta, u)
    assert obj["family"] == "dnf"
    assert dnf_from_obj(obj, u) == theta
