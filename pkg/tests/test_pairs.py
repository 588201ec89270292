import pytest
from conftest import oracle_centers
from hypothesis import given, settings
from hypothesis import strategies as st

from sievecycles import (
    CapacityError,
    PairSpec,
    enumerate_pair_centers,
    is_survivor,
    make_basis,
    make_prime_basis,
    pair_count,
)

B3 = make_prime_basis(3)
B4 = make_prime_basis(4)

TWIN4_CENTERS = (12, 18, 30, 42, 60, 72, 102, 108, 138, 150, 168, 180, 192, 198, 210)


class TestPairCount:
    def test_twins_four_primes(self):
        census = pair_count(B4, PairSpec(1, 1))
        assert census.predicted_count == 15  # (5-2)(7-2)
        assert [(f.modulus, f.forbidden_count, f.factor)
                for f in census.per_modulus_factors] == \
            [(2, 1, 1), (3, 2, 1), (5, 2, 3), (7, 2, 5)]

    def test_twins_three_primes(self):
        assert pair_count(B3, PairSpec(1, 1)).predicted_count == 3

    def test_offset_two(self):
        assert pair_count(B4, PairSpec(2, 2)).predicted_count == 15

    def test_offset_three_merges_at_three(self):
        # 3 + 3 = 0 (mod 3), so that modulus contributes 3 - 1 instead of 3 - 2
        census = pair_count(B4, PairSpec(3, 3))
        assert census.predicted_count == 30
        factors = {f.modulus: f.factor for f in census.per_modulus_factors}
        assert factors[3] == 2

    def test_zero_offsets_give_plain_survivors(self):
        assert pair_count(B4, PairSpec(0, 0)).predicted_count == 48

    def test_empty_basis(self):
        assert pair_count(make_prime_basis(0), PairSpec(1, 1)).predicted_count == 1

    def test_negative_offsets_rejected(self):
        with pytest.raises(ValueError):
            PairSpec(-1, 2)


class TestEnumerateCenters:
    def test_three_prime_twins(self):
        assert enumerate_pair_centers(B3, PairSpec(1, 1)) == (12, 18, 30)

    def test_four_prime_twins_verbatim(self):
        assert enumerate_pair_centers(B4, PairSpec(1, 1)) == TWIN4_CENTERS

    def test_offset_two_examples(self):
        centers = enumerate_pair_centers(B4, PairSpec(2, 2))
        # the pairs (19,23), (67,71), (139,143) sit around these centers
        assert {21, 69, 141} <= set(centers)
        assert len(centers) == 15

    def test_offset_three_examples(self):
        centers = enumerate_pair_centers(B4, PairSpec(3, 3))
        # (31,37), (47,53), (61,67)
        assert {34, 50, 64} <= set(centers)
        assert len(centers) == 30

    def test_wraparound_membership(self):
        # 210 is a center: 209 survives and 211 = 210 + 1 survives
        assert 210 in enumerate_pair_centers(B4, PairSpec(1, 1))
        assert is_survivor(B4, 209) and is_survivor(B4, 211)

    def test_capacity_cap(self):
        with pytest.raises(CapacityError):
            enumerate_pair_centers(make_prime_basis(12), PairSpec(1, 1))

    def test_matches_independent_oracle(self):
        for moduli, a, b in [((2, 3, 5), 1, 1), ((2, 3, 5, 7), 4, 10),
                             ((4, 9, 25), 3, 7), ((20, 2783), 1, 1)]:
            got = enumerate_pair_centers(make_basis(moduli), PairSpec(a, b))
            assert list(got) == oracle_centers(moduli, a, b)


BASES = st.sampled_from([
    (2,), (3,), (2, 3), (2, 3, 5), (2, 3, 5, 7), (3, 5, 7),
    (2, 3, 5, 7, 11), (4, 9, 25), (6, 35),
])


@settings(max_examples=60, deadline=None)
@given(BASES, st.integers(0, 50), st.integers(0, 50))
def test_census_matches_enumeration(moduli, a, b):
    basis = make_basis(moduli)
    spec = PairSpec(a, b)
    centers = enumerate_pair_centers(basis, spec)
    assert len(centers) == pair_count(basis, spec).predicted_count


@given(BASES, st.integers(0, 30), st.integers(0, 30))
def test_per_modulus_factor_rule(moduli, a, b):
    census = pair_count(make_basis(moduli), PairSpec(a, b))
    for f in census.per_modulus_factors:
        if (a + b) % f.modulus == 0:
            assert f.factor == f.modulus - 1
        else:
            assert f.factor == f.modulus - 2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 2000), st.integers(0, 4))
def test_center_predicate_is_periodic(a, b, x, k):
    period = B3.period
    centers = set(enumerate_pair_centers(B3, PairSpec(a, b)))
    x += a  # keep x - a non-negative
    direct = is_survivor(B3, x - a) and is_survivor(B3, x + b)
    folded = (x - 1) % period + 1
    assert direct == (folded in centers)
    shifted = (x + k * period - 1) % period + 1
    assert folded == shifted


@given(BASES, st.integers(0, 30), st.integers(0, 30))
def test_mirror_swaps_offsets(moduli, a, b):
    basis = make_basis(moduli)
    period = basis.period
    forward = set(enumerate_pair_centers(basis, PairSpec(a, b)))
    backward = set(enumerate_pair_centers(basis, PairSpec(b, a)))
    assert {period - x if x < period else period for x in forward} == backward


def test_twin_product_over_odd_moduli():
    for n in range(1, 8):
        basis = make_prime_basis(n)
        predicted = pair_count(basis, PairSpec(1, 1)).predicted_count
        expected = 1
        for p in basis:
            if p != 2:
                expected *= p - 2
        assert predicted == expected
