from fractions import Fraction
from math import gcd

import pytest
from conftest import oracle_count
from hypothesis import given, settings
from hypothesis import strategies as st

from sievecycles import (
    CapacityError,
    count_by_sieve,
    count_generalized_meissel,
    count_legendre,
    count_meissel,
    count_periodic,
    count_strictly_below,
    distinct_prime_factors,
    euler_phi,
    exact_boundary,
    make_basis,
    make_prime_basis,
    phi_identity_check,
)

B3 = make_prime_basis(3)
B4 = make_prime_basis(4)


class TestExactBoundary:
    def test_decimal_and_fraction_spellings_agree(self):
        assert exact_boundary("52.5") == exact_boundary("105/2") == Fraction(105, 2)

    def test_plain_integers(self):
        assert exact_boundary("35") == exact_boundary(35) == 35

    def test_fraction_passthrough(self):
        assert exact_boundary(Fraction(7, 3)) == Fraction(7, 3)

    def test_reduces(self):
        b = exact_boundary("50/20")
        assert (b.numerator, b.denominator) == (5, 2)

    @pytest.mark.parametrize("bad", ["", "abc", "-3", "1.2.3", "3/", "/4", "1/-2", "1e3"])
    def test_malformed_strings(self, bad):
        with pytest.raises(ValueError):
            exact_boundary(bad)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            exact_boundary("3/0")

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            exact_boundary(52.5)

    def test_bool_refused(self):
        with pytest.raises(TypeError):
            exact_boundary(True)

    def test_negative_refused(self):
        with pytest.raises(ValueError):
            exact_boundary(Fraction(-1, 2))


class TestSieveOracle:
    def test_first_interval_of_four_primes(self):
        assert count_by_sieve(B4, 35).value == 8

    def test_empty_range(self):
        assert count_by_sieve(B4, 0).value == 0
        assert count_by_sieve(B4, "0.9").value == 0

    def test_half_integer_boundary(self):
        assert count_by_sieve(B4, "52.5").value == 12

    def test_cap(self):
        with pytest.raises(CapacityError):
            count_by_sieve(B4, 10**9, cap=10**6)

    def test_method_tag(self):
        assert count_by_sieve(B4, 10).method == "oracle"


class TestLegendre:
    def test_full_wave(self):
        assert count_legendre(B4, 210).value == 48

    def test_empty_basis_floor(self):
        assert count_legendre(make_prime_basis(0), "17.3").value == 17

    def test_ten_prime_wave(self):
        basis = make_prime_basis(10)
        assert count_legendre(basis, 6469693230).value == 1021870080

    def test_matches_oracle_at_awkward_boundaries(self):
        for x in ("0", "1", "6/7", "29", "30", "209", "210", "1050.5"):
            assert count_legendre(B3, x).value == oracle_count((2, 3, 5), Fraction(exact_boundary(x)))


class TestMeissel:
    def test_two_waves_of_six(self):
        assert count_meissel(B4, 70).value == 16

    def test_single_modulus(self):
        assert count_meissel(make_basis([2]), 9).value == 5  # 1,3,5,7,9

    def test_three_intervals(self):
        assert count_meissel(B4, 105).value == 24

    def test_recursion_identity(self):
        x = Fraction(421, 3)
        rest = B4.without(7)
        assert count_meissel(B4, x).value == (
            count_meissel(rest, x).value - count_meissel(rest, x / 7).value)


class TestGeneralizedMeissel:
    def test_drop_middle_modulus(self):
        assert count_generalized_meissel(B4, 5, "52.5").value == 12
        # the two sides of the peel, frozen from the trial-division oracle
        rest = B4.without(5)
        assert count_meissel(rest, "52.5").value == 14
        assert count_meissel(rest, "10.5").value == 2

    def test_drop_largest_agrees(self):
        assert count_generalized_meissel(B4, 7, 210).value == 48

    def test_drop_smallest(self):
        assert count_generalized_meissel(B3, 2, 30).value == 8

    def test_every_drop_choice(self):
        for drop in B4:
            assert count_generalized_meissel(B4, drop, "1234/7").value == \
                count_meissel(B4, "1234/7").value

    def test_absent_drop_rejected(self):
        with pytest.raises(ValueError):
            count_generalized_meissel(B4, 11, 100)


class TestPeriodicReduction:
    def test_two_full_waves(self):
        assert count_periodic(B4, 420).value == 96

    def test_wave_plus_fragment(self):
        assert count_periodic(B4, 245).value == oracle_count((2, 3, 5, 7), 245) == 56

    def test_near_wave_end(self):
        # 209 = 7 * 30 - 1 lands one short of a wave boundary; 209 itself
        # survives, so the count is a full 7 * 8 with nothing removed.
        assert count_periodic(B3, 209).value == oracle_count((2, 3, 5), 209) == 56

    def test_huge_argument(self):
        k = 10**30
        assert count_periodic(B4, k * 210 + 35).value == k * 48 + 8


@st.composite
def basis_and_boundary(draw):
    moduli = draw(st.sampled_from([
        (), (2,), (2, 3), (2, 3, 5), (2, 3, 5, 7), (3, 5, 7), (5, 11),
        (2, 3, 5, 7, 11, 13), (20, 2783), (4, 9, 25), (6, 35),
    ]))
    den = draw(st.sampled_from([1, 2, 3, 4, 5, 7, 10]))
    num = draw(st.integers(0, 2000 * den))
    return moduli, Fraction(num, den)


@settings(max_examples=60, deadline=None)
@given(basis_and_boundary())
def test_all_methods_agree_with_oracle(case):
    moduli, x = case
    basis = make_basis(moduli) if moduli else make_prime_basis(0)
    expected = oracle_count(moduli, x)
    assert count_by_sieve(basis, x).value == expected
    assert count_legendre(basis, x).value == expected
    assert count_meissel(basis, x).value == expected
    assert count_periodic(basis, x).value == expected
    for drop in moduli:
        assert count_generalized_meissel(basis, drop, x).value == expected


@given(st.integers(0, 5000))
def test_unit_steps(x):
    step = count_legendre(B3, x + 1).value - count_legendre(B3, x).value
    assert step == (1 if (x + 1) % 2 and (x + 1) % 3 and (x + 1) % 5 else 0)


@settings(max_examples=40, deadline=None)
@given(basis_and_boundary(), st.integers(0, 6))
def test_period_shift_law(case, k):
    moduli, x = case
    basis = make_basis(moduli) if moduli else make_prime_basis(0)
    assert count_legendre(basis, k * basis.period + x).value == \
        k * basis.survivor_count + count_legendre(basis, x).value


class TestReflection:
    def test_strict_count_drops_survivor_boundary(self):
        assert count_strictly_below(B3, 7) == 1   # only 1 below 7
        assert count_legendre(B3, 7).value == 2   # 1 and 7
        assert count_strictly_below(B3, Fraction(15, 2)) == 2  # non-integer: same as f

    def test_corrected_law_where_literal_form_fails(self):
        # basis {2}, x = 1: the survivor boundary that breaks the naive
        # minus rule (1 - f(1) = 0, yet f(2 - 1) = 1).
        basis = make_basis([2])
        assert count_legendre(basis, 1).value == 1
        assert count_strictly_below(basis, 1) == 0
        assert count_legendre(basis, 2 - 1).value == \
            basis.survivor_count - count_strictly_below(basis, 1)

    @settings(max_examples=60, deadline=None)
    @given(basis_and_boundary())
    def test_corrected_law_randomized(self, case):
        moduli, x = case
        if not moduli:
            return  # 0 survives only the empty basis; law scoped to nonempty
        basis = make_basis(moduli)
        period = basis.period
        x = x % period if x % period != 0 else Fraction(period)
        assert count_legendre(basis, period - x).value == \
            basis.survivor_count - count_strictly_below(basis, x)

    def test_non_survivor_boundaries_match_naive_form(self):
        # where x is not a survivor the literal minus rule already works
        for x in (4, 6, 10, Fraction(15, 2)):
            assert count_legendre(B3, 30 - x).value == \
                8 - count_legendre(B3, x).value


class TestEulerPhi:
    def test_primorial(self):
        assert euler_phi(210) == 48

    def test_one(self):
        assert euler_phi(1) == 1

    def test_composite_with_square_factors(self):
        # 55660 = 2^2 * 5 * 11^2 * 23
        brute = sum(1 for k in range(1, 55661) if gcd(k, 55660) == 1)
        assert euler_phi(55660) == brute == 19360

    def test_cap(self):
        with pytest.raises(CapacityError):
            euler_phi(10**13)

    def test_non_positive(self):
        with pytest.raises(ValueError):
            euler_phi(0)

    def test_distinct_prime_factors(self):
        assert distinct_prime_factors(55660) == (2, 5, 11, 23)
        assert distinct_prime_factors(1) == ()
        assert distinct_prime_factors(97) == (97,)


class TestPhiIdentity:
    def test_primorial_bridge(self):
        assert phi_identity_check(210)

    def test_one(self):
        assert phi_identity_check(1)

    def test_first_five_hundred(self):
        assert all(phi_identity_check(x) for x in range(1, 501))
