import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multcorr import (
    MAX_INPUT,
    PrimeSet,
    ShiftSet,
    exceptional_primes,
    is_prime,
    liouville,
    omega,
    primes_from,
    shifted_sign,
)

from oracles import omega_oracle, primes_upto, shifted_sign_oracle, sign_oracle

SMALL_PRIMES = primes_upto(50)

prime_sets = st.sets(st.sampled_from(SMALL_PRIMES), max_size=6).map(PrimeSet)
shift_sets = st.sets(st.integers(0, 20), max_size=4).map(ShiftSet)


def test_is_prime_agrees_with_sieve():
    table = set(primes_upto(2000))
    for n in range(2000):
        assert is_prime(n) == (n in table)


def test_primes_from_is_strictly_above_start():
    gen = primes_from(10)
    assert [next(gen) for _ in range(3)] == [11, 13, 17]
    assert next(primes_from(1)) == 2
    assert next(primes_from(13)) == 17


class TestPrimeSet:
    def test_sorts_input(self):
        assert PrimeSet([5, 2, 3]).primes == (2, 3, 5)

    def test_empty_allowed(self):
        assert len(PrimeSet()) == 0

    def test_rejects_composite(self):
        with pytest.raises(ValueError, match="not prime"):
            PrimeSet([2, 9])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            PrimeSet([3, 3])

    def test_symmetric_difference(self):
        a, b = PrimeSet([2, 3]), PrimeSet([3, 5])
        assert a.symmetric_difference(b) == PrimeSet([2, 5])


class TestShiftSet:
    def test_sorts_input(self):
        assert ShiftSet([6, 0, 4]).shifts == (0, 4, 6)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            ShiftSet([1, 1])

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="negative"):
            ShiftSet([-1, 2])

    def test_differences(self):
        d = ShiftSet([0, 4, 6]).differences()
        assert d.diffs == (2, 4, 6)
        assert all(x <= 6 for x in d)

    def test_differences_empty_for_singleton(self):
        assert len(ShiftSet([7]).differences()) == 0
        assert len(ShiftSet().differences()) == 0


class TestOmega:
    def test_examples(self):
        assert omega(PrimeSet([2, 3]), 12) == 3
        assert omega(PrimeSet(), 10**6) == 0
        value = omega(PrimeSet([3]), 54)
        assert value == omega_oracle([3], 54) == 3

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            omega(PrimeSet([2]), 0)
        with pytest.raises(ValueError):
            omega(PrimeSet([2]), -5)

    def test_rejects_overwide(self):
        with pytest.raises(ValueError):
            omega(PrimeSet([2]), MAX_INPUT + 1)

    @given(prime_sets, st.integers(1, 10**4))
    def test_matches_factorization_oracle(self, pset, n):
        assert omega(pset, n) == omega_oracle(pset, n)

    @given(prime_sets, st.integers(1, 10**6))
    def test_bounded_by_log2(self, pset, n):
        assert omega(pset, n) <= math.log2(n) + 1e-9


class TestLiouville:
    def test_examples(self):
        assert liouville(PrimeSet(primes_upto(50)), 8) == -1
        assert liouville(PrimeSet([2]), 9) == 1
        value = liouville(PrimeSet([2, 5]), 40)
        assert value == sign_oracle([2, 5], 40) == 1

    @given(prime_sets, st.integers(1, 10**4), st.integers(1, 10**4))
    def test_completely_multiplicative(self, pset, m, n):
        assert liouville(pset, m * n) == liouville(pset, m) * liouville(pset, n)

    @given(prime_sets, prime_sets, st.integers(1, 10**4))
    def test_symmetric_difference_group_law(self, p1, p2, n):
        assert liouville(p1.symmetric_difference(p2), n) == liouville(p1, n) * liouville(p2, n)


class TestShiftedSign:
    def test_examples(self):
        assert shifted_sign(PrimeSet([2]), ShiftSet([0, 1]), 2) == -1
        assert shifted_sign(PrimeSet([2, 7]), ShiftSet(), 123) == 1
        value = shifted_sign(PrimeSet([3]), ShiftSet([1, 2]), 7)
        assert value == shifted_sign_oracle([3], [1, 2], 7) == 1

    def test_rejects_shifted_overflow(self):
        with pytest.raises(ValueError):
            shifted_sign(PrimeSet([2]), ShiftSet([0, 10]), MAX_INPUT - 5)

    @given(prime_sets, shift_sets, st.integers(1, 10**4))
    def test_matches_oracle(self, pset, shifts, n):
        assert shifted_sign(pset, shifts, n) == shifted_sign_oracle(pset, shifts, n)

    @given(prime_sets, prime_sets, shift_sets, shift_sets, st.integers(1, 10**4))
    def test_four_corner_group_law(self, p1, p2, h1, h2, n):
        lhs = shifted_sign(p1.symmetric_difference(p2), h1.symmetric_difference(h2), n)
        rhs = (
            shifted_sign(p1, h1, n)
            * shifted_sign(p1, h2, n)
            * shifted_sign(p2, h1, n)
            * shifted_sign(p2, h2, n)
        )
        assert lhs == rhs


class TestExceptionalPrimes:
    def test_examples(self):
        assert exceptional_primes(ShiftSet([0, 4, 6])) == PrimeSet([2, 3])
        assert exceptional_primes(ShiftSet([0, 1])) == PrimeSet()
        assert exceptional_primes(ShiftSet([0, 6, 10, 15])) == PrimeSet([2, 3, 5])

    def test_empty_for_small_sets(self):
        assert exceptional_primes(ShiftSet()) == PrimeSet()
        assert exceptional_primes(ShiftSet([9])) == PrimeSet()

    @given(shift_sets)
    def test_members_divide_some_difference(self, shifts):
        diffs = list(shifts.differences())
        for p in exceptional_primes(shifts):
            assert any(d % p == 0 for d in diffs)
