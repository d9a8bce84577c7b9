import pytest
from hypothesis import given, strategies as st

from oracles import legendre_table
from surdcf.kernel import (
    first_primes,
    is_prime,
    is_square,
    is_squarefree,
    isqrt,
    kronecker,
    primes_between,
    primes_upto,
)


class TestIsqrt:
    def test_boundary(self):
        assert isqrt(0) == 0

    def test_spec_values(self):
        assert isqrt(34) == 5
        assert isqrt(10**40) == 10**20

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    @given(st.integers(0, 10**12))
    def test_bracketing(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


class TestKronecker:
    def test_spec_values(self):
        assert kronecker(5, 11) == 1
        assert kronecker(12, 12) == 0

    @given(st.integers(-10**6, 10**6))
    def test_n_equals_one(self, a):
        assert kronecker(a, 1) == 1

    def test_matches_legendre_oracle(self):
        # quadratic-residue brute force for every odd prime below 10^4
        for p in primes_upto(10**4):
            if p == 2:
                continue
            table = legendre_table(p)
            for a in range(p):
                assert kronecker(a, p) == table[a], (a, p)

    @given(st.integers(-10**9, 10**9), st.integers(1, 10**4), st.integers(1, 10**4))
    def test_multiplicative_in_bottom(self, a, m, n):
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            kronecker(3, 0)


class TestIsPrime:
    def test_small(self):
        assert is_prime(7)
        assert not is_prime(1)
        assert is_prime(2)
        assert not is_prime(0)

    def test_mersenne(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**61 - 1) * 3)

    def test_agrees_with_sieve(self):
        sieve = set(primes_upto(10**5))
        for n in range(10**5 + 1):
            assert is_prime(n) == (n in sieve), n

    @given(st.integers(2, 10**6), st.integers(2, 10**6))
    def test_composites_rejected(self, a, b):
        assert not is_prime(a * b)


class TestIsSquarefree:
    def test_spec_values(self):
        assert is_squarefree(34)
        assert not is_squarefree(8)
        assert is_squarefree(6)

    def test_agrees_with_naive(self):
        for n in range(1, 5000):
            naive = all(n % (d * d) for d in range(2, isqrt(n) + 1))
            assert is_squarefree(n) == naive, n

    @given(st.integers(1, 10**6), st.integers(2, 10**4))
    def test_square_multiples(self, n, d):
        assert not is_squarefree(n * d * d)


class TestPrimesBetween:
    def test_spec_values(self):
        assert primes_between(1, 10).primes == (2, 3, 5, 7)
        assert primes_between(90, 100).primes == (97,)

    def test_pi_of_1e6(self):
        assert len(primes_between(1, 10**6).primes) == 78498

    def test_block_boundaries(self):
        lo, hi = (1 << 16) - 50, (1 << 16) + 50
        expect = tuple(p for p in primes_upto(hi) if p >= lo)
        assert primes_between(lo, hi).primes == expect

    def test_bad_range(self):
        with pytest.raises(ValueError):
            primes_between(10, 5)


class TestFirstPrimes:
    def test_small(self):
        assert first_primes(7) == [2, 3, 5, 7, 11, 13, 17]

    def test_p_10000(self):
        assert first_primes(10**4)[-1] == 104729


def test_is_square():
    assert is_square(0) and is_square(49) and not is_square(50)
    assert not is_square(-4)
