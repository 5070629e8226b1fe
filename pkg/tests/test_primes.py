import math

import pytest
from hypothesis import given, strategies as st

from fdiff.primes import iroot, is_prime, prime_divisors, primes_in_range, small_primes


def trial_division(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def test_is_prime_matches_trial_division_below_20000():
    assert [n for n in range(-5, 20000) if is_prime(n)] == [n for n in range(-5, 20000) if trial_division(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),  # Mersenne prime
        (2**62 - 57, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (318665857834031151167461, False),  # strong pseudoprime to bases up to 37
        (1000000007 * 998244353, False),
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


@given(st.integers(0, 10**6), st.integers(0, 3000))
def test_segmented_sieve_matches_miller_rabin(lo, width):
    assert primes_in_range(lo, lo + width) == [n for n in range(lo, lo + width + 1) if is_prime(n)]


def test_segmented_sieve_small_segments():
    assert primes_in_range(1, 5000, segment=97) == small_primes(5000)


def test_sieve_near_the_top_of_the_range():
    top = 2**62
    got = primes_in_range(top - 200, top)
    assert got == [n for n in range(top - 200, top + 1) if is_prime(n)]
    assert got  # there are primes within 200 of 2**62


@given(st.integers(0, 2**130), st.integers(1, 7))
def test_iroot_is_floor_root(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


@pytest.mark.parametrize("m, expected", [(1, []), (4, [2]), (60, [2, 3, 5]), (97, [97]), (2 * 3 * 101, [2, 3, 101])])
def test_prime_divisors(m, expected):
    assert prime_divisors(m) == expected
