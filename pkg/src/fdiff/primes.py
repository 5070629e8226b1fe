"""Exact primality and integer-root helpers.

Everything here is deterministic: Miller-Rabin uses a fixed witness set that
is proven correct for all n < 3.3e24, which covers the 64-bit working range.
"""

from __future__ import annotations

import math

# Deterministic for n < 3,317,044,064,679,887,385,961,981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = _MR_BASES

# Above this bound on sqrt(hi), per-number testing beats building base primes.
_SIEVE_ROOT_LIMIT = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def small_primes(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_in_range(lo: int, hi: int, segment: int = 1 << 18) -> list[int]:
    """Primes p with lo <= p <= hi, ascending (segmented sieve)."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    root = math.isqrt(hi)
    if root > _SIEVE_ROOT_LIMIT and hi - lo < root:
        return [n for n in range(lo, hi + 1) if is_prime(n)]
    base = small_primes(root)
    out: list[int] = []
    start = lo
    while start <= hi:
        stop = min(start + segment - 1, hi)
        seg = bytearray([1]) * (stop - start + 1)
        for p in base:
            first = max(p * p, (start + p - 1) // p * p)
            if first > stop:
                continue
            seg[first - start :: p] = bytes(len(range(first, stop + 1, p)))
        out.extend(start + i for i, flag in enumerate(seg) if flag)
        start = stop + 1
    return out


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, exact."""
    if n < 0:
        raise ValueError("iroot needs n >= 0")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def prime_divisors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out
