"""Exact integer primitives shared by every other module.

Everything here is pure, allocation-light, and exact: these functions sit
in the inner loops of scans over millions of radicands, so no floating
point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Deterministic Miller-Rabin witness set, proven complete for all
# n < 3.317e24 (covers the 64-bit scan scope with a wide margin).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SIEVE_BLOCK = 1 << 16


def isqrt(n: int) -> int:
    """Floor of the square root; exact for arbitrary-precision n >= 0."""
    if n < 0:
        raise ValueError("isqrt of negative integer")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n >= 1; completely multiplicative in n."""
    if n < 1:
        raise ValueError("kronecker requires n >= 1")
    result = 1
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a|n) for the remaining odd n, by reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid through 64 bits)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _icbrt(n: int) -> int:
    if n < 0:
        raise ValueError
    c = round(n ** (1.0 / 3.0)) if n else 0
    while c > 0 and c * c * c > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides n (n >= 1).

    Trial-divides by all d up to the cube root; the surviving cofactor has
    at most two prime factors, so it is squarefree unless it is a perfect
    square.  Keeps family scans with D around 1e11 cheap.
    """
    if n < 1:
        raise ValueError("is_squarefree requires n >= 1")
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    c = _icbrt(n)
    d = 3
    while d <= c:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        d += 2
    return not (n > 1 and is_square(n))


def primes_upto(n: int) -> list[int]:
    """All primes <= n by a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(n + 1) if sieve[i]]


@dataclass(frozen=True)
class PrimeRange:
    """Exactly the primes in [lo, hi], strictly increasing."""

    lo: int
    hi: int
    primes: tuple[int, ...]


def primes_between(lo: int, hi: int) -> PrimeRange:
    """Segmented sieve over [lo, hi]."""
    if lo > hi:
        raise ValueError("primes_between requires lo <= hi")
    lo_eff = max(lo, 2)
    if lo_eff > hi:
        return PrimeRange(lo, hi, ())
    base = primes_upto(math.isqrt(hi))
    out: list[int] = []
    start = lo_eff
    while start <= hi:
        end = min(start + _SIEVE_BLOCK - 1, hi)
        size = end - start + 1
        block = bytearray([1]) * size
        for p in base:
            if p * p > end:
                break
            # base primes survive: striking starts at p*p
            first = max(p * p, ((start + p - 1) // p) * p)
            block[first - start :: p] = bytearray(len(range(first, end + 1, p)))
        out.extend(start + i for i in range(size) if block[i])
        start = end + 1
    return PrimeRange(lo, hi, tuple(out))


def first_primes(count: int) -> list[int]:
    """The first `count` primes (p_1 = 2)."""
    if count <= 0:
        return []
    if count < 6:
        return [2, 3, 5, 7, 11][:count]
    # Rosser-type upper bound p_m < m (log m + log log m) for m >= 6
    m = float(count)
    bound = int(m * (math.log(m) + math.log(math.log(m)))) + 10
    primes = primes_upto(bound)
    while len(primes) < count:
        bound = bound * 3 // 2
        primes = primes_upto(bound)
    return primes[:count]
