"""Small integer helpers shared by the group and field machinery.

Everything here is exact integer arithmetic; nothing imports numpy.
"""
from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid far beyond 2**64
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a tuple of (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d = 7
    # wheel mod 30 over 7, 11, 13, 17, 19, 23, 29, 31, ...
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += steps[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, sorted ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a in (Z/modulus)*; a must be coprime to modulus."""
    if math.gcd(a, modulus) != 1:
        raise ValueError("element not invertible")
    return _order_dividing(a, modulus, _carmichael(modulus))


def _carmichael(n: int) -> int:
    lam = 1
    for p, e in factorize(n):
        if p == 2 and e >= 3:
            block = 2 ** (e - 2)
        else:
            block = p ** (e - 1) * (p - 1)
        lam = lam * block // math.gcd(lam, block)
    return lam


def _order_dividing(a: int, modulus: int, bound: int) -> int:
    order = bound
    for p in prime_factors(bound):
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order
