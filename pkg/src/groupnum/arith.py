"""Number-theoretic primitives: factorization, phi, psi, multiplicative order.

Everything works on exact Python integers, so there is no overflow to guard
against; psi values in particular grow far past 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "spf_sieve",
    "factorize_range",
    "euler_phi",
    "psi_prime_power",
    "psi",
    "multiplicative_order",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here stay well under 10^9."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """An integer as an ordered product of prime powers.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes and exponents >= 1; the empty tuple represents 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"factorization requires n >= 1, got {self.n}")
        prod = 1
        prev = 0
        for p, a in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if a < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
            prod *= p**a
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, a in self.factors:
            if q == p:
                return a
        return 0

    def is_square_free(self) -> bool:
        return all(a == 1 for _, a in self.factors)

    def is_cube_free(self) -> bool:
        return all(a <= 2 for _, a in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division; factorize(1) has no factors."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    m = n
    factors = []
    for p in (2, 3):
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
    d = 5
    while d <= isqrt(m):
        # wheel over 6k +- 1
        for p in (d, d + 2):
            if m % p == 0:
                a = 0
                while m % p == 0:
                    m //= p
                    a += 1
                factors.append((p, a))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p * p :: p][spf[p * p :: p] == 0] = p
    untouched = np.flatnonzero(spf == 0)
    spf[untouched] = untouched  # primes (and 0, 1 map to themselves)
    spf[:2] = 0
    return spf


def factorize_range(lo: int, hi: int):
    """Yield (n, Factorization) for lo <= n <= hi using one shared sieve."""
    if lo < 1:
        raise ValueError("range must start at 1 or above")
    spf = spf_sieve(hi)
    for n in range(lo, hi + 1):
        m = n
        factors = []
        while m > 1:
            p = int(spf[m])
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        yield n, Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    """Euler's totient via the factorization of n."""
    return phi_of(factorize(n))


def phi_of(f: Factorization) -> int:
    out = 1
    for p, a in f.factors:
        out *= p ** (a - 1) * (p - 1)
    return out


def psi_prime_power(p: int, k: int) -> int:
    """(p^k - 1)(p^{k-1} - 1) ... (p - 1); rejects k = 0."""
    if k < 1:
        raise ValueError("psi is defined on prime powers with exponent >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1
    q = p
    for _ in range(k):
        out *= q - 1
        q *= p
    return out


def psi(n: int) -> int:
    """The psi function extended multiplicatively over the factorization.

    psi is defined on prime powers; on composite n we take the product of
    the prime-power values, and psi(1) is the empty product 1.
    """
    out = 1
    for p, a in factorize(n).factors:
        out *= psi_prime_power(p, a)
    return out


def multiplicative_order(q: int, m: int) -> int:
    """Least v >= 1 with q^v = 1 (mod m); requires gcd(q, m) = 1 and m >= 2."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if gcd(q, m) != 1:
        raise ValueError(f"{q} is not a unit mod {m}")
    v = 1
    x = q % m
    while x != 1:
        x = (x * q) % m
        v += 1
    return v
