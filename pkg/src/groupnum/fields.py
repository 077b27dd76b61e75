"""GF(q^v) arithmetic on integer-indexed polynomial representatives.

Element i encodes the polynomial with base-q digits of i as coefficients
(digit of q^k = coefficient of x^k), reduced modulo the lexicographically
least monic irreducible of degree v.  Everything is table-driven so the
skew-product constructor can treat field operations as index permutations.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .arith import is_prime

__all__ = ["PrimePowerField", "field", "least_irreducible_tail"]


def _poly_divmod(num: list[int], den: list[int], q: int):
    """Polynomial division over GF(q); coefficients ascending, den monic."""
    num = list(num)
    dden = len(den) - 1
    while len(num) - 1 >= dden and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dden:
            break
        coef = num[-1]
        shift = len(num) - 1 - dden
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % q
    while num and num[-1] == 0:
        num.pop()
    return num  # remainder


def _is_irreducible(poly: list[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail_index in range(q**d):
            den = _digits(tail_index, q, d) + [1]
            if not _poly_divmod(poly, den, q):
                return False
    return True


def _digits(index: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(index % q)
        index //= q
    return out


def least_irreducible_tail(q: int, v: int) -> tuple[int, ...]:
    """Low coefficients (c_0..c_{v-1}) of the least monic irreducible x^v + sum c_i x^i."""
    for tail_index in range(q**v):
        tail = _digits(tail_index, q, v)
        if _is_irreducible(tail + [1], q):
            return tuple(tail)
    raise AssertionError(f"no irreducible of degree {v} over GF({q})")


class PrimePowerField:
    """GF(q^v) with add/mul lookup tables on indices 0..q^v-1."""

    def __init__(self, q: int, v: int):
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        if v < 1:
            raise ValueError("extension degree must be >= 1")
        self.q = q
        self.v = v
        self.size = q**v
        self.modulus_tail = least_irreducible_tail(q, v) if v > 1 else ()
        digits = np.array(
            [_digits(i, q, v) for i in range(self.size)], dtype=np.int64
        )
        weights = q ** np.arange(v, dtype=np.int64)
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % q) @ weights
        self.add_table = self.add_table.astype(np.int32)
        # companion action of multiplication by x
        comp = np.zeros((v, v), dtype=np.int64)
        for i in range(1, v):
            comp[i, i - 1] = 1
        for i, c in enumerate(self.modulus_tail):
            comp[i, v - 1] = (-c) % q
        xpow = [np.eye(v, dtype=np.int64)]
        for _ in range(1, v):
            xpow.append(comp @ xpow[-1] % q)
        mats = np.tensordot(digits, np.stack(xpow), axes=(1, 0)) % q
        prod_digits = np.einsum("aij,bj->abi", mats, digits) % q
        self.mul_table = (prod_digits @ weights).astype(np.int32)
        # instances are shared through the field() cache
        self.add_table.flags.writeable = False
        self.mul_table.flags.writeable = False

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def unit_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not a unit")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def generator(self) -> int:
        """Least element index that generates the unit group."""
        for a in range(1, self.size):
            if self.unit_order(a) == self.size - 1:
                return a
        raise AssertionError("unit group of a finite field is cyclic")

    def scale_perm(self, c: int) -> np.ndarray:
        """Multiplication by the unit c as a permutation of element indices."""
        if c == 0:
            raise ValueError("scaling by 0 is not a permutation")
        return self.mul_table[c]


@lru_cache(maxsize=None)
def field(q: int, v: int) -> PrimePowerField:
    return PrimePowerField(q, v)
