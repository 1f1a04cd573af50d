"""Exact arithmetic substrate: reduced rationals, p-adic valuation, inverses.

Rationals are plain :class:`fractions.Fraction` values, which already keep
numerator and denominator in lowest terms with the sign on the numerator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

ReducedRational = Fraction


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's preconditions."""


class NotInvertible(InvalidInput):
    """Raised when a residue has no inverse modulo the requested modulus."""


def reduce(num: int, den: int) -> Fraction:
    if den == 0:
        raise InvalidInput(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for desk-scale primes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"{p!r} is not a prime")
    return p


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` in ``[1, p)`` via the extended Euclidean algorithm."""
    r0, r1 = a % p, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise NotInvertible(f"{a} has no inverse modulo {p}")
    return s0 % p


def valuation(n: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing the nonzero integer ``n``."""
    if n == 0:
        raise InvalidInput("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class NormalizedOperand:
    """``(unit_num / unit_den) * prime**valuation`` with the unit part prime to ``prime``.

    Zero is the special operand ``valuation=0, unit_num=0, unit_den=1``.
    """

    prime: int
    valuation: int
    unit_num: int
    unit_den: int

    def __post_init__(self):
        require_prime(self.prime)
        if self.unit_den < 1:
            raise InvalidInput("unit denominator must be positive")
        if math.gcd(self.unit_den, self.prime) != 1:
            raise InvalidInput(f"gcd(d, p) != 1 for d={self.unit_den}, p={self.prime}")
        if self.unit_num == 0:
            if self.unit_den != 1 or self.valuation != 0:
                raise InvalidInput("zero operand must be 0/1 with valuation 0")
            return
        if math.gcd(self.unit_num, self.prime) != 1:
            raise InvalidInput(f"gcd(c, p) != 1 for c={self.unit_num}, p={self.prime}")
        if math.gcd(self.unit_num, self.unit_den) != 1:
            raise InvalidInput(f"gcd(c, d) != 1 for c={self.unit_num}, d={self.unit_den}")

    @property
    def unit(self) -> Fraction:
        return Fraction(self.unit_num, self.unit_den)

    @property
    def value(self) -> Fraction:
        return self.unit * Fraction(self.prime) ** self.valuation

    @property
    def is_zero(self) -> bool:
        return self.unit_num == 0


def normalize(x: Fraction, p: int) -> NormalizedOperand:
    """Split ``x`` into ``p**v`` times a unit fraction (both parts prime to ``p``)."""
    require_prime(p)
    x = Fraction(x)
    if x == 0:
        return NormalizedOperand(p, 0, 0, 1)
    num, den = x.numerator, x.denominator
    vn = valuation(num, p)
    vd = valuation(den, p)
    return NormalizedOperand(p, vn - vd, num // p**vn, den // p**vd)
