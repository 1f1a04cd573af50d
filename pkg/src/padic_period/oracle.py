"""Digits computed straight from ``c * d^-1 mod p^n``, without the beta recurrence.

Used to cross-check the recurrence; keep it free of imports from the
expansion modules.
"""
from __future__ import annotations

import math

from .core import InvalidInput


def inverse_mod_prime_power(d: int, p: int, n: int) -> int:
    """Inverse of ``d`` modulo ``p**n``: Fermat seed mod p, then Newton lifting."""
    if d % p == 0:
        raise InvalidInput(f"{d} is not invertible modulo {p}**{n}")
    x = pow(d, p - 2, p)
    k = 1
    while k < n:
        k = min(2 * k, n)
        m = p**k
        x = x * (2 - d * x) % m
    return x % p**n


def oracle_digits(c: int, d: int, p: int, n: int) -> list[int]:
    if d < 1 or math.gcd(d, p) != 1:
        raise InvalidInput(f"d={d} is not invertible modulo {p}")
    if n < 1:
        raise InvalidInput("n must be >= 1")
    mod = p**n
    r = c % mod * inverse_mod_prime_power(d, p, n) % mod
    out = []
    for _ in range(n):
        r, digit = divmod(r, p)
        out.append(digit)
    return out
