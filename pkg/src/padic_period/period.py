"""Eventual period of the digit stream, canonical form, and the way back to a rational."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import InvalidInput, NormalizedOperand, mod_inverse, require_prime
from .expansion import BetaStep, BetaTrace, default_max_steps, expand_step


def canonicalize(pre: Sequence[int], per: Sequence[int]) -> tuple[list[int], list[int]]:
    """Shortest period first, then shortest preperiod; the digit stream is unchanged."""
    pre, per = list(pre), list(per)
    if not per:
        raise InvalidInput("period must be nonempty")
    n = len(per)
    for ell in range(1, n + 1):
        if n % ell == 0 and per[:ell] * (n // ell) == per:
            per = per[:ell]
            break
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = per[-1:] + per[:-1]
    return pre, per


@dataclass(frozen=True)
class PAdicExpansion:
    """Digits ``preperiod`` then ``period`` repeated forever, starting at exponent ``valuation``.

    Construction always canonicalizes, so two equal expansions compare equal.
    """

    prime: int
    valuation: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        require_prime(self.prime)
        for digit in (*self.preperiod, *self.period):
            if not 0 <= digit < self.prime:
                raise InvalidInput(f"digit {digit} outside [0, {self.prime})")
        pre, per = canonicalize(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", tuple(per))

    def digit(self, n: int) -> int:
        """Digit at stream position ``n`` (exponent ``valuation + n``)."""
        L = len(self.preperiod)
        if n < L:
            return self.preperiod[n]
        return self.period[(n - L) % len(self.period)]

    def digits(self, count: int) -> list[int]:
        return [self.digit(n) for n in range(count)]


def detect_period(
    operand: NormalizedOperand, max_steps: int | None = None
) -> tuple[PAdicExpansion, BetaTrace]:
    """Run the recurrence until a beta value recurs.

    beta is the full state of the recurrence, so the first repeat fixes the
    preperiod (index of the first occurrence) and the period (gap between
    the two occurrences). The returned trace runs up to and including the
    second occurrence.
    """
    if max_steps is None:
        max_steps = default_max_steps(operand)
    p, d = operand.prime, operand.unit_den
    d_inv = mod_inverse(d, p)
    seen: dict[int, int] = {}
    steps: list[BetaStep] = []
    beta = operand.unit_num
    for i in range(max_steps + 1):
        alpha, nxt = expand_step(beta, d, p, d_inv)
        steps.append(BetaStep(i, alpha, beta))
        if beta in seen:
            start = seen[beta]
            digits = [s.alpha for s in steps]
            exp = PAdicExpansion(p, operand.valuation, tuple(digits[:start]), tuple(digits[start:i]))
            return exp, BetaTrace(operand, tuple(steps))
        seen[beta] = i
        beta = nxt
    raise RuntimeError(f"no repeated beta within {max_steps} steps for {operand}")


def detect_period_tortoise_hare(operand: NormalizedOperand) -> PAdicExpansion:
    """Floyd's cycle finding on the beta state map; constant memory."""
    p, d = operand.prime, operand.unit_den
    d_inv = mod_inverse(d, p)

    def f(b):
        return expand_step(b, d, p, d_inv)[1]

    x0 = operand.unit_num
    tortoise, hare = f(x0), f(f(x0))
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(f(hare))
    mu, tortoise = 0, x0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1
    lam, hare = 1, f(tortoise)
    while tortoise != hare:
        hare = f(hare)
        lam += 1
    digits = []
    b = x0
    for _ in range(mu + lam):
        alpha, b = expand_step(b, d, p, d_inv)
        digits.append(alpha)
    return PAdicExpansion(p, operand.valuation, tuple(digits[:mu]), tuple(digits[mu:]))


def reconstruct_rational(e: PAdicExpansion) -> Fraction:
    p = e.prime
    A = sum(a * p**i for i, a in enumerate(e.preperiod))
    B = sum(b * p**i for i, b in enumerate(e.period))
    L, ell = len(e.preperiod), len(e.period)
    unit = A + Fraction(p**L * B, 1 - p**ell)
    return unit * Fraction(p) ** e.valuation
