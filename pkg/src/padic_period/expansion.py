"""The digit recurrence producing (alpha, beta) pairs for a unit fraction c/d.

Starting from ``beta_0 = c`` each step emits ``alpha_i = beta_i * d^-1 mod p``
(least nonnegative residue, also for negative beta) and moves to
``beta_{i+1} = (beta_i - alpha_i * d) / p``, which is always an exact division.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import InvalidInput, NormalizedOperand, mod_inverse


@dataclass(frozen=True)
class BetaStep:
    index: int
    alpha: int
    beta: int


@dataclass(frozen=True)
class BetaTrace:
    operand: NormalizedOperand
    steps: tuple[BetaStep, ...]

    def __len__(self):
        return len(self.steps)

    @property
    def alphas(self) -> list[int]:
        return [s.alpha for s in self.steps]

    @property
    def betas(self) -> list[int]:
        return [s.beta for s in self.steps]

    def beta_at(self, i: int) -> int:
        """``beta_i`` for ``0 <= i <= len(self)``; the last one is one step past the stored steps."""
        n = len(self.steps)
        if not 0 <= i <= n:
            raise IndexError(f"beta index {i} outside [0, {n}]")
        if i < n:
            return self.steps[i].beta
        last = self.steps[-1]
        return (last.beta - last.alpha * self.operand.unit_den) // self.operand.prime

    @cached_property
    def partial_sums(self) -> list[int]:
        # partial_sums[i] = sum_{n<i} alpha_n p^n
        p = self.operand.prime
        out = [0]
        acc, pw = 0, 1
        for s in self.steps:
            acc += s.alpha * pw
            pw *= p
            out.append(acc)
        return out


def expand_step(beta: int, d: int, p: int, d_inv: int | None = None) -> tuple[int, int]:
    if d_inv is None:
        d_inv = mod_inverse(d, p)
    alpha = (beta * d_inv) % p
    q, r = divmod(beta - alpha * d, p)
    assert r == 0, f"beta - alpha*d not divisible by p (beta={beta}, d={d}, p={p})"
    return alpha, q


def default_max_steps(operand: NormalizedOperand) -> int:
    return 4 * (abs(operand.unit_num) + operand.unit_den) + 16


def run_expansion(operand: NormalizedOperand, max_steps: int | None = None) -> BetaTrace:
    if max_steps is None:
        max_steps = default_max_steps(operand)
    if max_steps < 1:
        raise InvalidInput("max_steps must be >= 1")
    p, d = operand.prime, operand.unit_den
    d_inv = mod_inverse(d, p)
    beta = operand.unit_num
    steps = []
    for i in range(max_steps):
        alpha, nxt = expand_step(beta, d, p, d_inv)
        steps.append(BetaStep(i, alpha, beta))
        beta = nxt
    return BetaTrace(operand, tuple(steps))


def verify_identity(trace: BetaTrace, i: int) -> bool:
    """Check ``c == d * sum_{n<i} alpha_n p^n + beta_i p^i`` exactly."""
    if not 1 <= i <= len(trace):
        raise IndexError(f"identity index {i} outside [1, {len(trace)}]")
    op = trace.operand
    return op.unit_num == op.unit_den * trace.partial_sums[i] + trace.beta_at(i) * op.prime**i


def converges(trace: BetaTrace, n: int) -> bool:
    """True when ``|c/d - sum_{i<=n} alpha_i p^i|_p <= p^-(n+1)``."""
    op = trace.operand
    diff = op.unit_num - op.unit_den * trace.partial_sums[n + 1]
    # d is a p-unit, so the p-adic size of the difference is that of its numerator
    return diff % op.prime ** (n + 1) == 0
