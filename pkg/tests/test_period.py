from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_period.core import InvalidInput, NormalizedOperand, normalize
from padic_period.oracle import oracle_digits
from padic_period.period import (
    PAdicExpansion,
    canonicalize,
    detect_period,
    detect_period_tortoise_hare,
    reconstruct_rational,
)


def stream(pre, per, n):
    pre, per = list(pre), list(per)
    return [pre[i] if i < len(pre) else per[(i - len(pre)) % len(per)] for i in range(n)]


def brute_force_split(digits):
    """Smallest (preperiod length, period length) consistent with a long digit window."""
    n = len(digits)
    best = None
    for ell in range(1, n // 4 + 1):
        for L in range(0, n // 2):
            if all(digits[i] == digits[i + ell] for i in range(L, n - ell)):
                if best is None or (L, ell) < best:
                    best = (L, ell)
                break
    return best


def op(c, d, p):
    return NormalizedOperand(p, 0, c, d)


def test_minus_half_in_q3():
    e, _ = detect_period(op(-1, 2, 3))
    assert e.preperiod == () and e.period == (1,)


def test_213_over_7_in_q5():
    e, _ = detect_period(op(213, 7, 5))
    assert e.preperiod == (4, 1, 3)
    assert e.period == (1, 4, 2, 3, 0, 2)


def test_11_over_5_in_q3():
    e, trace = detect_period(op(11, 5, 3))
    assert e.digits(10) == [1, 1, 1, 2, 1, 0, 1, 2, 1, 0]
    assert e.preperiod == (1, 1) and e.period == (1, 2, 1, 0)
    # first repeated state is beta_2 = beta_6 = -1
    assert trace.betas[2] == trace.betas[6] == -1
    assert len(trace) == 7
    assert brute_force_split(oracle_digits(11, 5, 3, 60)) == (2, 4)


def test_one_is_terminating():
    e, _ = detect_period(op(1, 1, 7))
    assert e.preperiod == (1,) and e.period == (0,)


def test_zero_operand():
    e, _ = detect_period(normalize(Fraction(0), 3))
    assert e.preperiod == () and e.period == (0,)
    assert reconstruct_rational(e) == 0


@pytest.mark.parametrize(
    "pre, per, expected",
    [
        ([1, 1, 1], [2, 1, 0, 1], ([1, 1], [1, 2, 1, 0])),
        ([], [1, 1], ([], [1])),
        ([4, 1, 3], [1, 4, 2, 3, 0, 2], ([4, 1, 3], [1, 4, 2, 3, 0, 2])),
        ([0, 0], [0], ([], [0])),
        ([2, 1, 2], [1, 2, 1, 2], ([], [2, 1])),
    ],
)
def test_canonicalize(pre, per, expected):
    got = canonicalize(pre, per)
    assert got == expected
    n = len(pre) + 3 * len(per) + 12
    assert stream(*got, n) == stream(pre, per, n)


def test_canonicalize_rejects_empty_period():
    with pytest.raises(InvalidInput):
        canonicalize([1], [])


@given(
    st.lists(st.integers(0, 2), max_size=8),
    st.lists(st.integers(0, 2), min_size=1, max_size=8),
)
def test_canonicalize_keeps_stream_and_is_minimal(pre, per):
    cpre, cper = canonicalize(pre, per)
    n = len(pre) + 3 * len(per)
    assert stream(cpre, cper, n) == stream(pre, per, n)
    assert brute_force_split(stream(pre, per, 4 * (len(pre) + len(per)) + 8)) == (len(cpre), len(cper))
    assert canonicalize(cpre, cper) == (cpre, cper)


def test_expansion_invariants():
    e = PAdicExpansion(3, 0, (1, 1, 1), (2, 1, 0, 1))
    assert e.preperiod == (1, 1) and e.period == (1, 2, 1, 0)
    assert e.digit(0) == 1 and e.digit(2) == 1 and e.digit(6) == 1 and e.digit(5) == 0
    with pytest.raises(InvalidInput):
        PAdicExpansion(3, 0, (), (3,))
    with pytest.raises(InvalidInput):
        PAdicExpansion(3, 0, (1,), ())


@pytest.mark.parametrize(
    "p, v, pre, per, expected",
    [
        (3, 0, (), (1,), Fraction(-1, 2)),
        (5, 0, (1,), (0,), Fraction(1)),
        (5, 0, (4, 1, 3), (1, 4, 2, 3, 0, 2), Fraction(213, 7)),
        (3, -2, (2,), (2, 0, 0, 1, 1), Fraction(7, 99)),
        (2, 0, (), (1,), Fraction(-1)),
    ],
)
def test_reconstruct(p, v, pre, per, expected):
    x = reconstruct_rational(PAdicExpansion(p, v, pre, per))
    assert x == expected
    # independent check: x agrees with the digit stream modulo p^40
    unit = x / Fraction(p) ** v
    N = 40
    s = sum(a * p**i for i, a in enumerate(stream(pre, per, N)))
    assert (unit.numerator - unit.denominator * s) % p**N == 0


@st.composite
def rationals(draw):
    p = draw(st.sampled_from([2, 3, 5, 7, 11, 13]))
    x = Fraction(draw(st.integers(-3000, 3000)), draw(st.integers(1, 3000)))
    return x, p


@given(rationals())
def test_roundtrip_any_rational(xp):
    x, p = xp
    e, _ = detect_period(normalize(x, p))
    assert reconstruct_rational(e) == x


@given(rationals())
def test_tortoise_hare_agrees(xp):
    x, p = xp
    operand = normalize(x, p)
    e, _ = detect_period(operand)
    assert detect_period_tortoise_hare(operand) == e


@given(rationals())
def test_detected_digits_match_oracle(xp):
    x, p = xp
    o = normalize(x, p)
    e, _ = detect_period(o)
    n = len(e.preperiod) + 3 * len(e.period)
    assert e.digits(n) == oracle_digits(o.unit_num, o.unit_den, p, n)
