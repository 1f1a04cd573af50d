"""Case classification for the beta-sequence bounds, bound checking, and a scan harness.

Two families of bounds are checked:

* hard bounds, taken from the proof (non-strict), whose failure is a violation;
* the literal statement of the bounds, whose failure is only a strict warning.
  The statement says ``d < |beta_i| < c`` for ``i <= m`` although ``beta_0 = c``
  always, so instances in case 2.2 warn at ``i = 0``.
"""
from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from .core import InvalidInput, NormalizedOperand, require_prime
from .expansion import BetaTrace, run_expansion, verify_identity
from .oracle import oracle_digits
from .period import detect_period, reconstruct_rational


class Case(str, enum.Enum):
    CASE1 = "Case1"
    CASE21 = "Case21"
    CASE22 = "Case22"
    BOUNDARY = "Boundary"
    TRIVIAL = "Trivial"

    @property
    def label(self) -> str:
        return {
            "Case1": "Case 1",
            "Case21": "Case 2.1",
            "Case22": "Case 2.2",
            "Boundary": "Boundary",
            "Trivial": "Trivial",
        }[self.value]


# (index, bound name, beta)
Finding = tuple[int, str, int]


@dataclass(frozen=True)
class CaseReport:
    c: int
    d: int
    prime: int
    case_tag: Case
    m: int | None
    threshold: Fraction
    violations: tuple[Finding, ...] = ()
    strict_warnings: tuple[Finding, ...] = ()
    horizon: int = 0

    @property
    def title(self) -> str:
        if self.case_tag is Case.CASE22:
            return f"{self.case_tag.label}, m={self.m}"
        return self.case_tag.label


def threshold(c: int, d: int, p: int) -> Fraction:
    if p == 2:
        return Fraction(c, 2 * d)
    return Fraction(c * (p - 1), 2 * d * p)


def exponent_floor(x: Fraction, p: int) -> int:
    """Largest ``m >= 0`` with ``p**m <= x``, for ``x >= 1``, by exact comparison."""
    m = 0
    while p ** (m + 1) <= x:
        m += 1
    return m


def check_hypotheses(c: int, d: int, p: int) -> None:
    require_prime(p)
    if c < 0:
        raise InvalidInput(f"c must be nonnegative, got {c}")
    if d < 1:
        raise InvalidInput(f"d must be positive, got {d}")
    for name, a, b in (("gcd(c, d)", c, d), ("gcd(c, p)", c, p), ("gcd(d, p)", d, p)):
        if c == 0 and name != "gcd(d, p)":
            continue
        g = math.gcd(a, b)
        if g != 1:
            raise InvalidInput(f"hypothesis {name} = 1 fails: {name} = {g} for c={c}, d={d}, p={p}")


def classify_case(c: int, d: int, p: int) -> CaseReport:
    check_hypotheses(c, d, p)
    t = threshold(c, d, p)
    if c == 0 or c == d:
        tag, m = Case.TRIVIAL, None
    elif c < d:
        tag, m = Case.CASE1, None
    elif t < 1:
        tag, m = Case.CASE21, None
    elif t == 1:
        tag, m = Case.BOUNDARY, None
    else:
        tag, m = Case.CASE22, exponent_floor(t, p)
    return CaseReport(c, d, p, tag, m, t)


def _hard_bounds(i: int, beta: int, r: CaseReport) -> list[str]:
    c, d, m = r.c, r.d, r.m
    failed = []
    if r.case_tag is Case.CASE1:
        if not abs(beta) < d:
            failed.append("|beta| < d")
    elif r.case_tag is Case.CASE21:
        if i >= 1 and not abs(beta) < d:
            failed.append("|beta| < d")
    elif r.case_tag is Case.CASE22:
        if i <= m:
            if not beta >= d:
                failed.append("beta >= d")
            if not beta <= c:
                failed.append("beta <= c")
        elif i == m + 1:
            if not abs(beta) < c:
                failed.append("|beta| < c")
        elif not abs(beta) <= d:
            failed.append("|beta| <= d")
    return failed


def _statement_bounds(i: int, beta: int, r: CaseReport) -> list[str]:
    # literal reading of the stated bounds; for p = 2 the statement is non-strict
    c, d, m = r.c, r.d, r.m
    failed = []
    if r.case_tag is Case.CASE22:
        if r.prime == 2:
            if i <= m and not d <= abs(beta) <= c:
                failed.append("d <= |beta| <= c")
            if i >= m + 1 and not abs(beta) <= d:
                failed.append("|beta| <= d")
        else:
            if i <= m:
                if not abs(beta) > d:
                    failed.append("|beta| > d")
                if not abs(beta) < c:
                    failed.append("|beta| < c")
            elif i > m + 1 and not abs(beta) < d:
                failed.append("|beta| < d")
        if i == m + 1 and not abs(beta) < c:
            failed.append("|beta| < c")
    return failed


def check_bounds(trace: BetaTrace, report: CaseReport, horizon: int | None = None) -> CaseReport:
    if horizon is None:
        horizon = len(trace)
    if horizon < 1 or horizon > len(trace):
        raise InvalidInput(f"horizon {horizon} outside [1, {len(trace)}]")
    if report.case_tag is Case.CASE22 and horizon < report.m + 2:
        raise InvalidInput(f"horizon {horizon} < m + 2 = {report.m + 2}")
    violations, warnings = [], []
    if report.case_tag not in (Case.BOUNDARY, Case.TRIVIAL):
        for step in trace.steps[:horizon]:
            violations += [(step.index, name, step.beta) for name in _hard_bounds(step.index, step.beta, report)]
            warnings += [(step.index, name, step.beta) for name in _statement_bounds(step.index, step.beta, report)]
    return replace(report, violations=tuple(violations), strict_warnings=tuple(warnings), horizon=horizon)


def multiplicative_order(p: int, d: int) -> int:
    """Least ``k >= 1`` with ``p**k == 1 (mod d)``, by brute force."""
    if d == 1:
        return 1
    x, k = p % d, 1
    while x != 1:
        x = x * p % d
        k += 1
        if k > d:
            raise InvalidInput(f"{p} is not a unit modulo {d}")
    return k


@dataclass
class ScanReport:
    """Aggregate over a grid of (p, c, d). Merging is commutative; lists are kept sorted."""

    instances: int = 0
    case_counts: Counter = field(default_factory=Counter)
    boundary_skipped: int = 0
    violations: list = field(default_factory=list)
    strict_warnings: list = field(default_factory=list)
    identity_failures: list = field(default_factory=list)
    roundtrip_failures: list = field(default_factory=list)
    oracle_mismatches: list = field(default_factory=list)
    order_warnings: list = field(default_factory=list)
    max_preperiod: int = 0
    max_period: int = 0

    def merge(self, other: ScanReport) -> ScanReport:
        return ScanReport(
            instances=self.instances + other.instances,
            case_counts=self.case_counts + other.case_counts,
            boundary_skipped=self.boundary_skipped + other.boundary_skipped,
            violations=sorted(self.violations + other.violations),
            strict_warnings=sorted(self.strict_warnings + other.strict_warnings),
            identity_failures=sorted(self.identity_failures + other.identity_failures),
            roundtrip_failures=sorted(self.roundtrip_failures + other.roundtrip_failures),
            oracle_mismatches=sorted(self.oracle_mismatches + other.oracle_mismatches),
            order_warnings=sorted(self.order_warnings + other.order_warnings),
            max_preperiod=max(self.max_preperiod, other.max_preperiod),
            max_period=max(self.max_period, other.max_period),
        )

    @property
    def failures(self) -> int:
        return (
            len(self.violations)
            + len(self.identity_failures)
            + len(self.roundtrip_failures)
            + len(self.oracle_mismatches)
        )

    def to_dict(self) -> dict:
        def rows(items):
            return [[str(x) for x in item] for item in items]

        return {
            "instances": str(self.instances),
            "case_counts": {tag.value: str(self.case_counts.get(tag.value, 0)) for tag in Case},
            "boundary_skipped": str(self.boundary_skipped),
            "violations": rows(self.violations),
            "strict_warnings": rows(self.strict_warnings),
            "identity_failures": rows(self.identity_failures),
            "roundtrip_failures": rows(self.roundtrip_failures),
            "oracle_mismatches": rows(self.oracle_mismatches),
            "order_warnings": rows(self.order_warnings),
            "max_preperiod": str(self.max_preperiod),
            "max_period": str(self.max_period),
        }


_LIST_FIELDS = (
    "violations",
    "strict_warnings",
    "identity_failures",
    "roundtrip_failures",
    "oracle_mismatches",
    "order_warnings",
)

ORACLE_DIGITS = 64


def check_instance(c: int, d: int, p: int) -> ScanReport:
    """Every check for one admissible triple; ``c`` may be negative (no case bounds then)."""
    out = ScanReport(instances=1)
    operand = NormalizedOperand(p, 0, c, d)
    expansion, trace = detect_period(operand)
    key = (p, c, d)

    out.max_preperiod = len(expansion.preperiod)
    out.max_period = len(expansion.period)
    if not all(verify_identity(trace, i) for i in range(1, len(trace) + 1)):
        out.identity_failures.append(key)
    if reconstruct_rational(expansion) != Fraction(c, d):
        out.roundtrip_failures.append(key)
    if run_expansion(operand, ORACLE_DIGITS).alphas != oracle_digits(c, d, p, ORACLE_DIGITS):
        out.oracle_mismatches.append(key)
    if d > 1:
        order = multiplicative_order(p, d)
        if order != len(expansion.period):
            out.order_warnings.append((p, c, d, len(expansion.period), order))

    if c > 0:
        report = classify_case(c, d, p)
        out.case_counts[report.case_tag.value] += 1
        if report.case_tag is Case.BOUNDARY:
            out.boundary_skipped += 1
        else:
            # the detect trace reaches a repeated beta, so it covers every state
            horizon = max(len(trace), (report.m or 0) + 2)
            if horizon > len(trace):
                trace = run_expansion(operand, horizon)
            report = check_bounds(trace, report, horizon)
            out.violations = [key + f for f in report.violations]
            out.strict_warnings = [key + f for f in report.strict_warnings]
    return out


def admissible(c: int, d: int, p: int) -> bool:
    return c != 0 and math.gcd(c, d) == 1 and math.gcd(c, p) == 1 and d % p != 0


def grid(p_set: Iterable[int], c_max: int, d_max: int, signed: bool = False):
    for p in sorted(set(p_set)):
        cs = range(-c_max, c_max + 1) if signed else range(1, c_max + 1)
        for c in cs:
            for d in range(1, d_max + 1):
                if admissible(c, d, p):
                    yield c, d, p


def _scan_chunk(jobs):
    parts = [check_instance(c, d, p) for c, d, p in jobs]
    acc = ScanReport()
    for part in parts:
        acc.instances += part.instances
        acc.case_counts += part.case_counts
        acc.boundary_skipped += part.boundary_skipped
        for name in _LIST_FIELDS:
            getattr(acc, name).extend(getattr(part, name))
        acc.max_preperiod = max(acc.max_preperiod, part.max_preperiod)
        acc.max_period = max(acc.max_period, part.max_period)
    for name in _LIST_FIELDS:
        getattr(acc, name).sort()
    return acc


def scan(
    p_set: Iterable[int], c_max: int, d_max: int, signed: bool = False, workers: int = 1
) -> ScanReport:
    """Check every admissible triple with ``1 <= c <= c_max`` (or ``|c| <= c_max``), ``1 <= d <= d_max``."""
    p_set = [require_prime(p) for p in p_set]
    if c_max < 1 or d_max < 1:
        raise InvalidInput("c_max and d_max must be >= 1")
    jobs = list(grid(p_set, c_max, d_max, signed))
    if workers <= 1:
        return _scan_chunk(jobs)
    size = max(1, len(jobs) // (workers * 8))
    chunks = [jobs[i : i + size] for i in range(0, len(jobs), size)]
    total = ScanReport()
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_scan_chunk, chunks):
            total = total.merge(part)
    return total
