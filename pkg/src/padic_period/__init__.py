"""p-adic expansions of rationals via the beta-sequence recurrence, with exact period detection."""
from .core import (
    InvalidInput,
    NormalizedOperand,
    NotInvertible,
    ReducedRational,
    is_prime,
    mod_inverse,
    normalize,
    reduce,
)
from .expansion import BetaStep, BetaTrace, expand_step, run_expansion, verify_identity
from .oracle import oracle_digits
from .period import PAdicExpansion, canonicalize, detect_period, reconstruct_rational
from .theorem import Case, CaseReport, ScanReport, check_bounds, classify_case, scan

__all__ = [
    "BetaStep",
    "BetaTrace",
    "Case",
    "CaseReport",
    "InvalidInput",
    "NormalizedOperand",
    "NotInvertible",
    "PAdicExpansion",
    "ReducedRational",
    "ScanReport",
    "canonicalize",
    "check_bounds",
    "classify_case",
    "detect_period",
    "expand_step",
    "is_prime",
    "mod_inverse",
    "normalize",
    "oracle_digits",
    "reconstruct_rational",
    "reduce",
    "run_expansion",
    "scan",
    "verify_identity",
]
