"""Exact harmonic/hyperharmonic arithmetic with 2-adic fast paths.

Everything computes over canonical arbitrary-precision rationals; valuations
and norms stay symbolic (integer exponents), so no result ever passes through
floating point.
"""

from .bench import BenchResult, bench_norm
from .fastnorm import (
    BoundaryReport,
    BoundaryWitness,
    FastPathMismatch,
    HarmonicProfile,
    NormCase,
    NormResult,
    RangeMax,
    check_against_oracle,
    h2_norm_boundary,
    harmonic_norm2,
    harmonic_profile,
    hyperharmonic_norm2,
    max_valuation_in_range,
    norm2_case,
    nu2_of_fraction,
)
from .harmonic import (
    harmonic,
    harmonic_prefix,
    harmonic_range,
    hyperharmonic,
    hyperharmonic_closed,
    hyperharmonic_rec,
    iter_harmonic,
)
from .padic import (
    Valuation,
    binomial_valuation2,
    digit_sum,
    factorial_valuation,
    is_prime,
    ord2,
    valuation_int,
    valuation_rat,
)
from .rationals import (
    Rational,
    add,
    balanced_sum,
    div,
    format_rational,
    is_integer,
    make_rational,
    mul,
    parse_rational,
    sub,
)
from .search import (
    CheckpointError,
    Collision,
    CollisionReport,
    Confirmation,
    Constraint,
    CorollaryReport,
    ScanMode,
    SearchRecord,
    checkpoint_resume,
    checkpoint_save,
    collisions_to_jsonl,
    integer_findings,
    records_to_jsonl,
    scan_collisions,
    scan_corollaries,
    scan_integers,
)
from .stirling import (
    BRUTE_FORCE_LIMIT,
    StirlingTable,
    rstirling_brute,
    rstirling_table,
)

__all__ = [
    "BenchResult",
    "BoundaryReport",
    "BoundaryWitness",
    "BRUTE_FORCE_LIMIT",
    "CheckpointError",
    "Collision",
    "CollisionReport",
    "Confirmation",
    "Constraint",
    "CorollaryReport",
    "FastPathMismatch",
    "HarmonicProfile",
    "NormCase",
    "NormResult",
    "RangeMax",
    "Rational",
    "ScanMode",
    "SearchRecord",
    "StirlingTable",
    "Valuation",
    "add",
    "balanced_sum",
    "bench_norm",
    "binomial_valuation2",
    "check_against_oracle",
    "checkpoint_resume",
    "checkpoint_save",
    "collisions_to_jsonl",
    "digit_sum",
    "div",
    "factorial_valuation",
    "format_rational",
    "h2_norm_boundary",
    "harmonic",
    "harmonic_norm2",
    "harmonic_prefix",
    "harmonic_profile",
    "harmonic_range",
    "hyperharmonic",
    "hyperharmonic_closed",
    "hyperharmonic_norm2",
    "hyperharmonic_rec",
    "integer_findings",
    "is_integer",
    "is_prime",
    "iter_harmonic",
    "make_rational",
    "max_valuation_in_range",
    "mul",
    "norm2_case",
    "nu2_of_fraction",
    "ord2",
    "parse_rational",
    "records_to_jsonl",
    "rstirling_brute",
    "rstirling_table",
    "scan_collisions",
    "scan_corollaries",
    "scan_integers",
    "sub",
    "valuation_int",
    "valuation_rat",
]

__version__ = "0.1.0"
