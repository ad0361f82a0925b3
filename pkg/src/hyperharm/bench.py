"""Timing of the digit-sum valuation against the exact-rational oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .fastnorm import hyperharmonic_norm2, nu2_of_fraction
from .harmonic import hyperharmonic_closed

_FAST_INNER_LOOPS = 1000  # single fast calls are microseconds; batch for resolution


@dataclass(frozen=True)
class BenchResult:
    n: int
    r: int
    repetitions: int
    fast_seconds: float    # median per call
    oracle_seconds: float  # median per call
    nu2_fast: int
    nu2_oracle: int

    @property
    def agree(self) -> bool:
        return self.nu2_fast == self.nu2_oracle

    @property
    def speedup(self) -> float:
        return self.oracle_seconds / self.fast_seconds


def _median(xs: list[float]) -> float:
    ordered = sorted(xs)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2


def bench_norm(n: int, r: int, repetitions: int = 5) -> BenchResult:
    """Median wall time per call of both valuation routes at (n, r)."""
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    fast_times = []
    oracle_times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        for _ in range(_FAST_INNER_LOOPS):
            result = hyperharmonic_norm2(n, r)
        fast_times.append((time.perf_counter() - t0) / _FAST_INNER_LOOPS)

        t0 = time.perf_counter()
        oracle_nu2 = nu2_of_fraction(hyperharmonic_closed(n, r))
        oracle_times.append(time.perf_counter() - t0)
    return BenchResult(
        n=n,
        r=r,
        repetitions=repetitions,
        fast_seconds=_median(fast_times),
        oracle_seconds=_median(oracle_times),
        nu2_fast=result.nu2,
        nu2_oracle=oracle_nu2,
    )
