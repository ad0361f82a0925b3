"""Exact harmonic and hyperharmonic numbers.

harmonic(n) is the n-th partial sum of the harmonic series.  The order-r
hyperharmonic number iterates partial summation: order 1 is harmonic(n), and
order r is the running sum of the order r-1 values.  Both the defining
recurrence and the binomial closed form

    C(n+r-1, r-1) * (harmonic(n+r-1) - harmonic(r-1))

are implemented; they must agree everywhere, and tests hold them to that.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator

_ZERO = Fraction(0)


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def harmonic_range(a: int, b: int) -> Fraction:
    """Sum of 1/k for a <= k <= b, exactly; zero for an empty range.

    Splits the range in half and recurses, so intermediate reductions work
    on operands of similar size (see rationals.balanced_sum for why).
    """
    if a < 1:
        raise ValueError(f"range must start at 1 or above, got {a}")
    if a > b:
        return _ZERO
    if a == b:
        return Fraction(1, a)
    mid = (a + b) // 2
    return harmonic_range(a, mid) + harmonic_range(mid + 1, b)


def harmonic(n: int) -> Fraction:
    """The n-th harmonic number; harmonic(0) is the empty sum 0."""
    if n < 0:
        raise ValueError(f"harmonic needs n >= 0, got {n}")
    return harmonic_range(1, n)


def harmonic_prefix(n_max: int) -> list[Fraction]:
    """All of harmonic(0) .. harmonic(n_max) as a list indexed by n.

    Desk-scale cache for grid scans that reread many prefixes; for large
    one-shot bounds prefer iter_harmonic and keep only the running value.
    """
    if n_max < 0:
        raise ValueError(f"harmonic_prefix needs n_max >= 0, got {n_max}")
    out = [_ZERO]
    acc = _ZERO
    for k in range(1, n_max + 1):
        acc += Fraction(1, k)
        out.append(acc)
    return out


def iter_harmonic() -> Iterator[tuple[int, Fraction]]:
    """Yield (n, harmonic(n)) for n = 1, 2, 3, ... incrementally."""
    acc = _ZERO
    n = 0
    while True:
        n += 1
        acc += Fraction(1, n)
        yield n, acc


def hyperharmonic_rec(n: int, r: int) -> Fraction:
    """Order-r hyperharmonic number by the defining running-sum recurrence.

    Materializes one row of the triangle at a time (O(n) memory): the order-1
    row is harmonic(1..n), and each further order is the prefix sums of the
    row below.
    """
    _check_positive("n", n)
    _check_positive("r", r)
    row: list[Fraction] = []
    acc = _ZERO
    for k in range(1, n + 1):
        acc += Fraction(1, k)
        row.append(acc)
    for _ in range(r - 1):
        acc = _ZERO
        row = [acc := acc + v for v in row]
    return row[-1]


def hyperharmonic_closed(n: int, r: int) -> Fraction:
    """Order-r hyperharmonic number by the binomial closed form.

    The harmonic difference is computed directly as the reciprocal sum over
    [r, n+r-1], one balanced tree instead of two full prefixes.
    """
    _check_positive("n", n)
    _check_positive("r", r)
    return comb(n + r - 1, r - 1) * harmonic_range(r, n + r - 1)


def hyperharmonic(n: int, r: int) -> Fraction:
    """Default route to the exact value (the closed form)."""
    return hyperharmonic_closed(n, r)
