"""Canonical arbitrary-precision rationals.

The value type is :class:`fractions.Fraction`, which already guarantees the
canonical form this package relies on everywhere: the denominator is positive,
gcd(|numerator|, denominator) == 1, and zero is stored as 0/1.  Python ints are
arbitrary precision, so numerators and denominators with tens of thousands of
bits need no special handling.  This module pins down the construction,
arithmetic, parsing and printing surface the rest of the package uses, so the
canonical-form assumptions live in one place.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_ZERO = Fraction(0)


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    """Build the canonical fraction numerator/denominator.

    The sign ends up on the numerator and the result is fully reduced.
    Raises ZeroDivisionError for a zero denominator.
    """
    return Fraction(numerator, denominator)


def add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def sub(x: Fraction, y: Fraction) -> Fraction:
    return x - y


def mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def div(x: Fraction, y: Fraction) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when y is zero."""
    return x / y


def is_integer(x: Fraction) -> bool:
    """True iff x is an integer, i.e. its canonical denominator is 1."""
    return x.denominator == 1


def format_rational(x: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" / "p" forms produced by :func:`format_rational`.

    Whitespace around the string is tolerated; anything else (floats,
    exponents, empty fields) is a ValueError.
    """
    body = text.strip()
    num_part, slash, den_part = body.partition("/")
    try:
        num = int(num_part)
        den = int(den_part) if slash else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    return Fraction(num, den)


def balanced_sum(terms: Sequence[Fraction] | Iterable[Fraction]) -> Fraction:
    """Sum exactly by pairwise (balanced-tree) reduction.

    A left fold over n harmonic-style terms makes every step reduce a fraction
    whose denominator is already near lcm(1..n), so the total gcd work grows
    quadratically.  Combining neighbours pairwise keeps operands of similar
    size at every level, which is what makes exact sums with n around 10^5
    practical.
    """
    items = list(terms)
    if not items:
        return _ZERO
    while len(items) > 1:
        paired = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            paired.append(items[-1])
        items = paired
    return items[0]
