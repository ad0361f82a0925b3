"""p-adic valuations of integers, rationals, factorials and binomials.

Norms are never materialized as real numbers.  A norm |x|_p = p^(-v) is
carried as its integer exponent v (the valuation), so comparing norms means
comparing valuations with the order flipped: larger norm, smaller valuation.
The valuation of zero is +infinity, represented by an explicit sentinel
rather than a large integer, so that min/add on valuations stay total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic trial division; intended for small fixed primes."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d <= isqrt(p):
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class Valuation:
    """A prime together with the exponent v in |x|_p = p^(-v).

    ``exponent`` is None exactly when the valued quantity was zero (the
    +infinity sentinel).  Addition models multiplicativity of the norm and
    comparison orders by exponent with infinity on top, so the strong
    triangle inequality can be checked without ever leaving integers.
    """

    prime: int
    exponent: int | None

    def __post_init__(self) -> None:
        _require_prime(self.prime)

    @property
    def is_infinite(self) -> bool:
        return self.exponent is None

    def _check_same_prime(self, other: "Valuation") -> None:
        if self.prime != other.prime:
            raise ValueError(f"mixed primes {self.prime} and {other.prime}")

    def __add__(self, other: "Valuation") -> "Valuation":
        self._check_same_prime(other)
        if self.exponent is None or other.exponent is None:
            return Valuation(self.prime, None)
        return Valuation(self.prime, self.exponent + other.exponent)

    def __le__(self, other: "Valuation") -> bool:
        self._check_same_prime(other)
        if self.exponent is None:
            return other.exponent is None
        if other.exponent is None:
            return True
        return self.exponent <= other.exponent

    def __lt__(self, other: "Valuation") -> bool:
        return self <= other and self != other

    def norm_str(self) -> str:
        """Human-readable |x|_p, still exact: "p^-v" or "0"."""
        if self.exponent is None:
            return "0"
        return f"{self.prime}^{-self.exponent}"


def _nu_int(p: int, n: int) -> int:
    """Valuation of a nonzero integer; p=2 uses the trailing-bit trick."""
    if p == 2:
        return (n & -n).bit_length() - 1
    n = abs(n)
    e = 0
    while True:
        q, rem = divmod(n, p)
        if rem:
            return e
        n = q
        e += 1


def valuation_int(p: int, n: int) -> Valuation:
    """Largest e with p^e dividing n; infinite for n = 0."""
    _require_prime(p)
    if n == 0:
        return Valuation(p, None)
    return Valuation(p, _nu_int(p, n))


def valuation_rat(p: int, x: Fraction) -> Valuation:
    """Valuation of a canonical rational: v(numerator) - v(denominator)."""
    _require_prime(p)
    if x == 0:
        return Valuation(p, None)
    return Valuation(p, _nu_int(p, x.numerator) - _nu_int(p, x.denominator))


def digit_sum(p: int, n: int) -> int:
    """Sum of the digits of n written in base p.

    >>> digit_sum(2, 11)   # 11 = 1011 in binary
    3
    >>> digit_sum(10, 907)
    16
    """
    if n < 0:
        raise ValueError("digit_sum needs n >= 0")
    if p < 2:
        raise ValueError("digit_sum needs base >= 2")
    if p == 2:
        return n.bit_count()
    total = 0
    while n:
        n, d = divmod(n, p)
        total += d
    return total


def ord2(n: int) -> int:
    """The unique m with 2^m <= n < 2^(m+1), i.e. floor(log2 n).  Needs n >= 1."""
    if n < 1:
        raise ValueError("ord2 is undefined for n < 1")
    return n.bit_length() - 1


def factorial_valuation(p: int, n: int) -> int:
    """v_p(n!) by Legendre's digit-sum form: (n - digit_sum(p, n)) / (p - 1).

    The division is always exact; this never touches n! itself, so it costs
    O(log n) regardless of how large the factorial would be.
    """
    _require_prime(p)
    if n < 0:
        raise ValueError("factorial_valuation needs n >= 0")
    q, rem = divmod(n - digit_sum(p, n), p - 1)
    assert rem == 0
    return q


def binomial_valuation2(n: int, k: int) -> int:
    """v_2 of the binomial coefficient C(n, k), via binary digit sums.

    Equals the number of carries when adding k and n-k in base 2, so the
    result is always nonnegative.
    """
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return k.bit_count() + (n - k).bit_count() - n.bit_count()
