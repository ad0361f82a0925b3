"""O(log)-time 2-adic valuations of harmonic and hyperharmonic numbers.

The 2-adic valuation of harmonic(n) is -ord2(n).  For the order-r
hyperharmonic number the valuation decomposes through the closed form into a
binomial part, read off binary digit sums,

    e = s2(n+r-1) - s2(n) - s2(r-1)        (minus the valuation of C(n+r-1, r-1))

plus a tail coming from the harmonic difference over [r, n+r-1].  Which tail
applies is a case split on orders:

  * case1, ord2(n+r-1) > ord2(r-1): the tail is ord2(n+r-1);
  * case2, orders equal:            the tail is the maximal 2-adic valuation
                                    attained on [r, n+r-1].

The valuation is then -(e + tail).  The tail in case2 is a valuation, not a
norm: placing the max *norm* (a power of two) in the exponent is
dimensionally wrong and disagrees with the exact value already at
(n, r) = (2, 5).  Every result here must match the exact-rational oracle;
a mismatch is raised verbatim as FastPathMismatch, never patched over.

ord2(0) is treated as -infinity, so r = 1 always lands on the case1 side and
the formula degenerates to the plain harmonic law.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .harmonic import harmonic, hyperharmonic_closed
from .padic import ord2


class NormCase(Enum):
    HARMONIC = "harmonic"  # r == 1 reduction
    CASE1 = "case1"        # ord2(n+r-1) > ord2(r-1)
    CASE2 = "case2"        # orders equal


class FastPathMismatch(RuntimeError):
    """Digit-sum formula and exact oracle disagree on a cell.

    This must surface with its witness intact; silently preferring either
    side would defeat the whole fast-filter/exact-confirm design.
    """

    def __init__(self, n: int, r: int, formula_nu2: int, oracle_nu2: int):
        self.n = n
        self.r = r
        self.formula_nu2 = formula_nu2
        self.oracle_nu2 = oracle_nu2
        super().__init__(
            f"fast 2-adic valuation mismatch at (n={n}, r={r}): "
            f"formula gives {formula_nu2}, exact value gives {oracle_nu2}"
        )


@dataclass(frozen=True)
class NormResult:
    """2-adic valuation of an order-r hyperharmonic number, with workings.

    nu2 is the valuation (the norm is 2^-nu2 and is always finite: harmonic
    family values are never zero).  The digit sums and the tail term are kept
    so a caller can print the same decomposition the formula used.
    """

    nu2: int
    case: NormCase
    s2_upper: int  # binary digit sum of n + r - 1
    s2_n: int      # binary digit sum of n
    s2_lower: int  # binary digit sum of r - 1
    tail: int      # ord2(n+r-1) for harmonic/case1; max valuation on [r, n+r-1] for case2

    @property
    def components(self) -> tuple[int, int, int, int]:
        return (self.s2_upper, self.s2_n, self.s2_lower, self.tail)

    @property
    def norm_exponent(self) -> int:
        """The e in |value|_2 = 2^e."""
        return -self.nu2


class RangeMax(NamedTuple):
    nu2: int       # maximal 2-adic valuation attained on [a, b]
    unique: bool   # whether exactly one element attains it
    witness: int   # the smallest element attaining it


def harmonic_norm2(n: int) -> int:
    """2-adic valuation of harmonic(n): -ord2(n), computed without rationals."""
    return -ord2(n)


class HarmonicProfile(NamedTuple):
    numerator_odd: bool
    denominator_nu2: int


def harmonic_profile(n: int) -> HarmonicProfile:
    """Parity/valuation shape of the exact canonical harmonic(n).

    Computed from the exact value, not predicted: for n >= 2 the numerator
    comes out odd and the denominator carries exactly ord2(n) factors of two,
    which is the odd-denominator decomposition behind the harmonic law.
    """
    h = harmonic(n)
    den = h.denominator
    return HarmonicProfile(
        numerator_odd=bool(h.numerator & 1),
        denominator_nu2=(den & -den).bit_length() - 1,
    )


def max_valuation_in_range(a: int, b: int) -> RangeMax:
    """Maximal v_2(k) over a <= k <= b, in O(log b).

    Works down from the top bit: the answer is the largest e such that some
    multiple of 2^e lies in [a, b].  If two multiples of 2^e fit, one of them
    is a multiple of 2^(e+1), so the maximizer at the top e is automatically
    unique; the unique flag reports the multiple count anyway rather than
    assuming that argument.
    """
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got [{a}, {b}]")
    for e in range(b.bit_length() - 1, -1, -1):
        step = 1 << e
        count = b // step - (a - 1) // step
        if count >= 1:
            first = ((a + step - 1) // step) * step
            return RangeMax(nu2=e, unique=count == 1, witness=first)
    raise AssertionError("unreachable: e = 0 always admits a multiple")


def norm2_case(n: int, r: int) -> NormCase:
    """Which side of the order comparison (n, r) falls on: CASE1 or CASE2.

    r = 1 compares against ord2(0), taken as -infinity, hence always CASE1.
    n + r - 1 >= r - 1 rules out the remaining direction, so two cases cover
    everything.
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n, r >= 1, got n={n}, r={r}")
    if r == 1 or ord2(n + r - 1) > ord2(r - 1):
        return NormCase.CASE1
    return NormCase.CASE2


def hyperharmonic_norm2(n: int, r: int) -> NormResult:
    """2-adic valuation of the order-r hyperharmonic number at n.

    Pure digit-sum and bit-length work: O(log(n+r)) integer operations, no
    rational arithmetic anywhere on this path.
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n, r >= 1, got n={n}, r={r}")
    upper = n + r - 1
    s2_upper = upper.bit_count()
    s2_n = n.bit_count()
    s2_lower = (r - 1).bit_count()
    e = s2_upper - s2_n - s2_lower
    if r == 1:
        case = NormCase.HARMONIC
        tail = ord2(upper)
    elif ord2(upper) > ord2(r - 1):
        case = NormCase.CASE1
        tail = ord2(upper)
    else:
        case = NormCase.CASE2
        tail = max_valuation_in_range(r, upper).nu2
    return NormResult(
        nu2=-(e + tail),
        case=case,
        s2_upper=s2_upper,
        s2_n=s2_n,
        s2_lower=s2_lower,
        tail=tail,
    )


def nu2_of_fraction(x: Fraction) -> int:
    """2-adic valuation of a nonzero canonical fraction, via trailing bits."""
    num, den = x.numerator, x.denominator
    if num == 0:
        raise ValueError("zero has no finite 2-adic valuation")
    return (num & -num).bit_length() - (den & -den).bit_length()


def check_against_oracle(n: int, r: int) -> NormResult:
    """Fast valuation with an exact-rational confirmation.

    Raises FastPathMismatch (with the full witness) if the two routes ever
    disagree.
    """
    result = hyperharmonic_norm2(n, r)
    oracle = nu2_of_fraction(hyperharmonic_closed(n, r))
    if oracle != result.nu2:
        raise FastPathMismatch(n, r, result.nu2, oracle)
    return result


@dataclass(frozen=True)
class BoundaryWitness:
    """Odd-denominator decomposition value = a/b - 2^m with b odd."""

    a: int
    b: int
    m: int


@dataclass(frozen=True)
class BoundaryReport:
    """Norm-one boundary diagnosis of the order-2 hyperharmonic number at n.

    nu2 = 0 happens exactly when n + 1 is a power of two; at those n the
    value sits on the |.|_2 = 1 boundary where the norm alone cannot rule
    out integrality, and the witness decomposition a/b - 2^m (b odd) does it
    instead: for n > 1, b > 1 forces a non-integer.
    """

    n: int
    nu2: int
    at_power_boundary: bool
    value: Fraction
    witness: BoundaryWitness | None

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1


def h2_norm_boundary(n: int) -> BoundaryReport:
    """Diagnose the order-2 value at n, with the boundary witness when nu2 = 0."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    nu2 = hyperharmonic_norm2(n, 2).nu2
    h_next = harmonic(n + 1)
    value = (n + 1) * (h_next - 1)
    flag = (n + 1) & n == 0  # n + 1 a power of two
    witness = None
    if flag:
        m = ord2(n + 1)
        scaled = (1 << m) * h_next  # valuation 0, so both parts odd
        witness = BoundaryWitness(a=scaled.numerator, b=scaled.denominator, m=m)
        assert Fraction(witness.a, witness.b) - (1 << m) == value
    return BoundaryReport(
        n=n, nu2=nu2, at_power_boundary=flag, value=value, witness=witness
    )
