"""Restricted Stirling cycle numbers.

entry(n, k) counts permutations of {1..n} with exactly k disjoint cycles in
which the elements 1 through r are pinned to distinct cycles.  The table is
filled by the cycle-number recurrence

    entry(n, k) = (n-1) * entry(n-1, k) + entry(n-1, k-1)      for n > r,

with base row entry(r, k) = 1 iff k = r, and entry(n, k) = 0 for n < r.  The
recurrence is validated two independent ways: against brute-force permutation
enumeration, and against the identity tying entry(n+r, r+1) to n! times the
order-r hyperharmonic number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

BRUTE_FORCE_LIMIT = 9  # 9! = 362880 permutations keeps enumeration sub-second


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of restricted cycle numbers for one fixed r.

    Rows cover r <= n <= max_n; within a row, entries cover r <= k <= n.
    Lookups outside the triangle are 0 by definition; lookups beyond max_n
    are refused rather than silently extended.
    """

    r: int
    max_n: int
    _rows: tuple[tuple[int, ...], ...] = field(repr=False)

    def entry(self, n: int, k: int) -> int:
        if n > self.max_n:
            raise ValueError(f"n={n} beyond tabulated max_n={self.max_n}")
        if n < self.r or k < self.r or k > n:
            return 0
        return self._rows[n - self.r][k - self.r]

    def row(self, n: int) -> tuple[int, ...]:
        """Entries (k = r..n) of one row."""
        if not self.r <= n <= self.max_n:
            raise ValueError(f"row n={n} outside [{self.r}, {self.max_n}]")
        return self._rows[n - self.r]


def rstirling_table(r: int, max_n: int) -> StirlingTable:
    """Build the triangle for fixed r up to row max_n."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if max_n < r:
        raise ValueError(f"max_n must be >= r, got max_n={max_n}, r={r}")
    rows = [(1,)]
    for n in range(r + 1, max_n + 1):
        prev = rows[-1]
        row = []
        for k in range(r, n + 1):
            above = prev[k - r] if k <= n - 1 else 0
            left = prev[k - 1 - r] if k - 1 >= r else 0
            row.append((n - 1) * above + left)
        rows.append(tuple(row))
    return StirlingTable(r=r, max_n=max_n, _rows=tuple(rows))


def _cycle_ids(perm: tuple[int, ...], n: int) -> tuple[int, list[int]]:
    """Number of cycles and the cycle id of each element (1-indexed)."""
    cid = [0] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if cid[start]:
            continue
        cycles += 1
        j = start
        while not cid[j]:
            cid[j] = cycles
            j = perm[j - 1]
    return cycles, cid


@lru_cache(maxsize=None)
def _cycle_census(n: int) -> dict[tuple[int, int], int]:
    """One pass over all permutations of {1..n}.

    Maps (k, rmax) -> count, where k is the number of cycles and rmax is the
    largest prefix 1..rmax whose elements all sit in pairwise distinct
    cycles.  A permutation then counts toward restriction level r for every
    r <= rmax, which lets every (n, k, r) query share a single enumeration.
    """
    census: dict[tuple[int, int], int] = {}
    for perm in permutations(range(1, n + 1)):
        k, cid = _cycle_ids(perm, n)
        seen = set()
        rmax = n
        for j in range(1, n + 1):
            if cid[j] in seen:
                rmax = j - 1
                break
            seen.add(cid[j])
        key = (k, rmax)
        census[key] = census.get(key, 0) + 1
    return census


def rstirling_brute(n: int, k: int, r: int) -> int:
    """Count by direct enumeration; the oracle the table is checked against."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"n={n} exceeds the enumeration bound {BRUTE_FORCE_LIMIT}"
        )
    if r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    if k < 0 or k > n:
        return 0
    return sum(
        count
        for (cycles, rmax), count in _cycle_census(n).items()
        if cycles == k and rmax >= r
    )
