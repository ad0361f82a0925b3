"""Desk-scale search harnesses over the hyperharmonic grid.

Three scans:

  * scan_integers — looks for integer hyperharmonic values on an (n, r) grid.
    The fast digit-sum valuation filters: a strictly negative valuation means
    an even denominator, hence a certified non-integer.  Cells the filter
    cannot decide (valuation >= 0, e.g. the n = 2^m - 1 row at order 2) are
    confirmed against the exact closed-form value; norm-one cells exist, so
    the filter alone can never settle the question.
  * scan_corollaries — exact non-integrality sweep of orders 2 and 3,
    together with the running-sum identity and the norm-one boundary pattern.
  * scan_collisions — exact value collisions between distinct grid cells,
    under either reading of the index constraint.

Scan order is fixed row-major (n outer, r inner) so reports and checkpoints
are reproducible byte for byte; a resumed scan must produce the identical
report an uninterrupted one would have.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .fastnorm import FastPathMismatch, hyperharmonic_norm2, nu2_of_fraction
from .harmonic import harmonic_prefix
from .rationals import format_rational, parse_rational

CHECKPOINT_FORMAT_VERSION = 1


class ScanMode(Enum):
    FAST = "fast"
    EXACT = "exact"
    HYBRID = "hybrid"


class Confirmation(Enum):
    FAST_FILTER = "fast"
    EXACT_CHECK = "exact"


class Constraint(Enum):
    BOTH_DIFFER = "both_differ"
    EITHER_DIFFERS = "either_differs"


class CheckpointError(Exception):
    """Checkpoint file unusable for the requested scan."""


@dataclass(frozen=True)
class SearchRecord:
    """Per-cell finding of an integer scan.

    A negative valuation certifies a non-integer, so integer_flag may only be
    set on cells whose valuation is >= 0, and those cells must carry an exact
    confirmation; both constraints are enforced on construction.
    """

    n: int
    r: int
    nu2: int
    integer_flag: bool
    confirmation: Confirmation
    value: Fraction | None = None

    def __post_init__(self) -> None:
        if self.nu2 < 0 and self.integer_flag:
            raise ValueError(
                f"({self.n}, {self.r}): nu2={self.nu2} < 0 contradicts integer_flag"
            )
        if self.nu2 >= 0 and self.confirmation is not Confirmation.EXACT_CHECK:
            raise ValueError(
                f"({self.n}, {self.r}): nu2={self.nu2} >= 0 requires exact confirmation"
            )


@dataclass(frozen=True)
class Collision:
    cells: tuple[tuple[int, int], tuple[int, int]]
    value: Fraction


@dataclass(frozen=True)
class CollisionReport:
    n_range: tuple[int, int]
    r_range: tuple[int, int]
    constraint: Constraint
    collisions: tuple[Collision, ...]


@dataclass
class CorollaryReport:
    """Outcome of the order-2/order-3 exact sweep up to n_max."""

    n_max: int
    cells_checked: int = 0
    h2_all_noninteger: bool = True
    h3_all_noninteger: bool = True
    identity_holds: bool = True
    boundary_iff_holds: bool = True
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.h2_all_noninteger
            and self.h3_all_noninteger
            and self.identity_holds
            and self.boundary_iff_holds
        )


def _validate_range(name: str, rng: tuple[int, int], minimum: int = 1) -> None:
    lo, hi = rng
    if lo > hi:
        raise ValueError(f"{name} range is empty: [{lo}, {hi}]")
    if lo < minimum:
        raise ValueError(f"{name} range must start at {minimum} or above, got {lo}")


class _ExactGrid:
    """Shared harmonic prefixes for exact cell values on one grid."""

    def __init__(self, n_hi: int, r_hi: int):
        self._h = harmonic_prefix(n_hi + r_hi - 1)

    def value(self, n: int, r: int) -> Fraction:
        return comb(n + r - 1, r - 1) * (self._h[n + r - 1] - self._h[r - 1])


def _make_cell_evaluator(
    mode: ScanMode, grid: _ExactGrid
) -> Callable[[tuple[int, int]], SearchRecord]:
    keep_values = mode is not ScanMode.FAST

    def exact_cell(cell: tuple[int, int]) -> SearchRecord:
        n, r = cell
        value = grid.value(n, r)
        return SearchRecord(
            n=n,
            r=r,
            nu2=nu2_of_fraction(value),
            integer_flag=value.denominator == 1,
            confirmation=Confirmation.EXACT_CHECK,
            value=value,
        )

    def filtered_cell(cell: tuple[int, int]) -> SearchRecord:
        n, r = cell
        nu2 = hyperharmonic_norm2(n, r).nu2
        if nu2 < 0:
            return SearchRecord(
                n=n,
                r=r,
                nu2=nu2,
                integer_flag=False,
                confirmation=Confirmation.FAST_FILTER,
            )
        value = grid.value(n, r)
        exact_nu2 = nu2_of_fraction(value)
        if exact_nu2 != nu2:
            raise FastPathMismatch(n, r, nu2, exact_nu2)
        return SearchRecord(
            n=n,
            r=r,
            nu2=nu2,
            integer_flag=value.denominator == 1,
            confirmation=Confirmation.EXACT_CHECK,
            value=value if keep_values else None,
        )

    return exact_cell if mode is ScanMode.EXACT else filtered_cell


def record_to_obj(record: SearchRecord) -> dict:
    """JSON-ready dict with the report schema's field order."""
    obj: dict = {"n": record.n, "r": record.r, "nu2": record.nu2}
    if record.value is not None:
        obj["value"] = format_rational(record.value)
    obj["integer"] = record.integer_flag
    obj["confirmation"] = record.confirmation.value
    return obj


def records_to_jsonl(records: Iterable[SearchRecord]) -> str:
    return "".join(
        json.dumps(record_to_obj(rec), separators=(", ", ": ")) + "\n"
        for rec in records
    )


def _record_from_obj(obj: dict) -> SearchRecord:
    value = obj.get("value")
    return SearchRecord(
        n=obj["n"],
        r=obj["r"],
        nu2=obj["nu2"],
        integer_flag=obj["integer"],
        confirmation=Confirmation(obj["confirmation"]),
        value=None if value is None else parse_rational(value),
    )


def checkpoint_save(
    path: str,
    *,
    n_range: tuple[int, int],
    r_range: tuple[int, int],
    mode: ScanMode,
    cursor: int,
    records: list[SearchRecord],
) -> None:
    """Write the scan state as one JSON document (atomically via rename)."""
    doc = {
        "format_version": CHECKPOINT_FORMAT_VERSION,
        "kind": "integer-scan",
        "n_range": list(n_range),
        "r_range": list(r_range),
        "mode": mode.value,
        "cursor": cursor,
        "records": [record_to_obj(rec) for rec in records],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
    os.replace(tmp, path)


def checkpoint_resume(
    path: str,
    *,
    n_range: tuple[int, int],
    r_range: tuple[int, int],
    mode: ScanMode,
) -> tuple[int, list[SearchRecord]]:
    """Load (cursor, records) for a scan, insisting the grid matches.

    A checkpoint taken on different bounds or a different mode is an error,
    never a silent partial reuse.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"unreadable checkpoint {path}: {exc}") from exc
    if doc.get("format_version") != CHECKPOINT_FORMAT_VERSION:
        raise CheckpointError(
            f"checkpoint {path} has format_version {doc.get('format_version')}, "
            f"expected {CHECKPOINT_FORMAT_VERSION}"
        )
    if doc.get("kind") != "integer-scan":
        raise CheckpointError(f"checkpoint {path} is not an integer scan")
    found = (tuple(doc.get("n_range", ())), tuple(doc.get("r_range", ())), doc.get("mode"))
    wanted = (tuple(n_range), tuple(r_range), mode.value)
    if found != wanted:
        raise CheckpointError(
            f"checkpoint {path} was taken on n_range={found[0]}, r_range={found[1]}, "
            f"mode={found[2]}; this scan asked for n_range={wanted[0]}, "
            f"r_range={wanted[1]}, mode={wanted[2]}"
        )
    try:
        records = [_record_from_obj(obj) for obj in doc["records"]]
        cursor = int(doc["cursor"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc}") from exc
    if cursor != len(records):
        raise CheckpointError(
            f"corrupt checkpoint {path}: cursor {cursor} does not match "
            f"{len(records)} stored records"
        )
    return cursor, records


def scan_integers(
    n_range: tuple[int, int],
    r_range: tuple[int, int],
    mode: ScanMode = ScanMode.HYBRID,
    *,
    threads: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_interval: int = 8192,
    limit: int | None = None,
) -> list[SearchRecord]:
    """One record per grid cell, row-major in n then r.

    With checkpoint_path set, an existing compatible checkpoint is resumed
    and progress is saved every checkpoint_interval cells (and on early stop
    via limit).  limit caps how many new cells this call evaluates, which is
    how an interruptible run hands work to its successor.  Cells may be
    evaluated by a thread pool, but records are merged in scan order, so the
    output is schedule-independent.
    """
    _validate_range("n", n_range)
    _validate_range("r", r_range)
    cells = [
        (n, r)
        for n in range(n_range[0], n_range[1] + 1)
        for r in range(r_range[0], r_range[1] + 1)
    ]
    records: list[SearchRecord] = []
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        cursor, records = checkpoint_resume(
            checkpoint_path, n_range=n_range, r_range=r_range, mode=mode
        )
        if cursor > len(cells):
            raise CheckpointError(
                f"checkpoint {checkpoint_path} cursor {cursor} beyond grid size {len(cells)}"
            )
    todo = cells[len(records):]
    if limit is not None:
        todo = todo[: max(limit, 0)]

    grid = _ExactGrid(n_range[1], r_range[1])
    evaluate = _make_cell_evaluator(mode, grid)

    def consume(results: Iterable[SearchRecord]) -> None:
        since_save = 0
        for rec in results:
            records.append(rec)
            since_save += 1
            if checkpoint_path is not None and since_save >= checkpoint_interval:
                checkpoint_save(
                    checkpoint_path,
                    n_range=n_range,
                    r_range=r_range,
                    mode=mode,
                    cursor=len(records),
                    records=records,
                )
                since_save = 0

    if threads > 1 and todo:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            consume(pool.map(evaluate, todo, chunksize=256))
    else:
        consume(map(evaluate, todo))

    if checkpoint_path is not None:
        checkpoint_save(
            checkpoint_path,
            n_range=n_range,
            r_range=r_range,
            mode=mode,
            cursor=len(records),
            records=records,
        )
    return records


def integer_findings(records: Iterable[SearchRecord]) -> list[SearchRecord]:
    """The headline subset: cells whose value really is an integer."""
    return [rec for rec in records if rec.integer_flag]


def scan_corollaries(n_max: int) -> CorollaryReport:
    """Exact sweep of orders 2 and 3 for 2 <= n <= n_max.

    Maintains harmonic(n+1), the order-2 running sum and the order-3 running
    sum incrementally (O(1) values in memory), and per n checks:

      * the order-2 running sum equals (n+1) * (harmonic(n+1) - 1);
      * both orders are non-integers;
      * the order-2 valuation is 0 exactly when n + 1 is a power of two.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    report = CorollaryReport(n_max=n_max)
    h = Fraction(1)  # harmonic(1)
    s2 = Fraction(0)  # order-2 running sum, updated to n each step
    s3 = Fraction(0)  # order-3 running sum
    for n in range(1, n_max + 1):
        s2 += h
        s3 += s2
        h += Fraction(1, n + 1)  # harmonic(n+1)
        if n < 2:
            continue
        report.cells_checked += 1
        closed = (n + 1) * (h - 1)
        if s2 != closed:
            report.identity_holds = False
            report.failures.append(
                {"n": n, "check": "identity", "sum": format_rational(s2),
                 "closed": format_rational(closed)}
            )
        if s2.denominator == 1:
            report.h2_all_noninteger = False
            report.failures.append(
                {"n": n, "check": "order2-integer", "value": format_rational(s2)}
            )
        if s3.denominator == 1:
            report.h3_all_noninteger = False
            report.failures.append(
                {"n": n, "check": "order3-integer", "value": format_rational(s3)}
            )
        nu2 = nu2_of_fraction(s2)
        boundary = (n + 1) & n == 0
        if (nu2 == 0) != boundary:
            report.boundary_iff_holds = False
            report.failures.append(
                {"n": n, "check": "boundary", "nu2": nu2, "power_of_two": boundary}
            )
    return report


def scan_collisions(
    n_range: tuple[int, int],
    r_range: tuple[int, int],
    constraint: Constraint = Constraint.BOTH_DIFFER,
) -> CollisionReport:
    """All pairs of distinct cells sharing one exact value, under constraint.

    Grouping keys on the canonical (numerator, denominator) pair, so a match
    is exact equality by construction.  Pairs come out sorted in scan order.
    """
    _validate_range("n", n_range)
    _validate_range("r", r_range)
    grid = _ExactGrid(n_range[1], r_range[1])
    by_value: dict[Fraction, list[tuple[int, int]]] = {}
    for n in range(n_range[0], n_range[1] + 1):
        for r in range(r_range[0], r_range[1] + 1):
            by_value.setdefault(grid.value(n, r), []).append((n, r))
    found: list[Collision] = []
    for value, cells in by_value.items():
        if len(cells) < 2:
            continue
        for i in range(len(cells)):
            for j in range(i + 1, len(cells)):
                (n1, r1), (n2, r2) = cells[i], cells[j]
                if constraint is Constraint.BOTH_DIFFER and (n1 == n2 or r1 == r2):
                    continue
                found.append(Collision(cells=(cells[i], cells[j]), value=value))
    found.sort(key=lambda c: c.cells)
    return CollisionReport(
        n_range=n_range,
        r_range=r_range,
        constraint=constraint,
        collisions=tuple(found),
    )


def collision_to_obj(collision: Collision, constraint: Constraint) -> dict:
    return {
        "cells": [list(collision.cells[0]), list(collision.cells[1])],
        "value": format_rational(collision.value),
        "mode": constraint.value,
    }


def collisions_to_jsonl(report: CollisionReport) -> str:
    return "".join(
        json.dumps(collision_to_obj(c, report.constraint), separators=(", ", ": ")) + "\n"
        for c in report.collisions
    )
