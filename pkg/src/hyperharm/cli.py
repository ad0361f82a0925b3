"""Command-line surface.

Plain text by default, JSONL under --json.  Exit codes are a stable
contract: 0 success / all checks passed, 1 a verification found failures,
2 usage error (bad parameters, out-of-limit bounds, unusable checkpoint).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb

from .bench import bench_norm
from .fastnorm import (
    FastPathMismatch,
    NormCase,
    harmonic_norm2,
    hyperharmonic_norm2,
    nu2_of_fraction,
)
from .harmonic import harmonic, harmonic_prefix, hyperharmonic_closed
from .padic import factorial_valuation, valuation_int, valuation_rat
from .rationals import format_rational
from .search import (
    CheckpointError,
    Constraint,
    ScanMode,
    collisions_to_jsonl,
    integer_findings,
    records_to_jsonl,
    scan_collisions,
    scan_corollaries,
    scan_integers,
)
from .stirling import BRUTE_FORCE_LIMIT, rstirling_brute, rstirling_table

# Desk-scale ceilings: bounds past these are refused, not attempted.
LIMITS = {
    "harmonic-norm": 65536,
    "factorial": 20000,
    "hyperharmonic-norm-n": 1024,
    "hyperharmonic-norm-r": 256,
    "noninteger": 16384,
    "stirling": BRUTE_FORCE_LIMIT,
    "scan-n": 100_000,
    "scan-r": 10_000,
    "stirling-table-n": 2000,
}

VERIFY_SUITES = (
    "harmonic-norm",
    "factorial",
    "hyperharmonic-norm",
    "noninteger",
    "stirling",
)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _positive(parser: argparse.ArgumentParser, name: str, value: int) -> None:
    if value < 1:
        parser.error(f"{name} must be >= 1, got {value}")


def cmd_compute(args, parser) -> int:
    n, r = args.n, args.r
    _positive(parser, "n", n)
    _positive(parser, "r", r)
    upper, lower = n + r - 1, r - 1
    binomial = comb(upper, lower)
    h_upper = harmonic(upper)
    h_lower = harmonic(lower)
    value = binomial * (h_upper - h_lower)
    norm = hyperharmonic_norm2(n, r)
    printed = (norm.s2_upper, norm.s2_lower, norm.s2_n, norm.tail)
    if args.json:
        _emit(
            {
                "n": n,
                "r": r,
                "value": format_rational(value),
                "binomial": binomial,
                "harmonic_upper": format_rational(h_upper),
                "harmonic_lower": format_rational(h_lower),
                "nu2": norm.nu2,
                "case": norm.case.value,
                "s2_upper": norm.s2_upper,
                "s2_lower": norm.s2_lower,
                "s2_n": norm.s2_n,
                "tail": norm.tail,
            }
        )
        return 0
    print(f"hyperharmonic({n}, {r}) = {format_rational(value)}")
    print(f"binomial factor C({upper}, {lower}) = {binomial}")
    print(f"harmonic({upper}) = {format_rational(h_upper)}")
    print(f"harmonic({lower}) = {format_rational(h_lower)}")
    print(f"2-adic valuation = {norm.nu2}   (norm 2^{-norm.nu2}, {norm.case.value})")
    print(
        f"digit-sum components (s2({upper}), s2({lower}), s2({n}), tail) = "
        f"({printed[0]}, {printed[1]}, {printed[2]}, {printed[3]})"
    )
    return 0


def cmd_norm(args, parser) -> int:
    n, r = args.n, args.r
    _positive(parser, "n", n)
    _positive(parser, "r", r)
    norm = hyperharmonic_norm2(n, r)
    oracle_nu2 = None
    if args.oracle:
        oracle_nu2 = nu2_of_fraction(hyperharmonic_closed(n, r))
    if args.json:
        obj = {
            "n": n,
            "r": r,
            "nu2": norm.nu2,
            "case": norm.case.value,
            "components": list(norm.components),
        }
        if oracle_nu2 is not None:
            obj["oracle_nu2"] = oracle_nu2
            obj["agree"] = oracle_nu2 == norm.nu2
        _emit(obj)
    else:
        print(f"nu2 = {norm.nu2}   (norm 2^{-norm.nu2}, {norm.case.value})")
        print(
            "components (s2(n+r-1), s2(n), s2(r-1), tail) = "
            f"{norm.components}"
        )
        if oracle_nu2 is not None:
            verdict = "agree" if oracle_nu2 == norm.nu2 else "MISMATCH"
            print(f"exact-rational check: nu2 = {oracle_nu2} ({verdict})")
    if oracle_nu2 is not None and oracle_nu2 != norm.nu2:
        return 1
    return 0


def cmd_stirling(args, parser) -> int:
    r, max_n = args.r, args.max_n
    if r < 0:
        parser.error(f"--r must be >= 0, got {r}")
    if max_n < r:
        parser.error(f"--max-n must be >= r, got {max_n}")
    if max_n > LIMITS["stirling-table-n"]:
        parser.error(
            f"--max-n {max_n} beyond desk-scale limit {LIMITS['stirling-table-n']}"
        )
    table = rstirling_table(r, max_n)
    if args.json:
        for n in range(r, max_n + 1):
            _emit({"n": n, "k_start": r, "entries": list(table.row(n))})
        return 0
    print(f"restricted cycle numbers, r = {r}, rows n = {r}..{max_n} (k = {r}..n)")
    for n in range(r, max_n + 1):
        entries = "  ".join(str(v) for v in table.row(n))
        print(f"n={n}: {entries}")
    return 0


def _verify_harmonic_norm(n_max: int):
    failures = []
    h = Fraction(0)
    for n in range(1, n_max + 1):
        h += Fraction(1, n)
        expected = harmonic_norm2(n)
        got = nu2_of_fraction(h)
        if got != expected:
            failures.append({"n": n, "expected": expected, "got": got})
    lines = [f"harmonic 2-adic valuation law on 1..{n_max}: {n_max} values"]
    return failures, lines, {"checked": n_max}


def _verify_factorial(n_max: int):
    failures = []
    primes = (2, 3, 5, 7)
    for p in primes:
        fact = 1
        for n in range(0, n_max + 1):
            if n:
                fact *= n
            direct = valuation_int(p, fact).exponent
            fast = factorial_valuation(p, n)
            if direct != fast:
                failures.append({"p": p, "n": n, "expected": direct, "got": fast})
    lines = [f"factorial valuation digit-sum law, n <= {n_max}, p in {primes}"]
    return failures, lines, {"checked": (n_max + 1) * len(primes)}


def _verify_hyperharmonic_norm(n_max: int, r_max: int):
    failures = []
    tallies = {"harmonic": 0, "case1": 0, "case2": 0}
    h = harmonic_prefix(n_max + r_max - 1)
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            result = hyperharmonic_norm2(n, r)
            tallies[result.case.value] += 1
            value = comb(n + r - 1, r - 1) * (h[n + r - 1] - h[r - 1])
            got = nu2_of_fraction(value)
            if got != result.nu2:
                failures.append(
                    {"n": n, "r": r, "case": result.case.value,
                     "expected": got, "got": result.nu2}
                )
    lines = [
        f"hyperharmonic valuation formula vs exact oracle on [1,{n_max}]x[1,{r_max}]",
        f"tallies: harmonic={tallies['harmonic']} case1={tallies['case1']} "
        f"case2={tallies['case2']}",
    ]
    return failures, lines, {"checked": n_max * r_max, "tallies": tallies}


def _verify_noninteger(n_max: int):
    report = scan_corollaries(n_max)
    lines = [
        f"orders 2 and 3 exact non-integrality and identity, 2 <= n <= {n_max}",
        f"order-2 non-integer: {report.h2_all_noninteger}; "
        f"order-3 non-integer: {report.h3_all_noninteger}; "
        f"running-sum identity: {report.identity_holds}; "
        f"norm-one boundary pattern: {report.boundary_iff_holds}",
    ]
    return report.failures, lines, {"checked": report.cells_checked}


def _verify_stirling(n_max: int):
    failures = []
    checked = 0
    for r in range(0, n_max + 1):
        table = rstirling_table(r, n_max)
        for n in range(r, n_max + 1):
            for k in range(r, n + 1):
                checked += 1
                expected = rstirling_brute(n, k, r)
                got = table.entry(n, k)
                if expected != got:
                    failures.append(
                        {"n": n, "k": k, "r": r, "expected": expected, "got": got}
                    )
    id_n, id_r = 30, 10
    h = harmonic_prefix(id_n + id_r - 1)
    for r in range(1, id_r + 1):
        table = rstirling_table(r, id_n + r)
        fact = 1
        for n in range(1, id_n + 1):
            fact *= n
            checked += 1
            value = comb(n + r - 1, r - 1) * (h[n + r - 1] - h[r - 1])
            entry = table.entry(n + r, r + 1)
            if fact * value != entry:
                failures.append(
                    {"n": n, "r": r, "check": "hyperharmonic-identity",
                     "entry": str(entry)}
                )
    lines = [
        f"table recurrence vs permutation enumeration, n <= {n_max}, all k and r",
        f"table vs n! * hyperharmonic identity, n <= {id_n}, r <= {id_r}",
    ]
    return failures, lines, {"checked": checked}


def cmd_verify(args, parser) -> int:
    suite = args.suite
    if suite == "harmonic-norm":
        n_max = args.n_max if args.n_max is not None else 4096
        if not 1 <= n_max <= LIMITS["harmonic-norm"]:
            parser.error(f"--n-max {n_max} outside [1, {LIMITS['harmonic-norm']}]")
        failures, lines, extra = _verify_harmonic_norm(n_max)
    elif suite == "factorial":
        n_max = args.n_max if args.n_max is not None else 2000
        if not 1 <= n_max <= LIMITS["factorial"]:
            parser.error(f"--n-max {n_max} outside [1, {LIMITS['factorial']}]")
        failures, lines, extra = _verify_factorial(n_max)
    elif suite == "hyperharmonic-norm":
        n_max = args.n_max if args.n_max is not None else 256
        r_max = args.r_max if args.r_max is not None else 64
        if not 1 <= n_max <= LIMITS["hyperharmonic-norm-n"]:
            parser.error(
                f"--n-max {n_max} outside [1, {LIMITS['hyperharmonic-norm-n']}]"
            )
        if not 1 <= r_max <= LIMITS["hyperharmonic-norm-r"]:
            parser.error(
                f"--r-max {r_max} outside [1, {LIMITS['hyperharmonic-norm-r']}]"
            )
        failures, lines, extra = _verify_hyperharmonic_norm(n_max, r_max)
    elif suite == "noninteger":
        n_max = args.n_max if args.n_max is not None else 512
        if not 2 <= n_max <= LIMITS["noninteger"]:
            parser.error(f"--n-max {n_max} outside [2, {LIMITS['noninteger']}]")
        failures, lines, extra = _verify_noninteger(n_max)
    else:  # stirling
        n_max = args.n_max if args.n_max is not None else 8
        if not 0 <= n_max <= LIMITS["stirling"]:
            parser.error(f"--n-max {n_max} outside [0, {LIMITS['stirling']}]")
        failures, lines, extra = _verify_stirling(n_max)

    passed = not failures
    if args.json:
        obj = {"suite": suite, "passed": passed, **extra}
        if failures:
            obj["failures"] = failures
        _emit(obj)
    else:
        for line in lines:
            print(line)
        for witness in failures:
            print(f"FAIL {witness}")
        print(f"{suite}: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def cmd_search_integer(args, parser) -> int:
    n_range = (args.n_min, args.n_max)
    r_range = (args.r_min, args.r_max)
    for name, (lo, hi), cap in (
        ("n", n_range, LIMITS["scan-n"]),
        ("r", r_range, LIMITS["scan-r"]),
    ):
        if lo < 1 or lo > hi:
            parser.error(f"--{name}-min/--{name}-max must give a range within [1, ...]")
        if hi > cap:
            parser.error(f"--{name}-max {hi} beyond desk-scale limit {cap}")
    try:
        records = scan_integers(
            n_range,
            r_range,
            ScanMode(args.mode),
            threads=args.threads,
            checkpoint_path=args.checkpoint,
        )
    except CheckpointError as exc:
        parser.error(str(exc))
    except FastPathMismatch as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    findings = integer_findings(records)
    if args.json:
        sys.stdout.write(records_to_jsonl(records))
    else:
        print(
            f"scanned n in [{n_range[0]}, {n_range[1]}], "
            f"r in [{r_range[0]}, {r_range[1]}]: {len(records)} cells, "
            f"mode {args.mode}"
        )
        exact_cells = sum(1 for rec in records if rec.confirmation.value == "exact")
        print(f"exact confirmations: {exact_cells}")
        if findings:
            for rec in findings:
                print(f"INTEGER FOUND at (n={rec.n}, r={rec.r})")
        else:
            print("integer hyperharmonics found: none")
    return 0


def cmd_search_collision(args, parser) -> int:
    n_range = (args.n_min, args.n_max)
    r_range = (args.r_min, args.r_max)
    for name, (lo, hi) in (("n", n_range), ("r", r_range)):
        if lo < 1 or lo > hi:
            parser.error(f"--{name}-min/--{name}-max must give a range within [1, ...]")
        if hi > 2000:
            parser.error(f"--{name}-max {hi} beyond desk-scale limit 2000")
    constraint = (
        Constraint.BOTH_DIFFER if args.constraint == "both" else Constraint.EITHER_DIFFERS
    )
    report = scan_collisions(n_range, r_range, constraint)
    if args.json:
        sys.stdout.write(collisions_to_jsonl(report))
    else:
        print(
            f"collision scan n in [{n_range[0]}, {n_range[1]}], "
            f"r in [{r_range[0]}, {r_range[1]}], constraint {constraint.value}"
        )
        if report.collisions:
            for c in report.collisions:
                (n1, r1), (n2, r2) = c.cells
                print(
                    f"collision: ({n1}, {r1}) and ({n2}, {r2}) share "
                    f"{format_rational(c.value)}"
                )
        print(f"collisions: {len(report.collisions)}")
    return 0


def cmd_bench(args, parser) -> int:
    _positive(parser, "n", args.n)
    _positive(parser, "r", args.r)
    _positive(parser, "--repetitions", args.repetitions)
    result = bench_norm(args.n, args.r, args.repetitions)
    if args.json:
        _emit(
            {
                "n": result.n,
                "r": result.r,
                "repetitions": result.repetitions,
                "fast_seconds": result.fast_seconds,
                "oracle_seconds": result.oracle_seconds,
                "speedup": result.speedup,
                "nu2_fast": result.nu2_fast,
                "nu2_oracle": result.nu2_oracle,
                "agree": result.agree,
            }
        )
    else:
        print(f"benchmark at (n={result.n}, r={result.r}), "
              f"median of {result.repetitions}")
        print(f"digit-sum fast path : {result.fast_seconds:.3e} s/call "
              f"(nu2 = {result.nu2_fast})")
        print(f"exact-rational path : {result.oracle_seconds:.3e} s/call "
              f"(nu2 = {result.nu2_oracle})")
        print(f"speedup: {result.speedup:.1f}x, "
              f"{'agree' if result.agree else 'MISMATCH'}")
    return 0 if result.agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperharm",
        description="Exact hyperharmonic numbers, 2-adic valuations, and searches",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact value with its norm decomposition")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("norm", help="fast 2-adic valuation of hyperharmonic(n, r)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int, nargs="?", default=1)
    p.add_argument("--oracle", action="store_true",
                   help="also confirm against the exact value")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("stirling", help="restricted cycle-number triangle")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search-integer", help="scan a grid for integer values")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in ScanMode], default="hybrid")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--checkpoint", metavar="PATH", default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search-collision", help="scan a grid for equal values")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--constraint", choices=["both", "either"], default="both")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bench", help="time the fast path against the exact oracle")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--json", action="store_true")

    return parser


_COMMANDS = {
    "compute": cmd_compute,
    "norm": cmd_norm,
    "stirling": cmd_stirling,
    "verify": cmd_verify,
    "search-integer": cmd_search_integer,
    "search-collision": cmd_search_collision,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
