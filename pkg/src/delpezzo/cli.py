"""Batch front door: catalog inspection, counting runs, verification suites,
dyadic experiments, and fits.

Single binary with subcommands; all numeric output is decimal with no locale
formatting, so identical configurations produce byte-identical artifacts
(modulo the elapsed column, which frozen comparisons exclude).  ``--freeze``
records every scalar the run derives into the frozen-values file; normal runs
compare against the recorded keys and exit nonzero on drift.

Exit codes: 0 success; 1 verification or frozen-comparison failure; 2 unknown
surface or bad arguments; 3 infeasible B or budget; 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from delpezzo import analysis, catalog, counting, dyadic, torsor_s3
from delpezzo._freeze import DEFAULT_FROZEN_PATH, FrozenStore
from delpezzo.geometry import find_rational_lines

__all__ = ["RunConfig", "build_parser", "main", "run"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by all subcommands.

    Command-specific extras (boxes, budgets, fit models) stay on the parsed
    namespace; this type enforces the cross-command invariants.
    """

    command: str
    surface_id: str | None = None
    b_grid: tuple[int, ...] = ()
    method: str | None = None
    coord_bound: int | None = None
    threads: int | None = None
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        for lo, hi in zip(self.b_grid, self.b_grid[1:]):
            if hi <= lo:
                raise ValueError("B grid must be strictly increasing")
        if any(b < 1 for b in self.b_grid):
            raise ValueError("B must be positive")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.coord_bound is not None and self.coord_bound < 1:
            raise ValueError("coord bound must be >= 1")


def _parse_box(text: str, parts: int) -> tuple[int, ...]:
    pieces = text.split("x")
    if len(pieces) != parts:
        raise ValueError(f"box label needs {parts} 'x'-separated integers, got {text!r}")
    return tuple(int(p) for p in pieces)


def _result_rows(results: Sequence[counting.CountResult], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {
                "surface_id": r.surface_id,
                "method": r.method.value,
                "B": r.B,
                "N": r.N,
                "elapsed_ms": round(r.elapsed * 1000),
            }
            for r in results
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return counting.CSV_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in results)


def _freeze_counts(store: FrozenStore, results: Sequence[counting.CountResult]) -> None:
    for r in results:
        store.check(f"count:{r.surface_id}|{r.method.value}|{r.B}", r.N)


# ---------------------------------------------------------------------------
# subcommand handlers: (config, args, store) -> (output text, failed?)
# ---------------------------------------------------------------------------


def _cmd_list(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    lines = ["id,degree,singularity,lines,rho"]
    for record in catalog.list_surfaces():
        rho = "?" if record.picard_rank is None else str(record.picard_rank)
        lines.append(
            f"{record.id},{record.degree},{record.singularity_type},"
            f"{record.geometric_line_count},{rho}"
        )
    return "\n".join(lines) + "\n", False


_VerifyCheck = tuple[str, Callable[[], str | None]]


def _verify_checks(full: bool) -> list[_VerifyCheck]:
    def catalog_check() -> str | None:
        bad = [r for r in catalog.verify_catalog() if not r.passed]
        if bad:
            return "; ".join(f"{r.record_id}: {', '.join(r.failures)}" for r in bad)
        return None

    def stated_data() -> str | None:
        s3 = catalog.get("q-v")
        s3w = catalog.get("q-v-work")
        s7 = catalog.get("c-e6")
        problems = []
        if len(s3.known_lines) != 6:
            problems.append(f"q-v has {len(s3.known_lines)} lines, want 6")
        if len(s3.known_singular_points) != 3:
            problems.append(f"q-v has {len(s3.known_singular_points)} singular points, want 3")
        if len(s3w.known_lines) != 6:
            problems.append(f"q-v-work has {len(s3w.known_lines)} lines, want 6")
        if len(s7.known_lines) != 1:
            problems.append(f"c-e6 has {len(s7.known_lines)} lines, want 1")
        return "; ".join(problems) or None

    def round_trip_torsor() -> str | None:
        n = 0
        for y in torsor_s3.enumerate_torsor(40):
            if torsor_s3.lift_to_torsor(torsor_s3.torsor_to_point(y)) != y:
                return f"lift(point({y.as_tuple()})) != y"
            n += 1
        return None if n else "no torsor vectors at Psi <= 40"

    def round_trip_points() -> str | None:
        for p in counting.brute_points(catalog.get("q-v-work"), 40):
            if torsor_s3.torsor_to_point(torsor_s3.lift_to_torsor(p)).coords != p.coords:
                return f"point(lift({p.coords})) != p"
        return None

    def torsor_eq_brute(values: tuple[int, ...]) -> Callable[[], str | None]:
        def check() -> str | None:
            for b in values:
                nt = torsor_s3.count_torsor(b, backend="pure").N
                nb = counting.count_brute(catalog.get("q-v-work"), b).N
                if nt != nb:
                    return f"B={b}: torsor {nt} != brute {nb}"
            return None

        return check

    def torsor_eq_generic(values: tuple[int, ...]) -> Callable[[], str | None]:
        def check() -> str | None:
            for b in values:
                nt = torsor_s3.count_torsor(b, backend="pure").N
                ng = counting.count_brute(catalog.get("q-v-work"), b, path="generic").N
                if nt != ng:
                    return f"B={b}: torsor {nt} != generic brute {ng}"
            return None

        return check

    def torsor_eq_divisor(values: tuple[int, ...]) -> Callable[[], str | None]:
        def check() -> str | None:
            for b in values:
                nt = torsor_s3.count_torsor(b, backend="pure").N
                nd = counting.count_divisor_oracle_s3(b).N
                if nt != nd:
                    return f"B={b}: torsor {nt} != divisor oracle {nd}"
            return None

        return check

    def kernel_eq_pure() -> str | None:
        try:
            nk = torsor_s3.count_torsor(1000, backend="kernel").N
        except ImportError:
            return "compiled kernel unavailable"
        np_ = torsor_s3.count_torsor(1000, backend="pure").N
        if nk != np_:
            return f"kernel {nk} != pure {np_} at B=1000"
        return None

    checks: list[_VerifyCheck] = [
        ("catalog", catalog_check),
        ("paper-stated-lines-and-singularities", stated_data),
        ("round-trip-torsor-psi<=40", round_trip_torsor),
        ("round-trip-points-B<=40", round_trip_points),
        ("torsor-eq-brute-B(20,40)", torsor_eq_brute((20, 40))),
        ("torsor-eq-divisor-B(100)", torsor_eq_divisor((100,))),
    ]
    if full:
        checks += [
            ("torsor-eq-brute-B<=60", torsor_eq_brute(tuple(range(1, 61)))),
            ("torsor-eq-generic-B(10,25,40)", torsor_eq_generic((10, 25, 40))),
            ("torsor-eq-divisor-B(200,500)", torsor_eq_divisor((200, 500))),
            ("kernel-eq-pure-B(1000)", kernel_eq_pure),
        ]
    return checks


def _cmd_verify(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    lines = []
    passed = 0
    checks = _verify_checks(args.full)
    for name, check in checks:
        detail = check()
        if detail is None:
            passed += 1
            lines.append(f"ok {name}")
        else:
            lines.append(f"FAIL {name}: {detail}")
    lines.append(f"verify: {passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", passed != len(checks)


def _cmd_lines(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    record = catalog.get(config.surface_id)
    found = find_rational_lines(record, config.coord_bound)
    rows = sorted(str(line) for line in found)
    store.check(f"lines:{record.id}|{config.coord_bound}", len(rows))
    return "\n".join(rows + [f"n={len(rows)}"]) + "\n", False


def _cmd_count(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    record = catalog.get(config.surface_id)
    results = []
    for b in config.b_grid:
        if config.method == "brute":
            results.append(
                counting.count_brute(
                    record, b, path=args.path, bound=args.bound, threads=config.threads
                )
            )
        elif config.method == "divisor":
            if record.id != "q-v-work":
                raise ValueError("--method divisor is defined for the working model q-v-work only")
            results.append(counting.count_divisor_oracle_s3(b, threads=config.threads))
        else:  # torsor
            if record.id != "q-v-work":
                raise ValueError("--method torsor is defined for the working model q-v-work only")
            results.append(torsor_s3.count_torsor(b, threads=config.threads, backend=args.backend))
    _freeze_counts(store, results)
    return _result_rows(results, config.format), False


def _cmd_torsor_count(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    results = [
        torsor_s3.count_torsor(b, threads=config.threads, backend=args.backend)
        for b in config.b_grid
    ]
    _freeze_counts(store, results)
    return _result_rows(results, config.format), False


def _cmd_dyadic(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    (b,) = config.b_grid
    if args.box is not None:
        box = dyadic.DyadicBox(*_parse_box(args.box, 9))
        count = dyadic.count_dyadic_box(box, b, budget=args.budget)
        denom = box.bound_denominator()
        store.check(f"dyadic:{box.label()}|{b}", count)
        row = f"{box.label()},{count},{denom},{count / denom!r}"
        return dyadic.REPORT_CSV_HEADER + "\n" + row + "\n", False
    if args.partition:
        total = dyadic.partition_total(b, budget=args.budget)
        direct = torsor_s3.count_torsor(b).N
        store.check(f"partition:{b}", total)
        ok = total == direct
        text = f"partition={total}\ntorsor={direct}\nmatch={'true' if ok else 'false'}\n"
        return text, not ok
    # --grid
    endpoints = tuple(int(p) for p in args.endpoints.split(","))
    report = dyadic.check_box_bound(dyadic.box_grid(endpoints), b, budget=args.budget)
    store.check(f"boxgrid-max:{b}", report.max_ratio)
    store.check(f"boxgrid-argmax:{b}", report.argmax_box.label())
    return report.to_csv(), False


def _cmd_ternary(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    if args.box is not None:
        box = dyadic.TernaryBox(*_parse_box(args.box, 7))
        count = dyadic.count_ternary(box, budget=args.budget)
        denom = box.bound_denominator()
        store.check(f"ternary:{box.label()}", count)
        row = f"{box.label()},{count},{denom},{count / denom!r}"
        return dyadic.REPORT_CSV_HEADER + "\n" + row + "\n", False
    budget = args.grid_budget
    report = dyadic.check_ternary_bound(dyadic.ternary_grid(budget), budget=budget)
    store.check(f"terngrid-max:{budget}", report.max_ratio)
    store.check(f"terngrid-argmax:{budget}", report.argmax_box.label())
    return report.to_csv(), False


def _cmd_fit(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    samples = analysis.samples_from_csv(
        args.csv, surface_id=config.surface_id, method=config.method
    )
    if args.model == "exponent":
        report = analysis.fit_exponent(samples)
    elif args.model == "constant":
        if args.rho is None:
            raise ValueError("--model constant requires --rho")
        report = analysis.fit_leading_constant(samples, args.rho, b_power=args.b_power)
    else:  # log-exponent
        report = analysis.fit_log_exponent(samples, b_power=args.b_power)
    return report.to_json() + "\n", False


# ---------------------------------------------------------------------------
# parser / dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo",
        description="Exact rational-point counting on singular del Pezzo surfaces.",
    )
    parser.add_argument(
        "--frozen-file",
        default=str(DEFAULT_FROZEN_PATH),
        help="frozen regression-value file (default: packaged data/frozen.txt)",
    )
    parser.add_argument(
        "--freeze",
        action="store_true",
        help="record computed values into the frozen file instead of comparing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", default=None, help="write output here instead of stdout")

    p = sub.add_parser("list", help="list the catalog")
    add_output(p)
    p.set_defaults(handler=_cmd_list)

    p = sub.add_parser("verify", help="catalog + round-trip + oracle-equivalence suites")
    p.add_argument("--full", action="store_true", help="extend to the B<=60 and divisor {200,500} suites")
    add_output(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("lines", help="find rational lines by bounded coordinate search")
    p.add_argument("--surface", required=True)
    p.add_argument("--coord-bound", type=int, default=2)
    add_output(p)
    p.set_defaults(handler=_cmd_lines)

    p = sub.add_parser("count", help="count rational points of height <= B")
    p.add_argument("--surface", required=True)
    p.add_argument("--B", type=int, nargs="+", required=True, dest="B")
    p.add_argument("--method", choices=("brute", "divisor", "torsor"), default="brute")
    p.add_argument("--path", choices=("auto", "generic", "displayed"), default="auto",
                   help="brute enumeration strategy (S3 only has 'displayed')")
    p.add_argument("--bound", type=int, default=None, help="override the brute feasibility bound")
    p.add_argument("--backend", choices=("auto", "kernel", "pure"), default="auto")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("torsor-count", help="count S3 points via the universal torsor")
    p.add_argument("--B", type=int, nargs="+", required=True, dest="B")
    p.add_argument("--backend", choices=("auto", "kernel", "pure"), default="auto")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(p)
    p.set_defaults(handler=_cmd_torsor_count)

    p = sub.add_parser("dyadic", help="shell-restricted torsor counts and bound reports")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--box", default=None, help="single box Y1xY03xY04xY13xY14xY23xY24xY33xY34")
    mode.add_argument("--grid", action="store_true", help="bound report over the endpoint grid")
    mode.add_argument("--partition", action="store_true",
                      help="check the complete dyadic cover sums to count_torsor(B)")
    p.add_argument("--B", type=int, nargs=1, required=True, dest="B")
    p.add_argument("--endpoints", default="1,2,4", help="grid endpoints (comma-separated)")
    p.add_argument("--budget", type=int, default=None, help="override the B budget")
    add_output(p)
    p.set_defaults(handler=_cmd_dyadic)

    p = sub.add_parser("ternary", help="shell-restricted ternary-equation counts (Lemma grid)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--box", default=None, help="single box K1xK2xK3xK4xK5xK6xK7")
    mode.add_argument("--grid-budget", type=int, default=None,
                      help="bound report over all power-of-2 boxes with product <= budget")
    p.add_argument("--budget", type=int, default=None, help="override the product budget for --box")
    add_output(p)
    p.set_defaults(handler=_cmd_ternary)

    p = sub.add_parser("fit", help="fit asymptotic models to a counting CSV")
    p.add_argument("--csv", required=True, help="counting CSV (surface_id,method,B,N,elapsed_ms)")
    p.add_argument("--surface", default=None)
    p.add_argument("--method", default=None, help="filter rows by method column")
    p.add_argument("--model", choices=("exponent", "constant", "log-exponent"), required=True)
    p.add_argument("--rho", type=int, default=None, help="Picard rank for --model constant")
    p.add_argument("--b-power", type=int, default=1, dest="b_power")
    add_output(p)
    p.set_defaults(handler=_cmd_fit)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        surface_id=getattr(args, "surface", None),
        b_grid=tuple(getattr(args, "B", ()) or ()),
        method=getattr(args, "method", None),
        coord_bound=getattr(args, "coord_bound", None),
        threads=getattr(args, "threads", None),
        output_path=getattr(args, "output", None),
        format=getattr(args, "format", "csv"),
    )


def run(config: RunConfig, args: argparse.Namespace, store: FrozenStore) -> tuple[str, bool]:
    """Execute one parsed subcommand; returns (output text, verification failed?)."""
    handler: Callable[[RunConfig, argparse.Namespace, FrozenStore], tuple[str, bool]] = args.handler
    return handler(config, args, store)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        store = FrozenStore.load(args.frozen_file, freeze=args.freeze)
    except OSError as exc:
        print(f"delpezzo: cannot read frozen file: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        text, failed = run(config, args, store)
    except catalog.UnknownSurfaceError as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (counting.InfeasibleBError, dyadic.BudgetExceededError) as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        if config.output_path is not None:
            Path(config.output_path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        store.flush()
    except OSError as exc:
        print(f"delpezzo: {exc}", file=sys.stderr)
        return EXIT_IO

    if store.mismatches:
        for line in store.mismatches:
            print(f"delpezzo: frozen mismatch: {line}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_FAIL if failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
