"""
tour-split command line.

Usage:
    python -m tour_split gen --n 100 --seed 7 --variant spdtw --out inst.json
    python -m tour_split gen --example --out example.json
    python -m tour_split split --instance inst.json --tour inst.tour --variant soft-tw --algorithm linear --alpha 10 --beta 10 --check
    python -m tour_split verify --instance inst.json [--full]
    python -m tour_split bench --sizes 250,500,1000,2000 --cells 100:10,100000:10000 --reps 10 --out report.csv
    python -m tour_split plotdata --report report.csv --out speedup.csv

Results go to stdout, logs to stderr. Exit status: 0 ok, 1 usage,
2 parse, 3 validation, 4 correctness mismatch, 5 no feasible split.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

from tour_split import __version__
from tour_split.core.config import settings
from tour_split.core.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    InvalidConfigException,
    SplitException,
    UsageException,
    ValidationFailedException,
)
from tour_split.core.logging import bind_run_context, get_logger, setup_logging
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.params import PenaltyParams
from tour_split.repositories.instance_repository import InstanceRepository
from tour_split.repositories.report_repository import ReportRepository
from tour_split.schemas.bench import BenchConfig
from tour_split.services.bench_service import BenchService, speedup_series
from tour_split.services.instance_service import InstanceService
from tour_split.services.split_service import SplitService

logger = get_logger(__name__)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def _cells(text: str) -> List[Tuple[int, int]]:
    """'100:10,200:20' -> [(100, 10), (200, 20)]"""
    cells = []
    for part in text.split(","):
        try:
            q, b_mult = part.split(":")
            cells.append((int(q), int(b_mult)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected Q:b_mult pairs, got '{part}'")
    return cells


def _tour_path(instance_path: Path) -> Path:
    return instance_path.with_suffix(".tour")


# ── Commands ──────────────────────────────────────────────────────────

def cmd_gen(args: argparse.Namespace) -> int:
    instances = InstanceService()
    repo = InstanceRepository()
    if args.example:
        instance, tour = instances.worked_example()
    else:
        if args.n is None or args.seed is None:
            raise UsageException("gen needs --n and --seed (or --example)")
        instance, tour = instances.generate_base(args.n, args.seed, q=args.q)
        if Variant(args.variant) is not Variant.CVRP:
            instance = instances.extend_to_spdtw(instance, tour, args.seed, args.service_time)
    out = Path(args.out)
    tour_out = Path(args.tour_out) if args.tour_out else _tour_path(out)
    repo.save(instance, out)
    repo.save_tour(tour, tour_out)
    print(f"✓ Wrote {out} (n={instance.n}) and {tour_out}")
    return EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    repo = InstanceRepository()
    instance = repo.load(args.instance)
    tour = repo.load_tour(args.tour if args.tour else _tour_path(Path(args.instance)))
    service = SplitService()
    data = service.prepare(instance, tour, args.no_windows, args.no_pickups)
    params = PenaltyParams(alpha=args.alpha, beta=args.beta)
    outcome = service.run(
        data,
        Variant(args.variant),
        Algorithm(args.algorithm),
        params,
        check=args.check,
        audit=args.audit or None,
    )
    result = outcome.result
    print(f"variant={result.variant} algorithm={result.algorithm} n={result.n}")
    print(f"total_cost={_num(result.total_cost)}")
    print(f"routes={len(result.routes)}")
    for line in outcome.route_lines():
        summary = line.summary
        print(
            f"  ({line.start},{line.end}] customers={' '.join(map(str, line.customers))} "
            f"cost={_num(summary.cost)} max_load={_num(summary.max_load)} "
            f"warp={_num(summary.total_warp)}"
        )
    counters = result.counters
    print(
        f"counters pushes={counters.pushes} pops={counters.pops} "
        f"cursor_moves={counters.cursor_moves} cursor_retreats={counters.cursor_retreats}"
    )
    if outcome.auditor is not None:
        print(f"✓ Audit: {outcome.auditor.checks} checks, no violations")
    if outcome.oracle is not None:
        print(f"✓ Oracle agrees: oracle_cost={_num(outcome.oracle.total_cost)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    repo = InstanceRepository()
    instance = repo.load(args.instance)
    report = InstanceService().verify(instance, full=args.full)
    print(f"triangle scope={report.scope} checked={report.checked} violations={len(report.violations)}")
    for v in report.violations[:10]:
        print(f"  t[{v.i},{v.j}] + t[{v.j},{v.k}] = {_num(v.lhs)} < t[{v.i},{v.k}] = {_num(v.rhs)}")
    print(f"singleton issues={len(report.singleton_issues)}")
    for issue in report.singleton_issues[:10]:
        print(f"  customer {issue.customer}: {issue.reason} ({issue.detail})")
    if not report.clean:
        raise ValidationFailedException(
            f"{len(report.violations)} triangle violation(s), "
            f"{len(report.singleton_issues)} singleton issue(s)",
            details={"path": args.instance},
        )
    print("✓ Instance is valid")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    overrides = {
        key: value
        for key, value in {
            "sizes": args.sizes,
            "cells": args.cells,
            "variants": args.variants,
            "alphas": args.alphas,
            "betas": args.betas,
            "reps": args.reps,
            "warmups": args.warmups,
            "seeds": args.seeds,
            "service_time": args.service_time,
        }.items()
        if value is not None
    }
    try:
        config = BenchConfig(parallel=args.parallel, workers=args.workers, **overrides)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise InvalidConfigException(
            f"Invalid bench option {'.'.join(map(str, error['loc']))}: {error['msg']}",
            details={"errors": len(exc.errors())},
        )
    report = BenchService().run_benchmark(config)
    ReportRepository().write_report(report.rows, args.out)
    print(f"✓ Wrote {len(report.rows)} timing rows to {args.out}")
    for row in report.speedups():
        print(
            f"  {row.variant} n={row.n} q_mult={_num(row.q_mult)} b_mult={_num(row.b_mult)} "
            f"bellman={row.bellman_ms:.3f}ms linear={row.linear_ms:.3f}ms speedup={row.speedup:.2f}x"
        )
    return EXIT_OK


def cmd_plotdata(args: argparse.Namespace) -> int:
    repo = ReportRepository()
    rows = repo.read_report(args.report)
    series = speedup_series(rows)
    repo.write_speedups(series, args.out)
    print(f"✓ Wrote {len(series)} speedup rows to {args.out}")
    return EXIT_OK


# ── Parser ────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tour-split", description="Optimal giant-tour splitting")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="Generate an instance and a giant tour")
    gen.add_argument("--n", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.HARD_SPDTW.value,
                     help="cvrp writes the base instance; any other variant adds pickups and windows")
    gen.add_argument("--service-time", type=float, default=None)
    gen.add_argument("--q", type=float, default=None, help="Vehicle capacity (default: bench base Q)")
    gen.add_argument("--example", action="store_true", help="Write the ten-customer worked example")
    gen.add_argument("--out", required=True, help="Instance file (JSON)")
    gen.add_argument("--tour-out", help="Tour file (default: instance path with .tour)")
    gen.set_defaults(handler=cmd_gen)

    split = sub.add_parser("split", help="Split a giant tour into routes")
    split.add_argument("--instance", required=True)
    split.add_argument("--tour", help="Tour file (default: instance path with .tour)")
    split.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    split.add_argument("--algorithm", choices=[a.value for a in Algorithm], default=Algorithm.LINEAR.value)
    split.add_argument("--alpha", type=float, default=0.0)
    split.add_argument("--beta", type=float, default=0.0)
    split.add_argument("--check", action="store_true", help=f"Compare with the oracle (n <= {settings.oracle_cap})")
    split.add_argument("--audit", action="store_true", help="Recompute every queue value with the evaluator")
    split.add_argument("--no-windows", action="store_true", help="Drop time windows and the horizon")
    split.add_argument("--no-pickups", action="store_true", help="Drop pickups")
    split.set_defaults(handler=cmd_split)

    verify = sub.add_parser("verify", help="Triangle and singleton validation")
    verify.add_argument("--instance", required=True)
    verify.add_argument("--full", action="store_true", help="Check every triple, not only depot triples")
    verify.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", help="Time Bellman against linear Splits")
    bench.add_argument("--sizes", type=_int_list)
    bench.add_argument("--cells", type=_cells, help="Q:b_mult pairs, e.g. 100:10,1000:100")
    bench.add_argument("--variants", type=lambda text: [v for v in text.split(",") if v])
    bench.add_argument("--alphas", type=_float_list)
    bench.add_argument("--betas", type=_float_list)
    bench.add_argument("--reps", type=int)
    bench.add_argument("--warmups", type=int)
    bench.add_argument("--seed", dest="seeds", type=_int_list, help="One or more seeds, comma-separated")
    bench.add_argument("--service-time", type=float)
    bench.add_argument("--parallel", action="store_true", help="Time cells in a process pool (noisier)")
    bench.add_argument("--workers", type=int)
    bench.add_argument("--out", required=True, help="Report CSV")
    bench.set_defaults(handler=cmd_bench)

    plot = sub.add_parser("plotdata", help="Speedup series from a bench report")
    plot.add_argument("--report", required=True)
    plot.add_argument("--out", required=True)
    plot.set_defaults(handler=cmd_plotdata)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    args = build_parser().parse_args(argv)
    with bind_run_context(command=args.command):
        try:
            return args.handler(args)
        except SplitException as exc:
            logger.error("command_failed", code=exc.code, message=exc.message, details=exc.details)
            print(f"✗ {exc.code}: {exc.message}", file=sys.stderr)
            return exc.exit_code
