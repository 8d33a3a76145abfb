"""Command-line interface: eval, compare, golden, selftest.

Exit codes: 0 success, 1 check/threshold failure, 2 domain error,
3 convergence failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .closed_form import Method, eval_E
from .config import ConvergenceError, DomainError, Ellint2Error, ToleranceConfig
from .params import BOUNDARY_SLACK
from .quadrature import quad2d, quad_tolerance
from .validation import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_IO = 0, 1, 2, 3, 4

CSV_FIELDS = ["a", "b", "method", "value", "error_estimate"]
GOLDEN_FIELDS = ["a", "b", "value", "error_estimate", "nodes_total", "converged"]
SKIPPED_DOMAIN = "skipped-domain"
NOT_CONVERGED = "not-converged"
DEFAULT_COMPARE_METHODS = ("elliptic7", "product5", "appell3", "quad")
# golden files tighten the oracle tolerances by this factor
GOLDEN_TIGHTEN = 100.0


def fmt(x: float) -> str:
    """Shortest round-trip decimal (at most 17 significant digits)."""
    return repr(float(x))


@dataclass
class SweepSpec:
    a_values: list[float]
    b_values: list[float]
    methods: list[str] = field(default_factory=lambda: list(DEFAULT_COMPARE_METHODS))
    output_path: Path | None = None
    format: str = "csv"

    def admissible(self) -> tuple[list[tuple[float, float]], int]:
        points, skipped = [], 0
        for a in self.a_values:
            for b in self.b_values:
                if abs(a) + abs(b) <= 1.0 + BOUNDARY_SLACK:
                    points.append((a, b))
                else:
                    skipped += 1
        return points, skipped


@dataclass
class CompareReport:
    grid: list[tuple[float, float]]
    values: dict[str, list[tuple[float, float] | str]]
    max_abs_dev: float
    max_rel_dev: float
    worst_point: tuple[float, float] | None
    skipped_outside: int
    timings: dict[str, list[float]]


def _axis_values(lo, hi, steps, values):
    if values:
        return [float(v) for v in values.split(",") if v.strip()]
    if steps < 1:
        raise DomainError("steps must be >= 1")
    return np.linspace(lo, hi, steps).tolist()


def _config(args) -> ToleranceConfig:
    overrides = {}
    if args.rel_tol is not None:
        overrides["rel_tol"] = args.rel_tol
    if args.abs_tol is not None:
        overrides["abs_tol"] = args.abs_tol
    if args.max_terms is not None:
        overrides["max_terms"] = args.max_terms
    if args.quad_nodes is not None:
        overrides["quad_base_nodes"] = args.quad_nodes
    if args.quad_levels is not None:
        overrides["quad_max_levels"] = args.quad_levels
    return ToleranceConfig.from_env(**overrides)


def _sweep_of(args, methods) -> SweepSpec:
    return SweepSpec(
        a_values=_axis_values(args.a_min, args.a_max, args.steps_a, args.a_values),
        b_values=_axis_values(args.b_min, args.b_max, args.steps_b, args.b_values),
        methods=methods,
        output_path=Path(args.out) if args.out else None,
        format=args.format,
    )


def _render_rows(rows: list[dict], fields: list[str], kind: str) -> str:
    if kind == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# -- eval ---------------------------------------------------------------------

def cmd_eval(args) -> int:
    cfg = _config(args)
    method = Method(args.method)
    start = time.perf_counter()
    lines = []
    if method is Method.QUAD:
        res = quad2d((args.a, args.b), cfg)
        elapsed = time.perf_counter() - start
        lines += [
            f"value={fmt(res.value)}",
            "method=quad",
            f"error_estimate={fmt(res.error_estimate)}",
            f"levels_used={res.levels_used}",
            f"nodes_total={res.nodes_total}",
            f"converged={str(res.converged).lower()}",
        ]
        status = EXIT_OK if res.converged else EXIT_CONVERGENCE
    else:
        ev = eval_E((args.a, args.b), method, cfg)
        elapsed = time.perf_counter() - start
        lines += [
            f"value={fmt(ev.value)}",
            f"method={ev.method.value}",
            f"error_estimate={fmt(ev.error_estimate)}",
        ]
        status = EXIT_OK
    if not args.no_timing:
        lines.append(f"time_s={elapsed:.6g}")
    print("\n".join(lines))
    return status


# -- compare ------------------------------------------------------------------

def _evaluate_point(point, methods, cfg):
    out, times = {}, {}
    for name in methods:
        start = time.perf_counter()
        try:
            ev = eval_E(point, name, cfg)
            out[name] = (ev.value, ev.error_estimate)
        except DomainError:
            out[name] = SKIPPED_DOMAIN
        except ConvergenceError:
            out[name] = NOT_CONVERGED
        times[name] = time.perf_counter() - start
    return out, times


def run_compare(sweep: SweepSpec, cfg: ToleranceConfig, jobs: int = 1) -> CompareReport:
    """Evaluate every method on the admissible grid; rows stay in grid order."""
    points, skipped = sweep.admissible()
    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        results = list(pool.map(lambda p: _evaluate_point(p, sweep.methods, cfg), points))
    values = {m: [r[0][m] for r in results] for m in sweep.methods}
    timings = {m: [r[1][m] for r in results] for m in sweep.methods}
    max_abs = max_rel = 0.0
    worst = None
    for i, point in enumerate(points):
        numeric = {m: values[m][i][0] for m in sweep.methods if isinstance(values[m][i], tuple)}
        ref = numeric.get("quad", numeric.get("elliptic7"))
        if ref is None:
            continue
        for v in numeric.values():
            d = abs(v - ref)
            max_abs = max(max_abs, d)
            if worst is None or d / abs(ref) > max_rel:
                max_rel, worst = d / abs(ref), point
    return CompareReport(points, values, max_abs, max_rel, worst, skipped, timings)


def _compare_rows(report: CompareReport, methods: list[str], kind: str) -> list[dict]:
    rows = []
    for i, (a, b) in enumerate(report.grid):
        for m in methods:
            cell = report.values[m][i]
            if isinstance(cell, tuple):
                value, err = cell
                if kind == "csv":
                    value, err = fmt(value), fmt(err)
            else:
                value, err = cell, None if kind == "json" else ""
            rows.append({"a": a if kind == "json" else fmt(a), "b": b if kind == "json" else fmt(b),
                         "method": m, "value": value, "error_estimate": err})
    return rows


def cmd_compare(args) -> int:
    cfg = _config(args)
    methods = [Method(m.strip()).value for m in args.methods.split(",") if m.strip()]
    sweep = _sweep_of(args, methods)
    report = run_compare(sweep, cfg, args.jobs)
    if not report.grid:
        print(f"error: no admissible points (|a| + |b| <= 1); skipped={report.skipped_outside}",
              file=sys.stderr)
        return EXIT_DOMAIN
    if sweep.output_path is not None:
        rows = _compare_rows(report, sweep.methods, sweep.format)
        try:
            _write(sweep.output_path, _render_rows(rows, CSV_FIELDS, sweep.format))
        except OSError as exc:
            print(f"error: cannot write {sweep.output_path}: {exc}", file=sys.stderr)
            return EXIT_IO
    cells = [c for vals in report.values.values() for c in vals]
    not_converged = cells.count(NOT_CONVERGED)
    lines = [
        f"points={len(report.grid)}",
        f"skipped_outside={report.skipped_outside}",
        f"skipped_domain={cells.count(SKIPPED_DOMAIN)}",
        f"not_converged={not_converged}",
        f"max_abs_dev={fmt(report.max_abs_dev)}",
        f"max_rel_dev={fmt(report.max_rel_dev)}",
        "worst_point=" + (f"{fmt(report.worst_point[0])},{fmt(report.worst_point[1])}"
                          if report.worst_point else ""),
    ]
    if not args.no_timing:
        for m in sweep.methods:
            ts = [t for t, v in zip(report.timings[m], report.values[m]) if isinstance(v, tuple)]
            if ts:
                lines.append(f"median_time_s[{m}]={statistics.median(ts):.6g}")
        if "elliptic7" in sweep.methods and "quad" in sweep.methods:
            lines.append(f"speedup_median[quad/elliptic7]={speedup(report):.4g}")
    print("\n".join(lines))
    if args.fail_above is not None and report.max_rel_dev > args.fail_above:
        print(f"error: max_rel_dev {fmt(report.max_rel_dev)} exceeds {fmt(args.fail_above)}",
              file=sys.stderr)
        return EXIT_FAIL
    if not_converged:
        return EXIT_CONVERGENCE
    return EXIT_OK


def speedup(report: CompareReport) -> float:
    """Median quad2d latency over median elliptic7 latency, on points with both."""
    both = [
        (te, tq)
        for te, tq, ve, vq in zip(report.timings["elliptic7"], report.timings["quad"],
                                  report.values["elliptic7"], report.values["quad"])
        if isinstance(ve, tuple) and isinstance(vq, tuple)
    ]
    if not both:
        return float("nan")
    return statistics.median(tq for _, tq in both) / statistics.median(te for te, _ in both)


# -- golden -------------------------------------------------------------------

def golden_rows(sweep: SweepSpec, cfg: ToleranceConfig, jobs: int = 1) -> list[dict]:
    points, _ = sweep.admissible()

    def one(p):
        tol = quad_tolerance(abs(p[0]) + abs(p[1]), cfg) / GOLDEN_TIGHTEN
        return quad2d(p, cfg.with_(quad_rel_tol=tol))

    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        results = list(pool.map(one, points))
    return [
        {
            "a": fmt(a), "b": fmt(b), "value": fmt(r.value),
            "error_estimate": fmt(r.error_estimate), "nodes_total": r.nodes_total,
            "converged": str(r.converged).lower(),
        }
        for (a, b), r in zip(points, results)
    ]


def cmd_golden(args) -> int:
    cfg = _config(args)
    sweep = _sweep_of(args, ["quad"])
    rows = golden_rows(sweep, cfg, args.jobs)
    if not rows:
        print("error: no admissible points (|a| + |b| <= 1)", file=sys.stderr)
        return EXIT_DOMAIN
    if sweep.format == "json":
        text = _render_rows([
            {**r, "a": float(r["a"]), "b": float(r["b"]), "value": float(r["value"]),
             "error_estimate": float(r["error_estimate"]), "converged": r["converged"] == "true"}
            for r in rows
        ], GOLDEN_FIELDS, "json")
    else:
        text = _render_rows(rows, GOLDEN_FIELDS, "csv")
    if sweep.output_path is None:
        sys.stdout.write(text)
    else:
        try:
            _write(sweep.output_path, text)
        except OSError as exc:
            print(f"error: cannot write {sweep.output_path}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"rows={len(rows)}")
    bad = [r for r in rows if r["converged"] != "true"]
    if bad:
        print(f"error: {len(bad)} point(s) did not converge", file=sys.stderr)
        return EXIT_CONVERGENCE
    return EXIT_OK


# -- selftest -----------------------------------------------------------------

def cmd_selftest(args) -> int:
    cfg = _config(args)
    names = [s.strip() for s in args.suite.split(",")] if args.suite else list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        print(f"error: unknown suite(s) {unknown}; choose from {sorted(SUITES)}", file=sys.stderr)
        return EXIT_DOMAIN
    failed_total = 0
    for name in names:
        checks = run_suite(name, cfg)
        passed = sum(ok for _, ok, _ in checks)
        failed_total += len(checks) - passed
        print(f"suite={name} passed={passed} failed={len(checks) - passed}")
        if args.verbose:
            for label, ok, detail in checks:
                print(f"  {'PASS' if ok else 'FAIL'} {label} {detail}")
        else:
            for label, ok, detail in checks:
                if not ok:
                    print(f"  FAIL {label} {detail}")
    print(f"result={'pass' if failed_total == 0 else 'fail'} backend={BACKEND}")
    return EXIT_OK if failed_total == 0 else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def _tolerance_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("tolerances")
    g.add_argument("--rel-tol", type=float, help="relative stop criterion (AGM, series)")
    g.add_argument("--abs-tol", type=float, help="absolute floor of the stop criterion")
    g.add_argument("--max-terms", type=int, help="series term / F4 block cap")
    g.add_argument("--quad-nodes", type=int, help="Gauss-Legendre nodes per axis at level 0")
    g.add_argument("--quad-levels", type=int, help="maximum node-doubling levels")
    p.add_argument("--no-timing", action="store_true", help="suppress timing fields")


def _grid_flags(p: argparse.ArgumentParser, lo: float, hi: float, steps: int) -> None:
    g = p.add_argument_group("grid")
    for axis in ("a", "b"):
        g.add_argument(f"--{axis}-min", type=float, default=lo)
        g.add_argument(f"--{axis}-max", type=float, default=hi)
        g.add_argument(f"--steps-{axis}", type=int, default=steps)
        g.add_argument(f"--{axis}-values", help=f"comma-separated {axis} values (overrides range)")
    p.add_argument("--out", help="output file")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for the sweep")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellint2",
        description="E(a,b) = int_0^pi int_0^pi sqrt(1 + a cos x + b cos y) dx dy, "
        "evaluated and cross-checked four ways. Values are the full integral, "
        "not the quarter value.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate E(a, b) once")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--method", default="auto", choices=[m.value for m in Method])
    _tolerance_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="cross-method comparison over a grid")
    _grid_flags(p, 0.0, 0.4, 5)
    p.add_argument("--methods", default=",".join(DEFAULT_COMPARE_METHODS))
    p.add_argument("--fail-above", type=float, help="exit 1 if max_rel_dev exceeds this")
    _tolerance_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("golden", help="write quadrature oracle values for a grid")
    _grid_flags(p, 0.0, 0.4, 9)
    _tolerance_flags(p)
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("selftest", help="run the invariant suites")
    p.add_argument("--suite", help=f"comma-separated subset of {','.join(SUITES)}")
    p.add_argument("-v", "--verbose", action="store_true")
    _tolerance_flags(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except Ellint2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
