"""Command-line runner: verification suites, root report, tables, scans.

Subcommands:

* ``verify`` — run certification suites (default: all nine) and write one
  report per suite; exit status 0 only if every instance passes.
* ``root``   — locate the positive root of the degree-8 threshold polynomial
  and report it together with its square root and residual.
* ``table``  — emit ``bound_id,x,r,value`` rows for plotting or spot checks.
* ``scan``   — slack-vs-radius curves of the extremal-family functionals,
  with the empirical zero-crossing radius in the summary.

Exit codes: 0 success, 1 verdict failure, 2 usage error.  All output is
deterministic for a fixed configuration (fixed seeds, fixed grids, fixed
float formatting), so identical runs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import bounds
from .bounds import (
    R_HI,
    R_THM5,
    RHS_SCALE,
    bound_basic,
    bound_cor1,
    bound_prop1,
    bound_thm1_B,
    bound_thm1_B2,
    remark6_poly,
    thm_rhs,
)
from .numerics import bisect, sign_changes
from .verify import (
    ALL_SUITES,
    ScanGrid,
    VerdictReport,
    _family_peak,
    _thm2_family_lhs,
    _thm5_family_lhs,
    run_suite,
)

__all__ = ["RunConfig", "main"]


class UsageError(Exception):
    """Invalid invocation or configuration; maps to exit status 2."""


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class RunConfig:
    """Flat, file-representable configuration for the ``verify`` subcommand."""

    suites: Tuple[str, ...] = ALL_SUITES
    out: Optional[str] = None
    format: str = "csv"
    seed: int = 42
    tol: float = 1e-10
    grid: Optional[Tuple[float, float, int]] = None
    truncation: int = 256
    r_values: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        unknown = [s for s in self.suites if s not in ALL_SUITES]
        if unknown:
            raise UsageError(
                f"unknown suite(s) {', '.join(unknown)}; known: {', '.join(ALL_SUITES)}"
            )
        if not self.suites:
            raise UsageError("at least one suite must be selected")
        if self.format not in ("csv", "json"):
            raise UsageError("format must be 'csv' or 'json'")
        if self.tol <= 0.0:
            raise UsageError("tol must be positive")
        if self.truncation < 8:
            raise UsageError("truncation must be at least 8")

    def to_text(self) -> str:
        lines = [f"suite = {','.join(self.suites)}", f"format = {self.format}"]
        if self.out is not None:
            lines.append(f"out = {self.out}")
        lines.append(f"seed = {self.seed}")
        lines.append(f"tol = {self.tol!r}")
        if self.grid is not None:
            lo, hi, steps = self.grid
            lines.append(f"grid = {lo!r}:{hi!r}:{steps}")
        lines.append(f"truncation = {self.truncation}")
        if self.r_values is not None:
            lines.append(f"r_values = {','.join(repr(v) for v in self.r_values)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        values: Dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"malformed config line: {raw!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
        kwargs: Dict[str, object] = {}
        for key, value in values.items():
            if key == "suite":
                kwargs["suites"] = tuple(s for s in value.split(",") if s)
            elif key == "out":
                kwargs["out"] = value
            elif key == "format":
                kwargs["format"] = value
            elif key == "seed":
                kwargs["seed"] = _parse_int(key, value)
            elif key == "tol":
                kwargs["tol"] = _parse_float(key, value)
            elif key == "grid":
                kwargs["grid"] = _parse_grid(value)
            elif key == "truncation":
                kwargs["truncation"] = _parse_int(key, value)
            elif key == "r_values":
                kwargs["r_values"] = tuple(
                    _parse_float(key, v) for v in value.split(",") if v
                )
            else:
                raise UsageError(f"unknown config key {key!r}")
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return cls.from_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc

    def scan_grid(self) -> ScanGrid:
        kwargs: Dict[str, object] = dict(
            seed=self.seed,
            tolerance=self.tol,
            truncation=self.truncation,
            r_values=self.r_values,
        )
        if self.grid is not None:
            kwargs["x_range"] = self.grid
        try:
            return ScanGrid(**kwargs)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise UsageError(f"{key} expects an integer, got {value!r}") from exc


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError as exc:
        raise UsageError(f"{key} expects a number, got {value!r}") from exc


def _parse_grid(value: str) -> Tuple[float, float, int]:
    parts = value.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid expects lo:hi:steps, got {value!r}")
    lo = _parse_float("grid lo", parts[0])
    hi = _parse_float("grid hi", parts[1])
    steps = _parse_int("grid steps", parts[2])
    if not lo < hi or steps < 2:
        raise UsageError("grid requires lo < hi and steps >= 2")
    return (lo, hi, steps)


# ---------------------------------------------------------------------------
# report serialization

_CSV_HEADER = "suite_id,instance_id,params,lhs,rhs,slack,tail_cert,pass"


def _report_records(report: VerdictReport) -> List[Dict[str, str]]:
    records = []
    for inst in sorted(report.instances, key=lambda i: i.instance_id):
        params = ";".join(
            f"{k}={format(v, '.10g')}" for k, v in sorted(inst.params.items())
        )
        records.append(
            {
                "suite_id": report.suite_id,
                "instance_id": inst.instance_id,
                "params": params,
                "lhs": _fmt(inst.lhs),
                "rhs": _fmt(inst.rhs),
                "slack": _fmt(inst.slack),
                "tail_cert": _fmt(inst.tail_certificate),
                "pass": "true" if inst.passes(report.tolerance) else "false",
            }
        )
    return records


def _render_report(report: VerdictReport, fmt: str) -> str:
    records = _report_records(report)
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(_CSV_HEADER + "\n")
    for rec in records:
        buf.write(
            ",".join(
                rec[col]
                for col in (
                    "suite_id",
                    "instance_id",
                    "params",
                    "lhs",
                    "rhs",
                    "slack",
                    "tail_cert",
                    "pass",
                )
            )
            + "\n"
        )
    return buf.getvalue()


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise RuntimeError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# verify


def _ordered_selection(suites: Sequence[str]) -> Tuple[str, ...]:
    seen = set(suites)
    return tuple(s for s in ALL_SUITES if s in seen)


def cmd_verify(config: RunConfig, stdout=None) -> int:
    out = stdout or sys.stdout
    suites = _ordered_selection(config.suites)
    grid = config.scan_grid()
    with ThreadPoolExecutor(max_workers=min(4, len(suites))) as pool:
        futures = {s: pool.submit(run_suite, s, grid) for s in suites}
        reports = {s: futures[s].result() for s in suites}
    if config.out is not None:
        os.makedirs(config.out, exist_ok=True)
    all_passed = True
    for suite in suites:
        report = reports[suite]
        all_passed = all_passed and report.passed
        status = "PASS" if report.passed else "FAIL"
        line = (
            f"suite {suite}: {status} "
            f"(instances={len(report.instances)}, "
            f"worst_slack={_fmt(report.worst_slack)}"
        )
        if not report.passed:
            line += f", failures={len(report.witnesses)}"
        line += ")"
        print(line, file=out)
        for witness in report.witnesses[:5]:
            items = ";".join(
                f"{k}={format(v, '.10g')}" if isinstance(v, float) else f"{k}={v}"
                for k, v in sorted(witness.items())
            )
            print(f"  witness: {items}", file=out)
        if config.out is not None:
            path = os.path.join(config.out, f"{suite}.{config.format}")
            _write_text(path, _render_report(report, config.format))
            print(f"  wrote {path}", file=out)
    print(f"overall: {'PASS' if all_passed else 'FAIL'}", file=out)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# root


def cmd_root(stdout=None) -> int:
    out = stdout or sys.stdout
    brackets = sign_changes(remark6_poly, 0.0, 0.5, 10000)
    if not brackets:
        print("error: no sign change found in (0, 0.5)", file=sys.stderr)
        return 1
    lo, hi = brackets[0]
    result = bisect(remark6_poly, lo, hi, tol=1e-15)
    rho = result.root
    sqrt_rho = math.sqrt(rho)
    residual = abs(remark6_poly(rho))
    print(f"rho = {_fmt(rho)}", file=out)
    print(f"sqrt_rho = {_fmt(sqrt_rho)}", file=out)
    print(f"residual = {_fmt(residual)}", file=out)
    print(f"bracket = [{_fmt(lo)}, {_fmt(hi)}]", file=out)
    ok_value = abs(sqrt_rho - 0.39466) <= 5e-5
    ok_residual = residual <= 1e-12
    ok_bracket = 0.15 < lo and hi < 0.16
    print(
        "checks: sqrt_rho within 5e-05 of 0.39466: "
        f"{'ok' if ok_value else 'FAIL'}; residual <= 1e-12: "
        f"{'ok' if ok_residual else 'FAIL'}; bracket inside (0.15, 0.16): "
        f"{'ok' if ok_bracket else 'FAIL'}",
        file=out,
    )
    return 0 if (ok_value and ok_residual and ok_bracket) else 1


# ---------------------------------------------------------------------------
# table


def _table_value(bound_id: str, x: Optional[float], r: float) -> float:
    if bound_id == "basic":
        return bound_basic(r)
    if bound_id == "prop1":
        n = 1 if x is None else int(round(x))
        return bound_prop1(n, r)
    if bound_id == "thm1_B":
        if x is None:
            raise UsageError("thm1_B needs --x (the family parameter)")
        return bound_thm1_B(x, r)
    if bound_id == "thm1_B2":
        if x is None:
            raise UsageError("thm1_B2 needs --x (the family parameter)")
        return bound_thm1_B2(x, r)
    if bound_id == "cor1":
        if x is None:
            raise UsageError("cor1 needs --x (the first coefficient a)")
        return bound_cor1(x, r)
    if bound_id in ("thm2", "thm3", "cor2", "thm5"):
        return thm_rhs(bound_id, r)
    raise UsageError(f"unknown bound id {bound_id!r}")


_TABLE_BOUNDS = (
    "basic",
    "prop1",
    "thm1_B",
    "thm1_B2",
    "cor1",
    "thm2",
    "thm3",
    "cor2",
    "thm5",
)


def cmd_table(
    bound_ids: Sequence[str],
    r_range: Tuple[float, float, int],
    x: Optional[float],
    out_path: Optional[str],
    stdout=None,
) -> int:
    out = stdout or sys.stdout
    for bid in bound_ids:
        if bid not in _TABLE_BOUNDS:
            raise UsageError(
                f"unknown bound id {bid!r}; known: {', '.join(_TABLE_BOUNDS)}"
            )
    lo, hi, steps = r_range
    radii = np.linspace(lo, hi, steps)
    lines = ["bound_id,x,r,value"]
    x_cell = "" if x is None else _fmt(x)
    for bid in bound_ids:
        for r in radii:
            try:
                value = _table_value(bid, x, float(r))
                cell = _fmt(value)
            except UsageError:
                raise
            except ValueError:
                cell = "out_of_range"
            lines.append(f"{bid},{x_cell},{_fmt(float(r))},{cell}")
    text = "\n".join(lines) + "\n"
    if out_path is not None:
        _write_text(out_path, text)
        print(f"wrote {out_path}", file=out)
    else:
        out.write(text)
    return 0


# ---------------------------------------------------------------------------
# scan

_SCAN_TARGETS = ("problem1", "problem2", "thm5_sharpness")
_SCAN_DEFAULT_RANGE = {
    "problem1": (0.37, 0.42, 26),
    "problem2": (0.37, 0.43, 31),
    "thm5_sharpness": (0.36, 0.40, 26),
}


def _scan_functional(target: str):
    # problem1 and problem2 probe the same squared-weight sum against
    # (27/4) r^4 (their theorems share one left side, on nested classes);
    # thm5_sharpness probes the product functional against (27/8) r^4.
    if target in ("problem1", "problem2"):
        return _thm2_family_lhs, RHS_SCALE["thm2"]
    return _thm5_family_lhs, RHS_SCALE["thm5"]


def cmd_scan(
    target: str,
    r_range: Tuple[float, float, int],
    grid: ScanGrid,
    out_path: Optional[str],
    stdout=None,
) -> int:
    out = stdout or sys.stdout
    if target not in _SCAN_TARGETS:
        raise UsageError(
            f"unknown scan target {target!r}; known: {', '.join(_SCAN_TARGETS)}"
        )
    functional, scale = _scan_functional(target)
    lo, hi, steps = r_range
    radii = np.linspace(lo, hi, steps)
    lines = ["r,max_lhs,rhs,slack,x_at_max"]
    slacks: List[float] = []
    for r in radii:
        peak, arg = _family_peak(functional, float(r), grid)
        rhs = scale * float(r) ** 4
        slack = rhs - peak
        slacks.append(slack)
        lines.append(
            f"{_fmt(float(r))},{_fmt(peak)},{_fmt(rhs)},{_fmt(slack)},{_fmt(arg)}"
        )
    text = "\n".join(lines) + "\n"
    if out_path is not None:
        _write_text(out_path, text)
        print(f"wrote {out_path}", file=out)
    else:
        out.write(text)

    crossing = None
    for i in range(len(radii) - 1):
        if slacks[i] == 0.0:
            crossing = float(radii[i])
            break
        if slacks[i] * slacks[i + 1] < 0.0:
            result = bisect(
                lambda r: scale * r**4 - _family_peak(functional, r, grid)[0],
                float(radii[i]),
                float(radii[i + 1]),
                tol=1e-12,
            )
            crossing = result.root
            break
    print(f"target = {target}", file=out)
    if crossing is None:
        print("crossing_radius = none (no sign change on this range)", file=out)
    else:
        print(f"crossing_radius = {_fmt(crossing)}", file=out)
    if target in ("problem1", "problem2"):
        print("note = exploratory - open problem", file=out)
        if target == "problem1" and crossing is not None:
            if abs(crossing - 0.39466) <= 1e-3:
                print("note = conjecture-consistent (crossing within 1e-3 of 0.39466)", file=out)
    else:
        print(f"reference_radius = {_fmt(R_THM5)}", file=out)
        print(
            "note = threshold radius from the closed form (1/(4*sqrt(3)))*sqrt(59-sqrt(2713))",
            file=out,
        )
    return 0


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse errors through UsageError
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="blochsums",
        description="Numerical certification of sharp coefficient-sum bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run certification suites")
    p_verify.add_argument(
        "--suite",
        action="append",
        default=None,
        help="suite id (repeatable, or comma-separated); default: all",
    )
    p_verify.add_argument("--out", default=None, help="directory for report files")
    p_verify.add_argument("--format", choices=("csv", "json"), default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--grid", default=None, help="x grid as lo:hi:steps")
    p_verify.add_argument("--truncation", type=int, default=None, metavar="N")
    p_verify.add_argument(
        "--r-values",
        default=None,
        help="comma-separated radius overrides (thm5 case replay)",
    )
    p_verify.add_argument("--config", default=None, help="flat key=value config file")

    sub.add_parser("root", help="report the positive root of the threshold polynomial")

    p_table = sub.add_parser("table", help="emit bound values over a radius range")
    p_table.add_argument(
        "--bounds", required=True, help="comma-separated bound ids"
    )
    p_table.add_argument("--grid", default="0:0.55:12", help="r range as lo:hi:steps")
    p_table.add_argument(
        "--x", type=float, default=None, help="second parameter (x, a, or n)"
    )
    p_table.add_argument("--out", default=None, help="output CSV path")

    p_scan = sub.add_parser("scan", help="slack-vs-radius curve for a family scan")
    p_scan.add_argument("--target", required=True, help="|".join(_SCAN_TARGETS))
    p_scan.add_argument("--grid", default=None, help="r range as lo:hi:steps")
    p_scan.add_argument("--seed", type=int, default=42)
    p_scan.add_argument("--tol", type=float, default=1e-10)
    p_scan.add_argument("--out", default=None, help="output CSV path")
    return parser


def _verify_config(args: argparse.Namespace) -> RunConfig:
    if args.config is not None:
        config = RunConfig.from_file(args.config)
    else:
        config = RunConfig()
    updates: Dict[str, object] = {}
    if args.suite is not None:
        suites: List[str] = []
        for chunk in args.suite:
            suites.extend(s for s in chunk.split(",") if s)
        updates["suites"] = tuple(suites)
    if args.out is not None:
        updates["out"] = args.out
    if args.format is not None:
        updates["format"] = args.format
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.tol is not None:
        updates["tol"] = args.tol
    if args.grid is not None:
        updates["grid"] = _parse_grid(args.grid)
    if args.truncation is not None:
        updates["truncation"] = args.truncation
    if args.r_values is not None:
        updates["r_values"] = tuple(
            _parse_float("r_values", v) for v in args.r_values.split(",") if v
        )
    if updates:
        config = dataclasses.replace(config, **updates)
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return cmd_verify(_verify_config(args))
        if args.command == "root":
            return cmd_root()
        if args.command == "table":
            bound_ids = tuple(b for b in args.bounds.split(",") if b)
            if not bound_ids:
                raise UsageError("--bounds must name at least one bound id")
            return cmd_table(bound_ids, _parse_grid(args.grid), args.x, args.out)
        if args.command == "scan":
            r_range = (
                _parse_grid(args.grid)
                if args.grid is not None
                else _SCAN_DEFAULT_RANGE[args.target]
                if args.target in _SCAN_DEFAULT_RANGE
                else (0.36, 0.41, 26)
            )
            grid = ScanGrid(seed=args.seed, tolerance=args.tol)
            return cmd_scan(args.target, r_range, grid, args.out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
