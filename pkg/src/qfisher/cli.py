"""Command-line front end: ``qfisher table | figure | verify``.

Exit codes: 0 success, 1 verification or convergence failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .fisher import build_report
from .quadrature import QuadratureConfig
from .systems import BoundState, System, hydrogen_energy, hydrogen_phi, hydrogen_psi, well_energy, well_psi
from .verify import FAULTS, run_verification

TABLE_COLUMNS = [
    "n",
    "energy",
    "i_rho_numeric",
    "i_rho_closed",
    "i_gamma_numeric",
    "i_gamma_closed",
    "product",
    "discrepancy",
    "converged",
]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    lo: float
    hi: float
    points: int

    @classmethod
    def parse(cls, text: str) -> "Grid":
        try:
            lo, hi, pts = text.split(":")
            grid = cls(float(lo), float(hi), int(pts))
        except ValueError:
            raise UsageError(f"grid must look like MIN:MAX:POINTS, got {text!r}") from None
        if grid.points < 2 or not grid.lo < grid.hi:
            raise UsageError("grid needs MIN < MAX and at least 2 points")
        return grid

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


def _num(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_num(row[k]) for k in header])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> QuadratureConfig:
    defaults = QuadratureConfig()
    try:
        return QuadratureConfig(
            abs_tol=defaults.abs_tol if args.abs_tol is None else args.abs_tol,
            rel_tol=defaults.rel_tol if args.rel_tol is None else args.rel_tol,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def table_rows(system: System, n_min: int, n_max: int, width: float, config: QuadratureConfig) -> list[dict]:
    """One record per quantum index, keyed by ``TABLE_COLUMNS``."""
    rows = []
    for n in range(n_min, n_max + 1):
        state = BoundState(system, n, width)
        rep = build_report(state, config)
        energy = hydrogen_energy(n) if system is System.HYDROGEN else well_energy(n, width)
        rows.append(
            {
                "n": n,
                "energy": energy,
                "i_rho_numeric": rep.i_rho_numeric,
                "i_rho_closed": rep.i_rho_closed,
                "i_gamma_numeric": rep.i_gamma_numeric,
                "i_gamma_closed": rep.i_gamma_closed,
                "product": rep.product,
                "discrepancy": rep.max_abs_discrepancy,
                "converged": rep.converged,
            }
        )
    return rows


def cmd_table(args) -> int:
    if not 1 <= args.n_min <= args.n_max:
        raise UsageError("need 1 <= n-min <= n-max")
    if not args.width > 0:
        raise UsageError("width must be positive")
    rows = table_rows(System(args.system), args.n_min, args.n_max, args.width, _config(args))
    if args.format == "csv":
        text = _csv(TABLE_COLUMNS, rows)
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _emit(text, args.output)
    return EXIT_OK if all(r["converged"] for r in rows) else EXIT_FAIL


def figure_rows(which: str, n_list: list[int], grid: np.ndarray, system: System, width: float):
    """Plot-ready columns for the position or momentum waveforms."""
    if which == "position":
        header = ["x"] + [f"psi_{n}" for n in n_list]
        if system is System.HYDROGEN:
            if np.any(grid < 0):
                raise UsageError("hydrogen waveforms are defined for x >= 0")
            cols = [hydrogen_psi(n, grid) for n in n_list]
        else:
            if np.any(np.abs(grid) > width / 2):
                raise UsageError(f"well grid must lie inside [-{width / 2}, {width / 2}]")
            cols = [well_psi(n, width, grid) for n in n_list]
        data = {"x": grid, **{f"psi_{n}": c for n, c in zip(n_list, cols)}}
    else:
        if system is not System.HYDROGEN:
            raise UsageError("momentum figure data is available for hydrogen only")
        if np.any(grid < 0):
            raise UsageError("momentum figure covers p >= 0 (Re Phi is even, Im Phi odd)")
        header = ["p"]
        data = {"p": grid}
        for n in n_list:
            phi = hydrogen_phi(n, grid)
            header += [f"re_phi_{n}", f"im_phi_{n}"]
            data[f"re_phi_{n}"] = phi.real
            data[f"im_phi_{n}"] = phi.imag
    rows = [{k: float(data[k][i]) for k in header} for i in range(len(grid))]
    return header, rows


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"n-list must be comma-separated integers, got {text!r}") from None
    if not ns or min(ns) < 1:
        raise UsageError("n-list needs positive integers")
    return ns


def cmd_figure(args) -> int:
    grid = Grid.parse(args.grid).values()
    header, rows = figure_rows(args.which, _parse_n_list(args.n_list), grid, System(args.system), args.width)
    if args.format == "csv":
        text = _csv(header, rows)
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError("n-max must be positive")
    report = run_verification(n_max=args.n_max, config=_config(args), fault=args.fault)
    if args.json:
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        lines = []
        for c in report.checks:
            verdict = "PASS" if c.passed else "FAIL"
            lines.append(f"{verdict} {c.name}: {c.value:.3e} {c.comparison} {c.tolerance:g}  ({c.detail})")
        if report.fault:
            lines.append(f"fault injected: {report.fault}")
        lines.append("all checks passed" if report.passed else "failed: " + ", ".join(report.failures))
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def _tolerance_args(p):
    p.add_argument("--abs-tol", type=float, default=None, help="absolute quadrature tolerance")
    p.add_argument("--rel-tol", type=float, default=None, help="relative quadrature tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfisher",
        description="Fisher information of the half-line hydrogen atom and the infinite well.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="Fisher information table, one row per n")
    t.add_argument("--system", choices=[s.value for s in System], default="hydrogen")
    t.add_argument("--n-min", type=int, default=1)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--width", type=float, default=1.0, help="well width (ignored for hydrogen)")
    _tolerance_args(t)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--output", default=None)
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("figure", help="waveform samples for plotting")
    f.add_argument("--which", choices=["position", "momentum"], required=True)
    f.add_argument("--n-list", default="1,2,3,4")
    f.add_argument("--grid", required=True, help="MIN:MAX:POINTS")
    f.add_argument("--system", choices=[s.value for s in System], default="hydrogen")
    f.add_argument("--width", type=float, default=1.0)
    f.add_argument("--format", choices=["csv", "json"], default="csv")
    f.add_argument("--output", default=None)
    f.set_defaults(func=cmd_figure)

    v = sub.add_parser("verify", help="run every numerical cross-check")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--fault", choices=sorted(FAULTS), default=None, help="inject a deliberate fault (demo only)")
    v.add_argument("--json", action="store_true", help="emit the report as JSON")
    _tolerance_args(v)
    v.add_argument("--output", default=None)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qfisher: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
