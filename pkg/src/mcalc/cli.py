"""Command line interface.

Exit status is 0 on success, 1 when a numerical routine fails (or a
verification check does not pass) and 2 on usage errors. Floating point
columns are written with 17 significant digits so that CSV output
round-trips and is byte-identical between runs.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import tempfile
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from mcalc.errors import McalcError
from mcalc.functions import FUNCTION_NAMES, make
from mcalc.integration import m_integral
from mcalc.ode import FIGURE_ALPHAS, FIGURE_PARAMETERS, Curve, figure_curves, solve_eigen
from mcalc.operators import FracOrder, m_derivative_closed, m_derivative_limit
from mcalc.special_fn import SeriesConfig, mittag_leffler

COMMANDS = ("ml", "deriv", "integral", "solve", "figure", "verify")
SUITE_NAMES = ("all", "special", "operators", "integration", "ode", "theorems")

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "pretty"):
            raise UsageError(f"unknown format {self.format!r}")


def fmt(x: float) -> str:
    return f"{x:.17g}"


# {{{ rendering


def _render_table(header: list[str], columns: list[np.ndarray], style: str) -> str:
    rows = zip(*columns)
    buf = io.StringIO()
    if style == "csv":
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(fmt(float(v)) for v in row) + "\n")
    else:
        width = max(20, *(len(h) + 2 for h in header))
        buf.write("".join(h.rjust(width) for h in header) + "\n")
        for row in rows:
            buf.write("".join(f"{float(v):.12g}".rjust(width) for v in row) + "\n")
    return buf.getvalue()


def _render_scalar(label: str, value: float, style: str) -> str:
    if style == "csv":
        return f"{value!r}\n"
    return f"{label} = {value!r}\n"


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
        return

    directory = os.path.dirname(os.path.abspath(output_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".mcalc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, output_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# }}}


# {{{ commands


def _cmd_ml(p: dict[str, Any], style: str) -> tuple[str, int]:
    cfg = SeriesConfig(p.get("rel_tol", 1.0e-15), p.get("max_terms", 200))
    value = mittag_leffler(p["beta"], p["x"], cfg)
    return _render_scalar(f"E_{p['beta']:g}({p['x']:g})", value, style), EXIT_OK


def _cmd_deriv(p: dict[str, Any], style: str) -> tuple[str, int]:
    ord = FracOrder(p["alpha"], p["beta"])
    f = make(p["fn"], ord.alpha)
    if p.get("method", "limit") == "closed":
        value = m_derivative_closed(f, ord, p["t"])
    else:
        value = m_derivative_limit(f, ord, p["t"])
    return _render_scalar(f"D[{p['fn']}]({p['t']:g})", value, style), EXIT_OK


def _cmd_integral(p: dict[str, Any], style: str) -> tuple[str, int]:
    ord = FracOrder(p["alpha"], p["beta"])
    f = make(p["fn"], ord.alpha)
    value = m_integral(f, ord, p["a"], p["t"])
    return _render_scalar(f"I_{p['a']:g}[{p['fn']}]({p['t']:g})", value, style), EXIT_OK


def _cmd_solve(p: dict[str, Any], style: str) -> tuple[str, int]:
    if not p["t_max"] > 0.0:
        raise UsageError(f"--t-max must be positive: got {p['t_max']}")
    if p["n"] < 2:
        raise UsageError(f"--n must be at least 2: got {p['n']}")

    ts = np.linspace(0.0, p["t_max"], p["n"])
    curve = solve_eigen(p["lambda"], p["u0"], FracOrder(p["alpha"], p["beta"]), ts)
    return _render_table(["t", "u"], [curve.ts, curve.us], style), EXIT_OK


def figure_table(which: int, style: str = "csv") -> str:
    curves: list[Curve] = figure_curves(which)
    header = ["t", *(f"u_alpha{alpha!r}" for alpha in FIGURE_ALPHAS)]
    return _render_table(header, [curves[0].ts, *(c.us for c in curves)], style)


def _cmd_figure(p: dict[str, Any], style: str) -> tuple[str, int]:
    which = p["which"]
    if which not in FIGURE_PARAMETERS:
        raise UsageError(f"--which must be one of {sorted(FIGURE_PARAMETERS)}")
    return figure_table(which, style), EXIT_OK


def _cmd_verify(p: dict[str, Any], style: str) -> tuple[str, int]:
    from mcalc.verify import SUITES, run_suite

    suite = p.get("suite", "all")
    if suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {suite!r}")

    buf = io.StringIO()
    if style == "csv":
        buf.write("suite,check,passed,max_residual,tol,cases\n")

    failures = 0
    for name in list(SUITES) if suite == "all" else [suite]:
        for check in run_suite(name):
            failures += not check.passed
            if style == "csv":
                buf.write(
                    f"{name},\"{check.name}\",{int(check.passed)},"
                    f"{fmt(check.max_residual)},{fmt(check.tol)},{check.cases}\n"
                )
            else:
                status = "PASS" if check.passed else "FAIL"
                buf.write(
                    f"{status}  {name:<11} {check.name:<55} "
                    f"max={check.max_residual:.3e} tol={check.tol:.0e} n={check.cases}\n"
                )

    if style == "pretty":
        buf.write(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}\n")
    return buf.getvalue(), EXIT_NUMERICAL if failures else EXIT_OK


_HANDLERS = {
    "ml": _cmd_ml,
    "deriv": _cmd_deriv,
    "integral": _cmd_integral,
    "solve": _cmd_solve,
    "figure": _cmd_figure,
    "verify": _cmd_verify,
}


def run(config: RunConfig) -> int:
    """Execute one command and write its output; returns the exit status."""
    try:
        text, status = _HANDLERS[config.command](dict(config.parameters), config.format)
    except UsageError as exc:
        print(f"mcalc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except McalcError as exc:
        print(f"mcalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    _emit(text, config.output_path)
    return status


# }}}


# {{{ argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", dest="output_path", default=None,
                        help="write to this file (atomically) instead of stdout")
    common.add_argument("--format", choices=("csv", "pretty"), default="csv")

    parser = argparse.ArgumentParser(
        prog="mcalc",
        description="Local M-derivative, M-integral and linear M-ODE solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ml", parents=[common], help="evaluate E_beta(x)")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--rel-tol", type=float, default=1.0e-15)
    p.add_argument("--max-terms", type=int, default=200)

    def order_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)

    p = sub.add_parser("deriv", parents=[common], help="local M-derivative of a named function")
    order_args(p)
    p.add_argument("--fn", choices=FUNCTION_NAMES, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--method", choices=("limit", "closed"), default="limit")

    p = sub.add_parser("integral", parents=[common], help="M-integral of a named function")
    order_args(p)
    p.add_argument("--fn", choices=FUNCTION_NAMES, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("solve", parents=[common], help="sample the solution of D u = lambda u")
    order_args(p)
    p.add_argument("--lambda", dest="lambda", type=float, required=True)
    p.add_argument("--u0", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("figure", parents=[common], help="curve family of a reference plot")
    p.add_argument("--which", type=int, choices=sorted(FIGURE_PARAMETERS), required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")

    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    output_path = ns.pop("output_path")
    style = ns.pop("format")
    return RunConfig(command, ns, output_path, style)


def main(argv: Sequence[str] | None = None) -> int:
    return run(parse_config(argv))


# }}}


if __name__ == "__main__":
    sys.exit(main())
