"""Convergence benchmark CLI.

Sweeps the truncation level n for one target function and one or more
approximation methods, measures the worst observed error over a fixed
403-point evaluation grid (+-2^i for i = -50, -49.5, ..., 50, plus 0),
computes the a-priori bound where one exists, and emits the results as
CSV.  Optionally renders a convergence figure next to the CSV.

Exit status: 0 on success, 1 on usage or parameter-regime errors, 2 when
--check-bounds finds an observed error above its bound.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .approx import build, max_error_on_grid
from .bounds import de_bound, se_bound
from .params import ParameterRegimeError
from .sinc import SincGrid
from .testfns import FunctionId, Method, PresetKey, preset, reference_function
from .transforms import TransformKind

__all__ = [
    "ExperimentRow",
    "RunConfig",
    "evaluation_grid",
    "format_rows",
    "main",
    "parse_rows",
    "run",
]

CSV_HEADER = "method,function,n,h,M,N,observed_max_error,error_bound"

_TRANSFORM_FOR_METHOD = {
    Method.T21: TransformKind.SE_PSI5,
    Method.T22: TransformKind.SE_PSITILDE5,
    Method.T23: TransformKind.DE_PHI5,
}

# The DE sweep stops earlier: its observed error hits the double-precision
# floor well before n = 60, so longer sweeps only repeat the plateau.
_DEFAULT_SWEEP = {
    Method.T21: range(2, 143, 5),
    Method.T22: range(2, 143, 5),
    Method.T23: range(2, 58, 5),
}


@dataclass(frozen=True)
class ExperimentRow:
    """One benchmark measurement; error_bound is None for t21 (the psi5
    variant has no computable bound constant)."""

    method: Method
    function: FunctionId
    n: int
    grid: SincGrid
    observed_max_error: float
    error_bound: float | None


@dataclass(frozen=True)
class RunConfig:
    function: FunctionId
    methods: tuple[Method, ...]
    n_values: tuple[int, ...] | None = None  # None: per-method default sweep
    check_bounds: bool = False


def evaluation_grid() -> list[float]:
    """The fixed 403-point error grid, ascending."""
    magnitudes = [2.0 ** (i / 2.0) for i in range(-100, 101)]
    return sorted([-v for v in magnitudes] + [0.0] + magnitudes)


def _bound_for(method: Method, p, n: int) -> float | None:
    if method is Method.T22:
        return se_bound(p, n).bound_value
    if method is Method.T23:
        return de_bound(p, n).bound_value
    return None


def run(config: RunConfig) -> tuple[list[ExperimentRow], int]:
    """Compute all rows in deterministic (method, n) order.

    Returns the rows and the dominance status: 0, or 2 if check_bounds is
    set and any observed error exceeds its bound.  Regime errors propagate
    as ParameterRegimeError.
    """
    if config.n_values is not None:
        if not config.n_values:
            raise ValueError("n sweep must not be empty")
        if any(n < 1 for n in config.n_values):
            raise ValueError(f"n values must be positive, got {list(config.n_values)}")
        if list(config.n_values) != sorted(set(config.n_values)):
            raise ValueError(f"n values must be strictly ascending, got {list(config.n_values)}")

    points = evaluation_grid()
    f = reference_function(config.function)
    rows = []
    methods = sorted(set(config.methods), key=lambda m: m.value)
    for method in methods:
        p = preset(PresetKey(config.function, method))
        sweep = config.n_values if config.n_values is not None else _DEFAULT_SWEEP[method]
        for n in sweep:
            approximant = build(f, _TRANSFORM_FOR_METHOD[method], p, n)
            observed = max_error_on_grid(approximant, f, points)
            rows.append(
                ExperimentRow(
                    method=method,
                    function=config.function,
                    n=n,
                    grid=approximant.grid,
                    observed_max_error=observed,
                    error_bound=_bound_for(method, p, n),
                )
            )
        print(f"{config.function.value} {method.value}: {len(rows)} rows total", file=sys.stderr)

    status = 0
    if config.check_bounds:
        for row in rows:
            if row.error_bound is not None and row.observed_max_error > row.error_bound:
                print(
                    f"bound violated: {row.method.value} {row.function.value} n={row.n}: "
                    f"observed {row.observed_max_error!r} > bound {row.error_bound!r}",
                    file=sys.stderr,
                )
                status = 2
    return rows, status


def format_rows(rows: list[ExperimentRow]) -> str:
    """Render rows as CSV.  Floats use Python's shortest round-trip repr,
    so parsing the text reproduces every value bit for bit."""
    lines = [CSV_HEADER]
    for r in rows:
        bound = "" if r.error_bound is None else repr(r.error_bound)
        lines.append(
            f"{r.method.value},{r.function.value},{r.n},{r.grid.h!r},"
            f"{r.grid.m},{r.grid.n},{r.observed_max_error!r},{bound}"
        )
    return "\n".join(lines) + "\n"


def parse_rows(text: str) -> list[ExperimentRow]:
    """Inverse of format_rows."""
    lines = text.strip("\n").split("\n")
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {lines[0] if lines else '(empty)'}")
    rows = []
    for line in lines[1:]:
        method, function, n, h, m, n_right, observed, bound = line.split(",")
        rows.append(
            ExperimentRow(
                method=Method(method),
                function=FunctionId(function),
                n=int(n),
                grid=SincGrid(h=float(h), m=int(m), n=int(n_right)),
                observed_max_error=float(observed),
                error_bound=None if bound == "" else float(bound),
            )
        )
    return rows


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; 2 is reserved here
    # for bound violations, so remap usage problems to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="desinc-bench",
        description="Sweep n, measure max approximation error on the fixed "
        "403-point grid, compare against the computable bounds, and emit CSV.",
    )
    parser.add_argument(
        "--function",
        choices=[f.value for f in FunctionId],
        required=True,
        help="which reference function to benchmark",
    )
    parser.add_argument(
        "--method",
        action="append",
        choices=[m.value for m in Method],
        help="approximation method; repeatable (default: all three)",
    )
    parser.add_argument("--n-from", type=int, help="first n of the sweep")
    parser.add_argument("--n-to", type=int, help="last n of the sweep (inclusive)")
    parser.add_argument("--n-step", type=int, default=5, help="sweep stride (default 5)")
    parser.add_argument(
        "--n-list",
        help="comma-separated n values; overrides --n-from/--n-to/--n-step",
    )
    parser.add_argument("--out", help="CSV output path (default: stdout)")
    parser.add_argument(
        "--check-bounds",
        action="store_true",
        help="exit with status 2 if any observed error exceeds its bound",
    )
    parser.add_argument(
        "--plot-dir",
        help="also render a convergence figure (PNG) into this directory",
    )
    return parser


def _n_values(args) -> tuple[int, ...] | None:
    if args.n_list is not None:
        try:
            return tuple(int(part) for part in args.n_list.split(","))
        except ValueError:
            raise ValueError(f"--n-list must be a comma-separated list of integers, got {args.n_list!r}")
    if args.n_from is None and args.n_to is None:
        return None
    if args.n_from is None or args.n_to is None:
        raise ValueError("--n-from and --n-to must be given together")
    if args.n_step < 1:
        raise ValueError(f"--n-step must be >= 1, got {args.n_step}")
    return tuple(range(args.n_from, args.n_to + 1, args.n_step))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        config = RunConfig(
            function=FunctionId(args.function),
            methods=tuple(Method(m) for m in args.method) if args.method else tuple(Method),
            n_values=_n_values(args),
            check_bounds=args.check_bounds,
        )
        rows, status = run(config)
    except (ParameterRegimeError, ValueError) as exc:
        print(f"desinc-bench: error: {exc}", file=sys.stderr)
        return 1

    text = format_rows(rows)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)

    if args.plot_dir:
        from .plotting import render_convergence

        figure_path = render_convergence(rows, args.plot_dir)
        print(f"figure written to {figure_path}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
