"""Command-line interface.

Four subcommands: transform a signal CSV, dump a kernel as CSV, write the
eigenfunction files, and run the verification suite as JSON lines. The CLI
is a thin shell; every behavior is reachable through the library API.
Angles are radians throughout.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import nullcontext
from dataclasses import dataclass, replace
from pathlib import Path

from .grid_signal import (Family, TransformSpec, l2_norm, make_grid,
                          read_signal, write_signal)
from .hermite_basis import build_basis
from .kernels import SingularAction, frft_kernel, gfrt_kernel, singular_action
from .transform_engine import transform_signal
from .property_verify import SuiteConfig, run_suite, suite_passed

DEFAULT_GRID_N = 1024
DEFAULT_GRID_L = 10.0
DEFAULT_MAX_ORDER = 40


@dataclass(frozen=True)
class CliConfig:
    """Resolved arguments of one CLI invocation."""

    subcommand: str
    family: Family | None = None
    alpha: float = 0.0
    theta: float | None = None
    grid_n: int = DEFAULT_GRID_N
    grid_l: float = DEFAULT_GRID_L
    method: str = "quad"
    max_order: int = DEFAULT_MAX_ORDER
    input_path: str | None = None
    output_path: str | None = None
    suite: str = "default"

    def validate(self) -> None:
        if self.method == "spectral" and self.family is not Family.FRFT:
            raise ValueError("the spectral method requires --family frft")
        if self.family is Family.GFRT and self.theta is None:
            raise ValueError("--theta is required for --family gfrt")
        if self.family is Family.FRFT and self.theta is not None:
            raise ValueError("--theta applies to --family gfrt only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracft",
        description="fractional Fourier and hyperbolic fractional transforms "
                    "on sampled signals (angles in radians)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    tr = sub.add_parser("transform", help="transform a signal CSV")
    tr.add_argument("--family", choices=["frft", "gfrt"], required=True)
    tr.add_argument("--alpha", type=float, required=True,
                    help="transform order (radians for frft, rapidity for gfrt)")
    tr.add_argument("--theta", type=float, default=None,
                    help="generator tilt in (-pi/2, pi/2), gfrt only")
    tr.add_argument("--input", required=True, help="input signal CSV (x,re,im)")
    tr.add_argument("--output", default=None,
                    help="output CSV path (default: stdout)")
    tr.add_argument("--method", choices=["quad", "spectral"], default="quad")
    tr.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                    help="basis truncation for --method spectral")
    tr.add_argument("--grid-n", type=int, default=None,
                    help="expected grid size; must match the input file")
    tr.add_argument("--grid-l", type=float, default=None,
                    help="expected grid half-width; must match the input file")

    kr = sub.add_parser("kernel", help="dump raw kernel values as p,x,re,im CSV")
    kr.add_argument("--family", choices=["frft", "gfrt"], required=True)
    kr.add_argument("--alpha", type=float, required=True)
    kr.add_argument("--theta", type=float, default=None)
    kr.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    kr.add_argument("--grid-l", type=float, default=DEFAULT_GRID_L)
    kr.add_argument("--output", default=None,
                    help="output CSV path (default: stdout)")

    ei = sub.add_parser("eigen", help="write eigenfunction signal CSVs")
    ei.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    ei.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    ei.add_argument("--grid-l", type=float, default=DEFAULT_GRID_L)
    ei.add_argument("--output-dir", default=".",
                    help="directory for eigenfunction_NNN.csv files")

    ve = sub.add_parser("verify", help="run the verification suite (JSON lines)")
    ve.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    ve.add_argument("--grid-l", type=float, default=DEFAULT_GRID_L)
    ve.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    ve.add_argument("--suite", choices=["default", "none"], default="default")

    return parser


def _out_stream(path: str | None):
    if path is None:
        return nullcontext(sys.stdout)
    return open(path, "w", newline="")


def cmd_transform(config: CliConfig) -> int:
    f = read_signal(config.input_path)
    if config.grid_n != f.grid.n_points:
        raise ValueError(
            f"--grid-n {config.grid_n} does not match the input file "
            f"({f.grid.n_points} points)")
    if abs(config.grid_l - f.grid.half_width) > 1e-9 * f.grid.half_width:
        raise ValueError(
            f"--grid-l {config.grid_l} does not match the input file "
            f"(half-width {f.grid.half_width})")
    spec = TransformSpec(config.family, config.alpha, config.theta)
    action = singular_action(spec)
    if action is not SingularAction.NOT_SINGULAR:
        print(f"note: singular order, applying the exact {action.value} shortcut",
              file=sys.stderr)
    out = transform_signal(spec, f, method=config.method,
                           max_order=config.max_order)
    if config.output_path is None:
        _write_csv_signal(out, sys.stdout)
    else:
        write_signal(out, config.output_path)
    norm_in = l2_norm(f)
    if norm_in > 0:
        print(f"parseval ratio: {l2_norm(out) / norm_in:.12f}", file=sys.stderr)
    return 0


def _write_csv_signal(f, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(["x", "re", "im"])
    for x, v in zip(f.grid.points, f.values):
        writer.writerow([f"{x:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"])


def cmd_kernel(config: CliConfig) -> int:
    spec = TransformSpec(config.family, config.alpha, config.theta)
    action = singular_action(spec)
    if action is not SingularAction.NOT_SINGULAR:
        print(f"error: singular order, no finite kernel exists; "
              f"the exact action is {action.value}", file=sys.stderr)
        return 1
    grid = make_grid(config.grid_l, config.grid_n)
    if config.family is Family.FRFT:
        kernel = frft_kernel(spec.alpha, grid.points[:, None], grid.points[None, :])
    else:
        kernel = gfrt_kernel(spec.alpha, spec.theta,
                             grid.points[:, None], grid.points[None, :])
    with _out_stream(config.output_path) as stream:
        writer = csv.writer(stream)
        writer.writerow(["p", "x", "re", "im"])
        for j, p in enumerate(grid.points):
            for k, x in enumerate(grid.points):
                value = kernel[j, k]
                writer.writerow([f"{p:.17g}", f"{x:.17g}",
                                 f"{value.real:.17g}", f"{value.imag:.17g}"])
    return 0


def cmd_eigen(config: CliConfig) -> int:
    grid = make_grid(config.grid_l, config.grid_n)
    basis = build_basis(grid, config.max_order)
    out_dir = Path(config.output_path or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for m in range(config.max_order + 1):
        write_signal(basis.f_signal(m), out_dir / f"eigenfunction_{m:03d}.csv")
    print(f"wrote {config.max_order + 1} eigenfunction files to {out_dir}",
          file=sys.stderr)
    return 0


def cmd_verify(config: CliConfig) -> int:
    reports = run_suite(SuiteConfig(grid_l=config.grid_l, grid_n=config.grid_n,
                                    max_order=config.max_order,
                                    suite=config.suite))
    for report in reports:
        print(report.to_json_line())
    return 0 if suite_passed(reports) else 1


_HANDLERS = {
    "transform": cmd_transform,
    "kernel": cmd_kernel,
    "eigen": cmd_eigen,
    "verify": cmd_verify,
}


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    family = None
    if getattr(args, "family", None) is not None:
        family = Family(args.family)
    fields = {"subcommand": args.subcommand, "family": family}
    if hasattr(args, "alpha"):
        fields["alpha"] = args.alpha
    if getattr(args, "theta", None) is not None:
        fields["theta"] = args.theta
    if getattr(args, "method", None) is not None:
        fields["method"] = args.method
    if getattr(args, "max_order", None) is not None:
        fields["max_order"] = args.max_order
    if getattr(args, "suite", None) is not None:
        fields["suite"] = args.suite
    if getattr(args, "input", None) is not None:
        fields["input_path"] = args.input
    if getattr(args, "output", None) is not None:
        fields["output_path"] = args.output
    if getattr(args, "output_dir", None) is not None:
        fields["output_path"] = args.output_dir
    return CliConfig(**fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.subcommand == "transform":
            # the input file defines the grid; explicit flags must agree
            if args.grid_n is None or args.grid_l is None:
                file_grid = read_signal(config.input_path).grid
                grid_n = args.grid_n if args.grid_n is not None else file_grid.n_points
                grid_l = args.grid_l if args.grid_l is not None else file_grid.half_width
            else:
                grid_n, grid_l = args.grid_n, args.grid_l
            config = replace(config, grid_n=grid_n, grid_l=grid_l)
        elif hasattr(args, "grid_n"):
            config = replace(config, grid_n=args.grid_n, grid_l=args.grid_l)
        config.validate()
        return _HANDLERS[config.subcommand](config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
