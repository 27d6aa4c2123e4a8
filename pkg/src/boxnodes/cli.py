"""Command line front end.

Subcommands mirror the library: trajectory tracking, amplitude sweeps with a
power-law fit, time-averaged node positions, mixing-angle heatmaps, and a
verify battery. Exit codes: 0 success, 1 a verify check failed, 2 invalid
arguments or state, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .analysis import SweepSpec, amplitude_sweep, fit_power_law, heatmap, \
    time_avg_node_position
from .nodes import NodeKind, track_trajectory
from .output import OutputSpec, write_json_object, write_rows
from .verify import run_verification
from .well import TwoStateSuperposition, WellConfig, beat_period

__all__ = [
    "RunConfig",
    "cmd_trajectory",
    "cmd_amplitude_sweep",
    "cmd_avg_position",
    "cmd_heatmap",
    "cmd_verify",
    "build_parser",
    "main",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_KIND_BY_FLAG = {
    "analytic": NodeKind.ANALYTIC,
    "repart": NodeKind.REAL_PART_ZERO,
    "minimum": NodeKind.DENSITY_MINIMUM,
}


@dataclass(frozen=True)
class RunConfig:
    """Shared run parameters resolved from the command line."""

    well: WellConfig
    c1: float = _INV_SQRT2
    c2: float = _INV_SQRT2
    t_start: float = 0.0
    t_end: float | None = None  # None means one beat period past t_start
    time_samples: int = 256
    grid_n: int = 2048
    seed: int = 0

    def resolved_t_end(self) -> float:
        if self.t_end is not None:
            return self.t_end
        return self.t_start + beat_period(self.well)


def cmd_trajectory(run: RunConfig, kind: NodeKind, out: OutputSpec) -> int:
    state = TwoStateSuperposition(run.c1, run.c2)
    traj = track_trajectory(run.well, state, kind, run.t_start, run.resolved_t_end(),
                            run.time_samples, run.grid_n)
    rows = [{"t": s.t, "position": s.position, "kind": s.kind.value}
            for s in traj.samples]
    write_rows(out, ["t", "position", "kind"], rows)
    return 0


def cmd_amplitude_sweep(run: RunConfig, spec: SweepSpec, out: OutputSpec) -> int:
    if spec.count < 3:
        raise ValueError("need at least 3 sweep points to fit a power law")
    sweep = amplitude_sweep(run.well, spec, run.time_samples)
    fit = fit_power_law(sweep)
    rows = [{"ratio": A, "amplitude": amp} for A, amp in sweep.entries]
    fit_fields = {
        "coefficient": fit.coefficient,
        "exponent": fit.exponent,
        "rms_log_residual": fit.rms_log_residual,
    }
    if out.format == "csv":
        trailer = ["# fit " + " ".join(f"{k}={v!r}" for k, v in fit_fields.items())]
        write_rows(out, ["ratio", "amplitude"], rows, trailer_comments=trailer)
    else:
        write_rows(out, ["ratio", "amplitude"], rows)
        write_json_object(out.path.with_suffix(".fit.json"), fit_fields)
    return 0


def cmd_avg_position(run: RunConfig, ratios: list[float], out: OutputSpec) -> int:
    if not ratios:
        raise ValueError("no ratio values to average")
    for A in ratios:
        if abs(A) >= 1.0:
            raise ValueError(f"|A| must be < 1 for a persistent node, got {A!r}")
    rows = [{"ratio": float(A),
             "mean_position": time_avg_node_position(run.well, float(A),
                                                     run.time_samples)}
            for A in ratios]
    write_rows(out, ["ratio", "mean_position"], rows)
    return 0


def cmd_heatmap(run: RunConfig, x_count: int, mix_count: int, out: OutputSpec) -> int:
    grid = heatmap(run.well, x_count, mix_count, run.time_samples)
    rows = []
    for i, theta in enumerate(grid.mix_values):
        for j, x in enumerate(grid.x_values):
            rows.append({"theta": float(theta), "x": float(x),
                         "avg_density": float(grid.values[i, j])})
    write_rows(out, ["theta", "x", "avg_density"], rows)
    return 0


def cmd_verify(run: RunConfig, tolerances: dict[str, float] | None = None,
               stream=None) -> int:
    stream = stream if stream is not None else sys.stdout
    results = run_verification(run.well, seed=run.seed, grid_n=run.grid_n,
                               time_samples=run.time_samples, tolerances=tolerances)
    for result in results:
        print(result.format_line(), file=stream)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=stream)
    return 1 if failed else 0


def _add_well_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=float, default=1.0, help="well width (default 1)")
    parser.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    parser.add_argument("--hbar", type=float, default=1.0, help="hbar (default 1)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")


def _add_state_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--c1", type=float, default=_INV_SQRT2,
                        help="real coefficient on psi_1 (default 1/sqrt(2))")
    parser.add_argument("--c2", type=float, default=_INV_SQRT2,
                        help="real coefficient on psi_2 (default 1/sqrt(2))")


def _add_out_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", required=True, help="output file path")
    parser.add_argument("--format", choices=["csv", "json"], default=None,
                        help="output format (default: inferred from suffix)")


def _add_sweep_args(parser: argparse.ArgumentParser, a_max_default: float,
                    count_default: int, log_default: bool) -> None:
    parser.add_argument("--a-min", type=float, default=0.05,
                        help="smallest ratio A (default 0.05)")
    parser.add_argument("--a-max", type=float, default=a_max_default,
                        help=f"largest ratio A (default {a_max_default})")
    parser.add_argument("--a-count", type=int, default=count_default,
                        help=f"number of A values (default {count_default})")
    parser.add_argument("--log-spacing", action=argparse.BooleanOptionalAction,
                        default=log_default,
                        help="space the A values logarithmically")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxnodes",
        description="Oscillating quasi-nodes of two-state superpositions in a box")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trajectory", help="track the node over a time window")
    _add_well_args(p)
    _add_state_args(p)
    _add_out_args(p)
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-end", type=float, default=None,
                   help="end time (default: one beat period after t-start)")
    p.add_argument("--time-samples", type=int, default=256)
    p.add_argument("--grid", type=int, default=2048,
                   help="spatial grid intervals for the numeric finders")
    p.add_argument("--kind", choices=sorted(_KIND_BY_FLAG), default="analytic")
    p.set_defaults(handler=_handle_trajectory)

    p = sub.add_parser("amplitude-sweep",
                       help="oscillation amplitude vs ratio A, with power-law fit")
    _add_well_args(p)
    _add_out_args(p)
    _add_sweep_args(p, a_max_default=1.0, count_default=64, log_default=True)
    p.add_argument("--time-samples", type=int, default=256)
    p.set_defaults(handler=_handle_amplitude_sweep)

    p = sub.add_parser("avg-position", help="time-averaged node position vs ratio A")
    _add_well_args(p)
    _add_out_args(p)
    _add_sweep_args(p, a_max_default=0.95, count_default=19, log_default=False)
    p.add_argument("--time-samples", type=int, default=1024)
    p.set_defaults(handler=_handle_avg_position)

    p = sub.add_parser("heatmap",
                       help="time-averaged density over mixing angles in [0, pi/2]")
    _add_well_args(p)
    _add_out_args(p)
    p.add_argument("--grid", type=int, default=64, help="positions per row (default 64)")
    p.add_argument("--mix-count", type=int, default=64,
                   help="number of mixing angles (default 64)")
    p.add_argument("--time-samples", type=int, default=1024)
    p.set_defaults(handler=_handle_heatmap)

    p = sub.add_parser("verify", help="run the invariant battery and report pass/fail")
    _add_well_args(p)
    p.add_argument("--grid", type=int, default=2048)
    p.add_argument("--time-samples", type=int, default=256)
    p.set_defaults(handler=_handle_verify)

    return parser


def _run_from_args(args: argparse.Namespace) -> RunConfig:
    well = WellConfig(width_a=args.a, mass_m=args.mass, hbar=args.hbar)
    return RunConfig(
        well=well,
        c1=getattr(args, "c1", _INV_SQRT2),
        c2=getattr(args, "c2", _INV_SQRT2),
        t_start=getattr(args, "t_start", 0.0),
        t_end=getattr(args, "t_end", None),
        time_samples=getattr(args, "time_samples", 256),
        grid_n=getattr(args, "grid", 2048),
        seed=args.seed,
    )


def _handle_trajectory(args: argparse.Namespace) -> int:
    run = _run_from_args(args)
    out = OutputSpec.from_cli(args.out, args.format)
    return cmd_trajectory(run, _KIND_BY_FLAG[args.kind], out)


def _handle_amplitude_sweep(args: argparse.Namespace) -> int:
    run = _run_from_args(args)
    out = OutputSpec.from_cli(args.out, args.format)
    spacing = "logarithmic" if args.log_spacing else "linear"
    spec = SweepSpec(a_min=args.a_min, a_max=args.a_max, count=args.a_count,
                     spacing=spacing)
    return cmd_amplitude_sweep(run, spec, out)


def _handle_avg_position(args: argparse.Namespace) -> int:
    run = _run_from_args(args)
    out = OutputSpec.from_cli(args.out, args.format)
    if args.a_count < 1:
        raise ValueError("need at least one ratio value")
    if args.log_spacing:
        ratios = list(np.geomspace(args.a_min, args.a_max, args.a_count))
    else:
        ratios = list(np.linspace(args.a_min, args.a_max, args.a_count))
    return cmd_avg_position(run, [float(A) for A in ratios], out)


def _handle_heatmap(args: argparse.Namespace) -> int:
    run = _run_from_args(args)
    out = OutputSpec.from_cli(args.out, args.format)
    return cmd_heatmap(run, args.grid, args.mix_count, out)


def _handle_verify(args: argparse.Namespace) -> int:
    run = _run_from_args(args)
    return cmd_verify(run)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
