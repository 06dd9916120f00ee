"""
Command-line harness: angle, evolve, profile, geodesic, verdict, demo, sweep.

JSON is the canonical output (sorted keys, so equal runs give equal bytes); CSV is
offered for plot pipelines. Exit codes: 0 success, 2 bad input, 3 numerical guard.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import dynamics, kinematics, models
from .hilbert import quantum_angle
from .utils.config import FORMATS, Settings, load_settings
from .utils.errors import InputError, QuantumAngleError
from .utils.files import emit, read_generator, read_state, render_csv, render_json, state_to_pairs

logger = logging.getLogger(__name__)

DEMOS = ("two-level", "line", "circle", "lifetime", "multi-axis", "rotation-axes")


def _floats(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}") from e


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--hbar", type=float, help="Reduced Planck constant (default from QANGLE_HBAR, else 1.0)")
    common.add_argument("--seed", type=int, help="Random seed (default from QANGLE_SEED, else 0)")
    common.add_argument("--format", choices=FORMATS, dest="output_format", help="Output format (default json)")
    common.add_argument("--out", help="Write output to this file instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="qangle",
        description="Quantum angle between states, and the certainty principle |ds| dA >= hbar.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("angle", parents=[common], help="Quantum angle between two state files")
    p.add_argument("state_a")
    p.add_argument("state_b")

    p = sub.add_parser("evolve", parents=[common], help="Apply U(ds) = exp(-i ds A / hbar) to a state")
    p.add_argument("generator")
    p.add_argument("state")
    p.add_argument("deltas", type=float)

    p = sub.add_parser("profile", parents=[common], help="Angle turned along the orbit, with the bound |ds| dA / hbar")
    p.add_argument("generator")
    p.add_argument("state")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=100, help="Number of intervals")

    p = sub.add_parser("geodesic", parents=[common], help="Great-circle curve between two states")
    p.add_argument("state_a")
    p.add_argument("state_b")
    p.add_argument("--nodes", type=int, default=100, help="Number of intervals")

    p = sub.add_parser("verdict", parents=[common], help="Certainty-principle verdict for one shift")
    p.add_argument("generator")
    p.add_argument("state")
    p.add_argument("deltas", type=float)

    p = sub.add_parser("demo", parents=[common], help="Run one of the worked examples")
    p.add_argument("name", choices=DEMOS)
    p.add_argument("--gap", type=float, default=1.0, help="two-level: A = diag(gap, -gap)")
    p.add_argument("--n", type=int, help="line/multi-axis: grid nodes per axis")
    p.add_argument("--length", type=float, help="line/multi-axis: grid length")
    p.add_argument("--sigma", type=float, help="line/multi-axis: packet width")
    p.add_argument("--m-max", type=int, default=8, help="circle: modes -M..M")
    p.add_argument("--modes", type=_ints, default=[0, 1], help="circle: occupied modes, e.g. 0,1")
    p.add_argument("--weights", type=_floats, help="circle: mode weights")
    p.add_argument("--profile", choices=("gaussian", "two-level"), default="gaussian", help="lifetime: spectrum")
    p.add_argument("--gamma", type=float, default=1.0, help="lifetime: energy spread")
    p.add_argument("--levels", type=int, default=61, help="lifetime: number of levels")
    p.add_argument("--energy", type=float, default=0.0, help="lifetime: central energy")
    p.add_argument("--displacement", type=_floats, default=[3.0, 4.0], help="multi-axis: shift per axis")
    p.add_argument("--tensor", action="store_true", help="multi-axis: cross-check with the dense tensor generator")
    p.add_argument("--spin", type=float, default=1.0, help="rotation-axes: spin j (half-integer)")
    p.add_argument("--rotation", type=_floats, default=[1.5, 1.5, 0.0], help="rotation-axes: dphi_x,dphi_y,dphi_z")

    p = sub.add_parser("sweep", parents=[common], help="Randomized search for certainty-principle counterexamples")
    p.add_argument("--dims", type=_ints, default=[2, 3, 4, 8])
    p.add_argument("--trials", type=int, default=1000)

    return parser


def _configure_logging(verbose: bool, settings: Settings) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level or "WARNING", logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logging.getLogger().setLevel(level)


def _run_demo(args: argparse.Namespace, hbar: float) -> models.DemoRecord:
    if args.name == "two-level":
        return models.two_level_demo(args.gap, hbar)
    if args.name == "line":
        grid = models.LineGrid(args.n or 1024, args.length or 40.0)
        return models.line_demo(grid, args.sigma or 1.0, hbar)
    if args.name == "circle":
        c = models.CircleModel(args.m_max)
        return models.circle_certainty_demo(c, models.circle_state(c, args.modes, args.weights), hbar)
    if args.name == "lifetime":
        if args.profile == "two-level":
            levels = models.two_level_model(args.energy, args.gamma)
        else:
            levels = models.gaussian_level_model(args.gamma, args.levels, energy=args.energy)
        return models.lifetime_demo(levels, hbar)
    if args.name == "multi-axis":
        axes = len(args.displacement)
        grid = models.LineGrid(args.n or 64, args.length or 24.0)
        return models.multi_axis_demo(
            [grid] * axes, [args.sigma or 2.0] * axes, args.displacement, hbar, tensor_oracle=args.tensor
        )
    if args.name == "rotation-axes":
        return models.rotation_axes_demo(args.spin, args.rotation, hbar=hbar)
    raise InputError(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")


def _render(payload: Any, rows: Optional[Sequence[Dict[str, Any]]], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(rows if rows is not None else [payload])
    return render_json(payload)


def _report_row(report: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in report.items() if k != "details"}


def run(args: argparse.Namespace, settings: Settings) -> int:
    hbar = settings.hbar if args.hbar is None else args.hbar
    seed = settings.seed if args.seed is None else args.seed
    fmt = args.output_format or settings.output_format
    if not hbar > 0:
        raise InputError(f"hbar must be positive, got {hbar}")
    logger.debug(f"command {args.command}, hbar {hbar:g}, seed {seed}, format {fmt}")

    if args.command == "angle":
        a, b = read_state(args.state_a), read_state(args.state_b)
        angle = quantum_angle(a, b)
        payload = {"angle_radians": angle.radians, "substantial": angle.substantial}
        emit(_render(payload, None, fmt), args.out)
        return 0

    if args.command == "evolve":
        ctx = dynamics.EvolutionContext(read_generator(args.generator), hbar)
        evolved = dynamics.evolve(ctx, read_state(args.state), args.deltas)
        if fmt == "csv":
            amps = np.asarray(evolved)
            rows = [{"re": float(z.real), "im": float(z.imag)} for z in amps]
            emit(render_csv(rows, ["re", "im"]), args.out)
        else:
            emit(render_json(state_to_pairs(evolved)), args.out)
        return 0

    if args.command == "profile":
        if args.steps < 1:
            raise InputError("--steps must be at least 1")
        ctx = dynamics.EvolutionContext(read_generator(args.generator), hbar)
        grid = np.linspace(args.start, args.stop, args.steps + 1)
        rows = [
            {"deltas": p.deltas, "angle": p.angle, "bound": p.bound, "holds": p.holds}
            for p in dynamics.angle_profile(ctx, read_state(args.state), grid)
        ]
        emit(_render(rows, rows, fmt), args.out)
        return 0

    if args.command == "geodesic":
        curve = kinematics.geodesic(read_state(args.state_a), read_state(args.state_b), args.nodes)
        rows = kinematics.curve_table(curve).to_dict(orient="records")
        if fmt == "csv":
            emit(render_csv(rows), args.out)
        else:
            emit(render_json({"arc_length": kinematics.arc_length(curve), "nodes": rows}), args.out)
        return 0

    if args.command == "verdict":
        ctx = dynamics.EvolutionContext(read_generator(args.generator), hbar)
        report = dynamics.certainty_verdict(ctx, read_state(args.state), args.deltas).to_dict()
        emit(_render(report, [_report_row(report)], fmt), args.out)
        return 0

    if args.command == "demo":
        record = _run_demo(args, hbar).to_dict()
        frozen = ("demo", "delta_star", "std_dev", "product", "holds")
        emit(_render(record, [{k: record[k] for k in frozen}], fmt), args.out)
        return 0 if record["holds"] else 1

    if args.command == "sweep":
        summary = dynamics.certainty_sweep(args.dims, args.trials, seed, hbar)
        payload = {
            "dims": list(args.dims),
            "seed": seed,
            "hbar": hbar,
            "trials": summary.trials,
            "substantial": summary.substantial,
            "counterexamples": summary.counterexamples,
            "min_product": summary.min_product,
        }
        emit(_render(payload, None, fmt), args.out)
        return 0 if summary.counterexamples == 0 else 1

    raise InputError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
        _configure_logging(args.verbose, settings)
        return run(args, settings)
    except QuantumAngleError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
