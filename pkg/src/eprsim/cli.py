"""Command-line sweep runner: writes a CSV always, an SVG plot on request."""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .experiment import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ExperimentConfig,
    MeasurementOrder,
    Mode,
    SweepResult,
    sweep_b,
)
from .projection import ProjectionRule

__all__ = ["CliOptions", "main", "parse_args", "render_plot", "write_csv"]

CSV_HEADER = "b_radians,correlation_estimate,correlation_predicted"
DEFAULT_STEPS = 65
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CliOptions:
    """Everything one invocation needs: the run config, the grid, the outputs."""

    config: ExperimentConfig
    b_start: float
    b_end: float
    steps: int
    csv_path: str
    plot_path: str | None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eprsim",
        description="Sweep the second measurement angle b and estimate the "
        "outcome correlation of a spin-singlet pair at each grid point.",
    )
    parser.add_argument(
        "--mode",
        required=True,
        choices=[m.value for m in Mode],
        help="joint: sample the outcome pair at once; separated: fair first side, "
        "second side from the reduced state",
    )
    parser.add_argument(
        "--rule",
        choices=[r.value for r in ProjectionRule],
        help="state-reduction rule (required for, and restricted to, separated mode)",
    )
    parser.add_argument("--a", type=float, default=0.0, help="first-side angle (default 0)")
    parser.add_argument("--b-start", type=float, default=None, help="sweep start (default 0)")
    parser.add_argument("--b-end", type=float, default=None, help="sweep end (default 2*pi)")
    parser.add_argument("--steps", type=int, default=DEFAULT_STEPS, help="grid points (default 65)")
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="trials per point (default 10000)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    parser.add_argument(
        "--order",
        choices=[o.value for o in MeasurementOrder],
        default=MeasurementOrder.A_FIRST.value,
        help="which side measures first in separated mode (default afirst)",
    )
    parser.add_argument("--degrees", action="store_true", help="read --a/--b-start/--b-end as degrees")
    parser.add_argument("--csv", default="sweep.csv", help="output CSV path (default ./sweep.csv)")
    parser.add_argument("--plot", default=None, help="optional SVG plot path")
    return parser


def parse_args(argv: list[str] | None = None) -> CliOptions:
    """Parse flags into a validated :class:`CliOptions`.

    Contradictory or malformed flag combinations terminate with the parser's
    usage error (exit status 2).
    """
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.mode == Mode.JOINT.value and ns.rule is not None:
        parser.error("--rule only applies to --mode separated")
    if ns.mode == Mode.SEPARATED.value and ns.rule is None:
        parser.error("--mode separated requires --rule")
    if ns.steps < 2:
        parser.error("--steps must be at least 2")
    if ns.trials < 1:
        parser.error("--trials must be at least 1")
    if not 0 <= ns.seed < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")

    # convert only user-supplied angles; the fallback grid is defined in radians
    scale = math.pi / 180.0 if ns.degrees else 1.0
    a = scale * ns.a
    b_start = scale * ns.b_start if ns.b_start is not None else 0.0
    b_end = scale * ns.b_end if ns.b_end is not None else TWO_PI

    config = ExperimentConfig(
        mode=Mode(ns.mode),
        a=a,
        b=b_start,
        rule=None if ns.rule is None else ProjectionRule(ns.rule),
        n_trials=ns.trials,
        seed=ns.seed,
        order=MeasurementOrder(ns.order),
    )
    return CliOptions(
        config=config,
        b_start=b_start,
        b_end=b_end,
        steps=ns.steps,
        csv_path=ns.csv,
        plot_path=ns.plot,
    )


def write_csv(result: SweepResult, path: str) -> None:
    """Write the sweep as CSV with nine-decimal fixed-point cells.

    Raises
    ------
    OSError
        If the file cannot be written; the message names the path.
    """
    lines = [CSV_HEADER]
    for b, estimate, predicted in zip(result.b_values, result.estimates, result.predictions):
        lines.append(f"{b:.9f},{estimate:.9f},{predicted:.9f}")
    try:
        with open(path, "w", newline="") as handle:
            handle.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path!r}: {exc}") from exc


def render_plot(result: SweepResult, path: str) -> None:
    """Scatter the estimates over the closed-form curve; save vector graphics.

    Raises
    ------
    OSError
        If the file cannot be written; the message names the path.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rule = result.rule.value if result.rule is not None else "-"
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(result.b_values, result.predictions, color="tab:blue", linewidth=1.5, label="prediction")
    ax.plot(
        result.b_values,
        result.estimates,
        "o",
        markersize=3.5,
        color="tab:red",
        label=f"estimate (N={result.n_trials})",
    )
    ax.set_xlim(float(result.b_values[0]), float(result.b_values[-1]))
    ax.set_ylim(-1.05, 1.05)
    ax.set_xlabel("b (radians)")
    ax.set_ylabel("correlation")
    ax.set_title(
        f"mode={result.mode.value}  rule={rule}  N={result.n_trials}  seed={result.seed}"
    )
    ax.grid(alpha=0.3)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    try:
        # fall back to SVG when the path carries no extension of its own
        fig.savefig(path, format=None if os.path.splitext(path)[1] else "svg")
    except OSError as exc:
        raise OSError(f"cannot write plot to {path!r}: {exc}") from exc
    finally:
        plt.close(fig)


def config_flags(options: CliOptions) -> list[str]:
    """Flag list that reparses to an identical run (angles echoed in radians)."""
    config = options.config
    flags = ["--mode", config.mode.value]
    if config.rule is not None:
        flags += ["--rule", config.rule.value]
    flags += [
        "--a", repr(config.a),
        "--b-start", repr(options.b_start),
        "--b-end", repr(options.b_end),
        "--steps", str(options.steps),
        "--trials", str(config.n_trials),
        "--seed", str(config.seed),
        "--order", config.order.value,
    ]
    return flags


def main(argv: list[str] | None = None) -> int:
    """Run one sweep. Returns 0 on success, 1 on runtime/output failure."""
    options = parse_args(argv)
    try:
        result = sweep_b(options.config, options.b_start, options.b_end, options.steps)
        write_csv(result, options.csv_path)
        if options.plot_path is not None:
            render_plot(result, options.plot_path)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    config = options.config
    rule = config.rule.value if config.rule is not None else "-"
    deviation = float(np.max(np.abs(result.estimates - result.predictions)))
    outputs = f"csv: {options.csv_path}" + (f", plot: {options.plot_path}" if options.plot_path else "")
    print(f"mode={config.mode.value} rule={rule} trials={config.n_trials} seed={config.seed} order={config.order.value}")
    print(f"a={config.a!r}, sweep of {options.steps} points with b in [{options.b_start!r}, {options.b_end!r}]")
    print(f"max |estimate - predicted| = {deviation:.6f}")
    print(outputs)
    print("flags: " + " ".join(config_flags(options)))
    return 0


def entry_point() -> None:
    sys.exit(main())
