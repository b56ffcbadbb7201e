"""Trial loops, experiment configuration, and sweeps over the second angle."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    binary_probabilities,
    expectation,
    joint_expectation,
    joint_probabilities,
    make_measurement_operator,
    tensor_product,
)
from .projection import ProjectionRule, apply_rule
from .sampling import RandomSource, derive_seed, sample_binary, sample_joint

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "ExperimentConfig",
    "ExperimentResult",
    "MeasurementOrder",
    "Mode",
    "SweepResult",
    "TrialRecord",
    "estimate_correlation",
    "predicted_correlations",
    "run_experiment",
    "run_joint_trial",
    "run_separated_trial",
    "sweep_b",
]

DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 42

_IDENTITY_2 = np.eye(2)


class Mode(str, enum.Enum):
    """Whether a trial samples the outcome pair at once or side by side."""

    JOINT = "joint"
    SEPARATED = "separated"


class MeasurementOrder(str, enum.Enum):
    """Which side measures first in separated mode."""

    A_FIRST = "afirst"
    B_FIRST = "bfirst"
    RANDOM_PER_TRIAL = "random"


@dataclass(frozen=True, slots=True)
class TrialRecord:
    """Outcome of a single pair measurement.

    ``first_side`` is "A" or "B"; joint-mode trials, which have no
    measurement order, record "A" by convention.
    """

    index: int
    a: float
    b: float
    first_side: str
    o_a: int
    o_b: int


@dataclass(frozen=True)
class ExperimentConfig:
    """Fixed-angle run description; identical configs reproduce identical records."""

    mode: Mode
    a: float
    b: float
    rule: ProjectionRule | None = None
    n_trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    order: MeasurementOrder = MeasurementOrder.A_FIRST

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "order", MeasurementOrder(self.order))
        if self.rule is not None:
            object.__setattr__(self, "rule", ProjectionRule(self.rule))
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be at least 1, got {self.n_trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.mode is Mode.SEPARATED and self.rule is None:
            raise ValueError("separated mode requires a projection rule")
        if self.mode is Mode.JOINT and self.rule is not None:
            raise ValueError("joint mode takes no projection rule")


@dataclass(frozen=True)
class ExperimentResult:
    """Trial records plus summary statistics for one experiment.

    ``samples_drawn`` echoes the random source's outcome-sampling counter,
    so callers can audit the per-trial sampling budget.
    """

    records: list[TrialRecord]
    correlation: float
    marginal_a: float
    marginal_b: float
    samples_drawn: int


def estimate_correlation(records: list[TrialRecord]) -> float:
    """Mean of o_a * o_b over the records.

    Raises
    ------
    ValueError
        If ``records`` is empty.
    """
    if not records:
        raise ValueError("cannot estimate a correlation from zero trials")
    return sum(r.o_a * r.o_b for r in records) / len(records)


def run_joint_trial(a: float, b: float, rng: RandomSource, index: int = 0) -> TrialRecord:
    """One joint-mode trial: a single four-way sample of the outcome pair."""
    dist = joint_probabilities(joint_expectation(a, b))
    o_a, o_b = sample_joint(dist, rng)
    return TrialRecord(index=index, a=a, b=b, first_side="A", o_a=o_a, o_b=o_b)


def _first_side(order: MeasurementOrder, rng: RandomSource) -> str:
    if order is MeasurementOrder.A_FIRST:
        return "A"
    if order is MeasurementOrder.B_FIRST:
        return "B"
    return "A" if rng.uniform() < 0.5 else "B"


def _second_side_p_plus(
    rule: ProjectionRule, first_angle: float, o_first: int, second_angle: float
) -> float:
    """P(+1) on the second side, measured on the reduced pair state."""
    state = apply_rule(rule, first_angle, o_first)
    observable = tensor_product(_IDENTITY_2, make_measurement_operator(second_angle))
    p_plus, _ = binary_probabilities(expectation(observable, state))
    return p_plus


def run_separated_trial(
    a: float,
    b: float,
    rule: ProjectionRule,
    order: MeasurementOrder,
    rng: RandomSource,
    index: int = 0,
) -> TrialRecord:
    """One separated-mode trial: fair first side, reduced-state second side.

    The first side samples from the fair +/-1 distribution (its one-sided
    marginal on the singlet), seeing only its own angle. The pair state is
    then reduced by ``rule``, and the second side samples from the reduced
    state's statistics. Exactly two outcome samplings occur.
    """
    first = _first_side(order, rng)
    first_angle, second_angle = (a, b) if first == "A" else (b, a)
    o_first = sample_binary(0.5, rng)
    o_second = sample_binary(_second_side_p_plus(rule, first_angle, o_first, second_angle), rng)
    o_a, o_b = (o_first, o_second) if first == "A" else (o_second, o_first)
    return TrialRecord(index=index, a=a, b=b, first_side=first, o_a=o_a, o_b=o_b)


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Run ``config.n_trials`` trials at fixed angles and summarize.

    The per-trial distributions depend only on the angles and (in separated
    mode) on which side went first and what it saw, so they are precomputed
    once; the draw sequence is identical to calling the single-trial
    functions in a loop with the same seed.
    """
    rng = RandomSource(config.seed)
    records: list[TrialRecord] = []
    a, b = config.a, config.b

    if config.mode is Mode.JOINT:
        dist = joint_probabilities(joint_expectation(a, b))
        for i in range(config.n_trials):
            o_a, o_b = sample_joint(dist, rng)
            records.append(TrialRecord(index=i, a=a, b=b, first_side="A", o_a=o_a, o_b=o_b))
    else:
        p_plus = {
            ("A", -1): _second_side_p_plus(config.rule, a, -1, b),
            ("A", +1): _second_side_p_plus(config.rule, a, +1, b),
            ("B", -1): _second_side_p_plus(config.rule, b, -1, a),
            ("B", +1): _second_side_p_plus(config.rule, b, +1, a),
        }
        order = config.order
        for i in range(config.n_trials):
            first = _first_side(order, rng)
            o_first = sample_binary(0.5, rng)
            o_second = sample_binary(p_plus[first, o_first], rng)
            o_a, o_b = (o_first, o_second) if first == "A" else (o_second, o_first)
            records.append(TrialRecord(index=i, a=a, b=b, first_side=first, o_a=o_a, o_b=o_b))

    n = len(records)
    return ExperimentResult(
        records=records,
        correlation=estimate_correlation(records),
        marginal_a=sum(r.o_a for r in records) / n,
        marginal_b=sum(r.o_b for r in records) / n,
        samples_drawn=rng.sample_count,
    )


@dataclass(frozen=True)
class SweepResult:
    """Correlation estimates across a grid of second-side angles."""

    a: float
    b_values: np.ndarray
    estimates: np.ndarray
    predictions: np.ndarray
    n_trials: int
    mode: Mode
    rule: ProjectionRule | None
    seed: int


def predicted_correlations(
    mode: Mode, rule: ProjectionRule | None, a: float, b_values: np.ndarray
) -> np.ndarray:
    """Closed-form correlation curve the estimates should track.

    Joint sampling and eigenket projection both preserve -cos(a - b); the
    other reduction rules flatten the correlation to zero.
    """
    b_values = np.asarray(b_values, dtype=float)
    if Mode(mode) is Mode.JOINT or (rule is not None and ProjectionRule(rule) is ProjectionRule.LUDERS):
        return -np.cos(a - b_values)
    return np.zeros_like(b_values)


def sweep_b(config: ExperimentConfig, b_start: float, b_end: float, steps: int) -> SweepResult:
    """Run one experiment per point of an evenly spaced, inclusive b grid.

    Each grid point runs on its own child seed derived from
    (config.seed, point index), so points are statistically independent and
    the sweep is reproducible regardless of evaluation order.

    Raises
    ------
    ValueError
        If ``steps`` is less than 2.
    """
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    b_values = np.linspace(b_start, b_end, steps)
    estimates = np.empty(steps)
    for i, b in enumerate(b_values):
        point = replace(config, b=float(b), seed=derive_seed(config.seed, i))
        estimates[i] = run_experiment(point).correlation
    return SweepResult(
        a=config.a,
        b_values=b_values,
        estimates=estimates,
        predictions=predicted_correlations(config.mode, config.rule, config.a, b_values),
        n_trials=config.n_trials,
        mode=config.mode,
        rule=config.rule,
        seed=config.seed,
    )
