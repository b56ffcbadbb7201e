"""Monte-Carlo simulator for paired spin measurements on a singlet state.

The package has four layers:

- :mod:`eprsim.core` — operators, the singlet state, and closed-form
  outcome probabilities;
- :mod:`eprsim.projection` — the state-reduction rules applied after the
  first one-sided measurement;
- :mod:`eprsim.sampling` — seeded, auditable randomness;
- :mod:`eprsim.experiment` — trial loops and sweeps over the second angle.

A small command-line front end lives in :mod:`eprsim.cli`.
"""

from .core import (
    JointDistribution,
    binary_probabilities,
    expectation,
    joint_expectation,
    joint_probabilities,
    make_measurement_operator,
    singlet_density,
    tensor_product,
)
from .experiment import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ExperimentConfig,
    ExperimentResult,
    MeasurementOrder,
    Mode,
    SweepResult,
    TrialRecord,
    estimate_correlation,
    predicted_correlations,
    run_experiment,
    run_joint_trial,
    run_separated_trial,
    sweep_b,
)
from .projection import (
    ProjectionRule,
    apply_rule,
    eigenket,
    luders_project,
    null_project,
    von_neumann_project,
)
from .sampling import (
    OUTCOME_PAIRS,
    RandomSource,
    derive_seed,
    sample_binary,
    sample_joint,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "ExperimentConfig",
    "ExperimentResult",
    "JointDistribution",
    "MeasurementOrder",
    "Mode",
    "OUTCOME_PAIRS",
    "ProjectionRule",
    "RandomSource",
    "SweepResult",
    "TrialRecord",
    "apply_rule",
    "binary_probabilities",
    "derive_seed",
    "eigenket",
    "estimate_correlation",
    "expectation",
    "joint_expectation",
    "joint_probabilities",
    "luders_project",
    "make_measurement_operator",
    "null_project",
    "predicted_correlations",
    "run_experiment",
    "run_joint_trial",
    "run_separated_trial",
    "sample_binary",
    "sample_joint",
    "singlet_density",
    "sweep_b",
    "tensor_product",
    "von_neumann_project",
]
