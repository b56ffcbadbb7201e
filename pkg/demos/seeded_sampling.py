"""Reproducibility and the per-trial sampling budget.

Runs are driven by a seeded PCG64 stream, so the same configuration always
produces the same trial records, and every outcome sampling is counted:
joint-mode trials consume exactly one sample each (a single four-way draw),
separated-mode trials exactly two (one per side).

Example output:

    same seed, same records: True
    different seed differs:  True
    joint mode:     10000 trials -> 10000 samples
    separated mode: 10000 trials -> 20000 samples
    first five records (seed 123): [(1, -1), (-1, -1), (-1, 1), (-1, 1), (-1, 1)]
"""

import math
from dataclasses import replace

from eprsim import ExperimentConfig, Mode, ProjectionRule, run_experiment


def main():
    joint = ExperimentConfig(mode=Mode.JOINT, a=0.0, b=math.pi / 4, n_trials=10_000, seed=123)
    separated = ExperimentConfig(
        mode=Mode.SEPARATED, a=0.0, b=math.pi / 4, rule=ProjectionRule.LUDERS,
        n_trials=10_000, seed=123,
    )

    once = run_experiment(joint)
    again = run_experiment(joint)
    other = run_experiment(replace(joint, seed=124))

    print(f"same seed, same records: {once.records == again.records}")
    print(f"different seed differs:  {once.records != other.records}")

    separated_result = run_experiment(separated)
    print(f"joint mode:     {joint.n_trials} trials -> {once.samples_drawn} samples")
    print(f"separated mode: {separated.n_trials} trials -> {separated_result.samples_drawn} samples")

    pairs = [(r.o_a, r.o_b) for r in once.records[:5]]
    print(f"first five records (seed 123): {pairs}")


if __name__ == "__main__":
    main()
