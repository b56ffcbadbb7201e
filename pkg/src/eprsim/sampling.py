"""Seeded randomness and the two outcome samplers.

The underlying generator is numpy's PCG64 (a permuted congruential
generator): small, explicitly seedable, with a published algorithm and
streams that are reproducible across platforms. Each outcome sampling
consumes exactly one uniform draw, which keeps a trial's randomness
budget auditable.
"""

from __future__ import annotations

import numpy as np

from .core import JointDistribution

__all__ = [
    "OUTCOME_PAIRS",
    "RandomSource",
    "derive_seed",
    "sample_binary",
    "sample_joint",
]

_SEED_LIMIT = 2**64

#: Fixed category order scanned by the joint inverse-CDF sampler.
OUTCOME_PAIRS = ((-1, -1), (-1, +1), (+1, -1), (+1, +1))


def derive_seed(seed: int, index: int) -> int:
    """Deterministic 64-bit child seed for stream ``index`` under ``seed``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return int(sequence.generate_state(1, np.uint64)[0])


class RandomSource:
    """A seeded stream of uniforms with a counter for outcome samplings.

    Identical seeds yield identical draw sequences. ``sample_count`` tracks
    how many draws were made through :meth:`sample_uniform` (the entry point
    used by the outcome samplers); plain :meth:`uniform` draws — e.g. the
    per-trial order coin — advance the stream without touching the counter.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed < _SEED_LIMIT:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        self.seed = seed
        self.sample_count = 0
        self._random = np.random.Generator(np.random.PCG64(seed)).random

    def uniform(self) -> float:
        """One uniform draw in [0, 1), not counted as an outcome sampling."""
        return self._random()

    def sample_uniform(self) -> float:
        """One uniform draw in [0, 1), counted as one outcome sampling."""
        self.sample_count += 1
        return self._random()

    def substream(self, index: int) -> RandomSource:
        """Independent child source derived deterministically from (seed, index)."""
        return RandomSource(derive_seed(self.seed, index))


def sample_joint(dist: JointDistribution, rng: RandomSource) -> tuple[int, int]:
    """Draw one (o_a, o_b) pair with a single uniform, by inverse CDF.

    Categories are scanned in the fixed order (-1,-1), (-1,+1), (+1,-1),
    (+1,+1).
    """
    u = rng.sample_uniform()
    acc = 0.0
    for probability, pair in zip(dist, OUTCOME_PAIRS):
        acc += probability
        if u < acc:
            return pair
    return OUTCOME_PAIRS[-1]  # cumulative rounding can leave u just above acc


def sample_binary(p_plus: float, rng: RandomSource) -> int:
    """Draw +1 with probability ``p_plus`` and -1 otherwise, with one uniform.

    Raises
    ------
    ValueError
        If ``p_plus`` lies outside [0, 1] (beyond roundoff slack).
    """
    if not 0.0 <= p_plus <= 1.0:
        if not -1e-9 < p_plus < 1.0 + 1e-9:  # also rejects NaN
            raise ValueError(f"p_plus must lie in [0, 1], got {p_plus!r}")
        p_plus = min(1.0, max(0.0, p_plus))
    return 1 if rng.sample_uniform() < p_plus else -1
