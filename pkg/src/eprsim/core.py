"""Operators, states, and closed-form probabilities for a spin-singlet pair.

Everything in this module is small dense linear algebra: 2x2 measurement
operators, the 4x4 two-particle density matrix, and the outcome
probabilities obtained from traces. No randomness lives here.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "JointDistribution",
    "binary_probabilities",
    "expectation",
    "joint_expectation",
    "joint_probabilities",
    "make_measurement_operator",
    "singlet_density",
    "tensor_product",
]

# Tiny slack for probability-domain checks: a trace computed in floating
# point can land an ulp outside [-1, 1] and must not be rejected.
_DOMAIN_SLACK = 1e-9


class JointDistribution(NamedTuple):
    """Probabilities of the four (o_a, o_b) outcome pairs.

    Field order matches the fixed sampling order (-1,-1), (-1,+1), (+1,-1),
    (+1,+1); ``m`` stands for minus, ``p`` for plus.
    """

    p_mm: float
    p_mp: float
    p_pm: float
    p_pp: float


def make_measurement_operator(angle: float) -> np.ndarray:
    """Spin observable along ``angle`` (radians) in the measurement plane.

    Returns the symmetric 2x2 matrix [[cos a, sin a], [sin a, -cos a]],
    which has eigenvalues +1 and -1.

    Raises
    ------
    ValueError
        If ``angle`` is NaN or infinite.
    """
    if not math.isfinite(angle):
        raise ValueError(f"measurement angle must be finite, got {angle!r}")
    c = math.cos(angle)
    s = math.sin(angle)
    return np.array([[c, s], [s, -c]])


def singlet_density() -> np.ndarray:
    """Density matrix of the two-particle singlet state (4x4, trace one)."""
    rho = np.zeros((4, 4))
    rho[1, 1] = rho[2, 2] = 0.5
    rho[1, 2] = rho[2, 1] = -0.5
    return rho


def tensor_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Kronecker product of two one-particle operators.

    The result acts on the pair: entry [2i+k, 2j+l] is left[i, j] * right[k, l].
    """
    left = np.asarray(left)
    right = np.asarray(right)
    if left.shape != (2, 2) or right.shape != (2, 2):
        raise ValueError("tensor_product expects two 2x2 matrices")
    return np.kron(left, right)


def expectation(observable: np.ndarray, state: np.ndarray) -> float:
    """Expectation value Tr(observable @ state)."""
    return float(np.trace(observable @ state))


def joint_expectation(a: float, b: float) -> float:
    """<AB> for measurements along ``a`` and ``b`` on the singlet state.

    Computed as Tr((M(a) (x) M(b)) rho); analytically this is -cos(a - b).
    """
    observable = tensor_product(make_measurement_operator(a), make_measurement_operator(b))
    return expectation(observable, singlet_density())


def _checked_mean(value: float, name: str) -> float:
    if not (-1.0 - _DOMAIN_SLACK <= value <= 1.0 + _DOMAIN_SLACK):  # also rejects NaN
        raise ValueError(f"{name} must lie in [-1, 1], got {value!r}")
    return min(1.0, max(-1.0, value))


def joint_probabilities(ab_expectation: float) -> JointDistribution:
    """Four-outcome distribution realizing a given joint expectation.

    Equal-sign pairs carry weight (1 + <AB>)/4 each, opposite-sign pairs
    (1 - <AB>)/4 each, so both one-sided marginals are fair by construction.

    Raises
    ------
    ValueError
        If ``ab_expectation`` lies outside [-1, 1].
    """
    e = _checked_mean(ab_expectation, "ab_expectation")
    same = (1.0 + e) / 4.0
    diff = (1.0 - e) / 4.0
    return JointDistribution(p_mm=same, p_mp=diff, p_pm=diff, p_pp=same)


def binary_probabilities(expectation_value: float) -> tuple[float, float]:
    """(p_plus, p_minus) for a single +/-1 observable with the given mean.

    Raises
    ------
    ValueError
        If ``expectation_value`` lies outside [-1, 1].
    """
    e = _checked_mean(expectation_value, "expectation_value")
    return (1.0 + e) / 2.0, (1.0 - e) / 2.0
