"""State-reduction rules applied once the first side's outcome is known."""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import singlet_density, tensor_product

__all__ = [
    "ProjectionRule",
    "apply_rule",
    "eigenket",
    "luders_project",
    "null_project",
    "von_neumann_project",
]

_IDENTITY_2 = np.eye(2)


class ProjectionRule(str, enum.Enum):
    """How the pair state is updated after the first one-sided measurement."""

    LUDERS = "luders"
    VON_NEUMANN = "vonneumann"
    NULL = "null"


def eigenket(a: float, sign: int) -> np.ndarray:
    """Normalized eigenvector of the measurement operator at angle ``a``.

    ``sign`` selects the eigenvalue: +1 gives (cos a/2, sin a/2), -1 gives
    (-sin a/2, cos a/2).
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {sign!r}")
    half = 0.5 * a
    if sign == 1:
        return np.array([math.cos(half), math.sin(half)])
    return np.array([-math.sin(half), math.cos(half)])


def luders_project(a: float, o_a: int) -> np.ndarray:
    """Post-measurement pair state under eigenket projection.

    Observing ``o_a`` along ``a`` on one side leaves the partner spin in the
    opposite-sign eigenket k = eigenket(a, -o_a); the pair state becomes
    (1/2) I (x) |k><k|, i.e. the measured side is forgotten and the partner
    is pure.
    """
    ket = eigenket(a, -o_a)
    return 0.5 * tensor_product(_IDENTITY_2, np.outer(ket, ket))


def von_neumann_project() -> np.ndarray:
    """Fully mixed pair state: this reading of reduction discards all structure."""
    return 0.25 * np.eye(4)


def null_project() -> np.ndarray:
    """No reduction at all: the pair stays in the singlet state."""
    return singlet_density()


def apply_rule(rule: ProjectionRule | str, a: float, o_a: int) -> np.ndarray:
    """Dispatch to the selected rule; ``a``/``o_a`` are ignored where unused.

    Raises
    ------
    ValueError
        If ``rule`` is not one of the known rule names.
    """
    rule = ProjectionRule(rule)
    if rule is ProjectionRule.LUDERS:
        return luders_project(a, o_a)
    if rule is ProjectionRule.VON_NEUMANN:
        return von_neumann_project()
    return null_project()
