"""Independent reference implementations used to freeze expected values.

Everything here is deliberately written with explicit index loops and
half-angle formulas so it shares no code path with the package under test.
"""

import numpy as np


def kron_oracle(left, right):
    """4x4 Kronecker product via the index formula out[2i+k, 2j+l] = L[i,j]*R[k,l]."""
    out = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    out[2 * i + k, 2 * j + l] = left[i, j] * right[k, l]
    return out


def trace_product_oracle(observable, state):
    """Tr(observable @ state) as the explicit double sum over entries."""
    total = 0.0
    for i in range(4):
        for j in range(4):
            total += observable[i, j] * state[j, i]
    return total


def operator_oracle(angle):
    """Measurement operator built entrywise from cos/sin."""
    return np.array(
        [
            [np.cos(angle), np.sin(angle)],
            [np.sin(angle), -np.cos(angle)],
        ]
    )


def projected_state_oracle(a, o_a):
    """Closed-form post-measurement pair state for the eigenket-projection rule.

    The partner qubit collapses to the half-angle block below (opposite sign
    of the observed outcome); the full state is block-diagonal with that
    block, halved, in both diagonal positions.
    """
    c = np.cos(a / 2.0)
    s = np.sin(a / 2.0)
    if o_a == -1:
        block = np.array([[c * c, s * c], [s * c, s * s]])
    elif o_a == +1:
        block = np.array([[s * s, -s * c], [-s * c, c * c]])
    else:
        raise ValueError("o_a must be -1 or +1")
    out = np.zeros((4, 4))
    out[:2, :2] = 0.5 * block
    out[2:, 2:] = 0.5 * block
    return out


class ScriptedSource:
    """Stand-in random source that replays a fixed list of uniforms."""

    def __init__(self, values):
        self._values = list(values)
        self._pos = 0
        self.sample_count = 0

    def uniform(self):
        value = self._values[self._pos]
        self._pos += 1
        return value

    def sample_uniform(self):
        self.sample_count += 1
        return self.uniform()
