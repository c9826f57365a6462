"""Gates on the even/odd qubit encoding.

Single-mode gates are 2x2 arrays in the (|e>, |o>) basis.  Two-mode gates are
4x4 arrays over (|ee>, |eo>, |oe>, |oo>) with the first mode as control.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm

from .twostate import OverlapPair, TwoQubitState, quasi_bell_state


def walsh_hadamard(theta: float = math.pi / 4) -> np.ndarray:
    """Rotation exp(theta (|o><e| - |e><o|)) in the (e, o) basis.

    The generator sign is fixed so the rotated |e> carries a positive |o>
    component; at the default angle |e> maps to (|e> + |o>)/sqrt(2).
    """
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def controlled_not() -> np.ndarray:
    """Permutation swapping |e> and |o> on the target when the control is odd.

    Hermitian and its own inverse.
    """
    g = np.zeros((4, 4))
    g[0, 0] = g[1, 1] = 1.0
    g[2, 3] = g[3, 2] = 1.0
    return g


def generate_quasi_bell(pair: OverlapPair) -> tuple[TwoQubitState, float]:
    """Run the two-gate preparation circuit and score it against index 3.

    Starting from |ee>, the half-angle rotation on the control followed by the
    controlled-not yields (|ee> + |oo>)/sqrt(2) regardless of the overlap.
    The returned fidelity |<Psi_3|out>| equals 1/sqrt(1 + kappa^2), so the
    circuit prepares the index-3 state exactly only for an orthogonal pair.
    """
    start = np.zeros(4)
    start[0] = 1.0
    circuit = controlled_not() @ np.kron(walsh_hadamard(), np.eye(2))
    out = TwoQubitState(circuit @ start)
    fidelity = abs(out.overlap(quasi_bell_state(pair, 3)))
    return out, float(fidelity)


def hadamard_rotation() -> np.ndarray:
    """Hadamard on the (e, o) qubit from two generator exponentials.

    Evaluates -i exp(i (pi/2) Q) exp((pi/4) P) with P = |e><o| - |o><e| and
    Q = |e><e| - |o><o|; the product equals the standard Hadamard matrix.
    """
    p = np.array([[0.0, 1.0], [-1.0, 0.0]])
    q = np.array([[1.0, 0.0], [0.0, -1.0]])
    return -1j * expm(1j * (math.pi / 2.0) * q) @ expm((math.pi / 4.0) * p)
