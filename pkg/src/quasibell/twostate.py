"""Quasi-Bell states on a nonorthogonal state pair.

The pair {|psi_1>, |psi_2>} has a real overlap kappa = <psi_1|psi_2> with
0 <= kappa < 1.  Everything downstream is expressed in the orthonormal
even/odd basis

    |e> = (|psi_1> + |psi_2>) / sqrt(2 (1 + kappa))
    |o> = (|psi_1> - |psi_2>) / sqrt(2 (1 - kappa))

and two-mode states are stored as amplitude 4-vectors over
(|ee>, |eo>, |oe>, |oo>).  Entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ZeroNormState

_EIG_FLOOR = -1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)


def _real_scalar(value, name: str) -> float:
    arr = np.asarray(value)
    if np.iscomplexobj(arr):
        if np.imag(arr) != 0:
            raise DomainError(f"{name} must be real, got {value!r}")
        arr = np.real(arr)
    try:
        out = float(arr)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real scalar, got {value!r}") from exc
    if not math.isfinite(out):
        raise DomainError(f"{name} must be finite, got {out}")
    return out


def _check_index(index: int) -> int:
    if index not in (1, 2, 3, 4):
        raise DomainError(f"index must be 1, 2, 3 or 4, got {index!r}")
    return int(index)


@dataclass(frozen=True)
class OverlapPair:
    """Nonorthogonal pair with real overlap kappa in [0, 1)."""

    kappa: float

    def __post_init__(self):
        k = _real_scalar(self.kappa, "kappa")
        if not 0.0 <= k < 1.0:
            raise DomainError(f"kappa must satisfy 0 <= kappa < 1, got {k}")
        object.__setattr__(self, "kappa", k)


@dataclass(frozen=True)
class EvenOddBasis:
    """Orthonormal basis from symmetric/antisymmetric pair combinations.

    ce and co are the normalization coefficients of the even and odd
    combinations, 1/sqrt(2 (1 +/- kappa)).
    """

    kappa: float
    ce: float
    co: float

    def pair_vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """|psi_1> and |psi_2> as coordinates in the (e, o) basis."""
        p = math.sqrt((1.0 + self.kappa) / 2.0)
        m = math.sqrt((1.0 - self.kappa) / 2.0)
        return np.array([p, m]), np.array([p, -m])


def even_odd_basis(pair: OverlapPair) -> EvenOddBasis:
    """Build the even/odd basis for a pair."""
    k = pair.kappa
    return EvenOddBasis(
        kappa=k,
        ce=1.0 / math.sqrt(2.0 * (1.0 + k)),
        co=1.0 / math.sqrt(2.0 * (1.0 - k)),
    )


@dataclass(frozen=True)
class TwoQubitState:
    """Normalized two-mode state, amplitudes ordered (ee, eo, oe, oo)."""

    amplitudes: np.ndarray
    label: int | None = None

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(4)
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"amplitudes must have unit norm, got {norm}")
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def from_unnormalized(cls, vector, label: int | None = None) -> TwoQubitState:
        vec = np.asarray(vector, dtype=complex).reshape(4)
        norm = float(np.linalg.norm(vec))
        if norm < 1e-14:
            raise ZeroNormState("state vector has zero norm")
        return cls(vec / norm, label=label)

    @property
    def matrix(self) -> np.ndarray:
        """Amplitudes as a 2x2 array, rows index the first mode."""
        return self.amplitudes.reshape(2, 2)

    def overlap(self, other: TwoQubitState) -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace matrix with eigenvalues bounded below by rounding noise."""

    entries: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.entries, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DomainError(f"density matrix must be square, got shape {rho.shape}")
        herm_defect = float(np.max(np.abs(rho - rho.conj().T)))
        if herm_defect > 1e-12:
            raise DomainError(f"density matrix not Hermitian, defect {herm_defect:.3e}")
        trace = float(np.trace(rho).real)
        if abs(trace - 1.0) > 1e-12:
            raise DomainError(f"density matrix trace must be 1, got {trace}")
        object.__setattr__(self, "entries", rho)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in descending order, clamped at zero.

        Values in [-1e-12, 0) count as rounding noise and clamp to 0; anything
        below that violates positivity.
        """
        eig = np.linalg.eigvalsh(self.entries)[::-1]
        if eig[-1] < _EIG_FLOOR:
            raise DomainError(f"density matrix has negative eigenvalue {eig[-1]:.3e}")
        return np.clip(eig, 0.0, None)

    def entropy_bits(self) -> float:
        """Von Neumann entropy, log base 2."""
        lam = self.eigenvalues()
        lam = lam[lam > 0.0]
        return float(-(lam @ np.log2(lam)))


def quasi_bell_state(pair: OverlapPair, index: int) -> TwoQubitState:
    """Equal-weight entangled superposition of pair products, index in 1..4.

    Indices 1 and 2 superpose |psi_1 psi_2> and |psi_2 psi_1> with a +/- sign,
    indices 3 and 4 superpose |psi_1 psi_1> and |psi_2 psi_2>.  Indices 2 and 4
    reduce to Bell states with amplitude 1/sqrt(2) on |eo> and |oe> for every
    kappa and are maximally entangled; indices 1 and 3 carry the overlap
    dependence on |ee> and |oo>.
    """
    index = _check_index(index)
    k = pair.kappa
    if index in (1, 3):
        h = 1.0 / math.sqrt(2.0 * (1.0 + k * k))
        a, b = (1.0 + k) * h, (1.0 - k) * h
        amp = [a, 0.0, 0.0, -b] if index == 1 else [a, 0.0, 0.0, b]
    else:
        r = math.sqrt(0.5)
        amp = [0.0, -r, r, 0.0] if index == 2 else [0.0, r, r, 0.0]
    return TwoQubitState(np.array(amp, dtype=complex), label=index)


def gram_matrix(pair: OverlapPair) -> np.ndarray:
    """Pairwise inner products of the four states, ordered by index.

    The identity except for the (1, 3) pair, whose inner product is
    2 kappa / (1 + kappa^2).
    """
    k = pair.kappa
    g = np.eye(4)
    g[0, 2] = g[2, 0] = 2.0 * k / (1.0 + k * k)
    return g


@dataclass(frozen=True)
class GeneralWeights:
    """Superposition weights (beta, sqrt(1 - beta^2)) with a relative sign.

    sign=None defers the sign to the family index given to general_state;
    an explicit +1 or -1 overrides it.
    """

    beta: float
    sign: int | None = None

    def __post_init__(self):
        b = _real_scalar(self.beta, "beta")
        if not 0.0 <= b <= 1.0:
            raise DomainError(f"beta must lie in [0, 1], got {b}")
        if self.sign not in (None, 1, -1):
            raise DomainError(f"sign must be +1, -1 or None, got {self.sign!r}")
        object.__setattr__(self, "beta", b)


def general_state(pair: OverlapPair, weights: GeneralWeights, family: int) -> TwoQubitState:
    """Unequal-weight generalization of quasi_bell_state.

    Families 1 and 2 build beta |psi_1 psi_2> + sign sqrt(1 - beta^2)
    |psi_2 psi_1>, families 3 and 4 the same over the aligned products.
    The sign is +1 for families 1 and 3 and -1 for families 2 and 4 unless
    weights.sign overrides it.  beta = 1/sqrt(2) recovers quasi_bell_state.
    """
    family = _check_index(family)
    beta = weights.beta
    gamma = math.sqrt(max(0.0, 1.0 - beta * beta))
    sign = weights.sign if weights.sign is not None else (1 if family in (1, 3) else -1)
    psi1, psi2 = even_odd_basis(pair).pair_vectors()
    if family in (1, 2):
        vec = beta * np.kron(psi1, psi2) + sign * gamma * np.kron(psi2, psi1)
    else:
        vec = beta * np.kron(psi1, psi1) + sign * gamma * np.kron(psi2, psi2)
    return TwoQubitState.from_unnormalized(vec)


def reduced_density(state: TwoQubitState) -> DensityMatrix:
    """Reduced state of the first mode, the second traced out."""
    m = state.matrix
    return DensityMatrix(m @ m.conj().T)


def reduced_eigenvalues(pair: OverlapPair, index: int) -> tuple[float, float]:
    """Closed-form eigenvalues of the reduced state, largest first.

    Indices 1 and 3 give (1 +/- kappa)^2 / (2 (1 + kappa^2)); indices 2 and 4
    give (1/2, 1/2).
    """
    index = _check_index(index)
    if index in (2, 4):
        return 0.5, 0.5
    k = pair.kappa
    den = 2.0 * (1.0 + k * k)
    return (1.0 + k) ** 2 / den, (1.0 - k) ** 2 / den


def binary_entropy(x: float) -> float:
    """H[x] = -x log2 x - (1 - x) log2 (1 - x), with H[0] = H[1] = 0.

    Arguments within 1e-12 outside [0, 1] clamp to the boundary; anything
    further out raises DomainError.
    """
    x = _real_scalar(x, "x")
    if not -1e-12 <= x <= 1.0 + 1e-12:
        raise DomainError(f"binary_entropy argument must lie in [0, 1], got {x}")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def entropy_of_entanglement(state: TwoQubitState) -> float:
    """Entropy in bits of the first mode's reduced state."""
    return reduced_density(state).entropy_bits()


def concurrence(state: TwoQubitState) -> float:
    """|<state| (sigma_y x sigma_y) |state*>| for the pure state."""
    conj = state.amplitudes.conj()
    return float(abs(conj @ _SPIN_FLIP @ conj))
