"""Truncated Fock-space realization on coherent state pairs.

The nonorthogonal pair becomes {|alpha>, |-alpha>} for real alpha >= 0, with
overlap kappa = exp(-2 alpha^2).  Single-mode vectors are length-n arrays over
photon numbers 0 .. n_max - 1; two-mode states are n x n amplitude arrays with
rows indexing the first mode.  Includes the cutoff-M synthesis of the
Hadamard gate acting on the displaced cat qubit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import gammaln

from .errors import ConvergenceWarning, DegenerateState, DomainError, TruncationError
from .gates import hadamard_rotation
from .twostate import DensityMatrix, _check_index, _real_scalar

_TAIL_TOL = 1e-12
_GATE_WARN = 0.1


@dataclass(frozen=True)
class FockSpace:
    """Photon-number space truncated to levels 0 .. n_max - 1."""

    n_max: int

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise DomainError(f"n_max must be an integer >= 2, got {self.n_max!r}")
        object.__setattr__(self, "n_max", int(self.n_max))

    def annihilation(self) -> np.ndarray:
        return np.diag(np.sqrt(np.arange(1.0, self.n_max)), 1)

    def creation(self) -> np.ndarray:
        return self.annihilation().T.copy()

    def number_operator(self) -> np.ndarray:
        return np.diag(np.arange(float(self.n_max)))

    def identity(self) -> np.ndarray:
        return np.eye(self.n_max)

    def vacuum(self) -> np.ndarray:
        vec = np.zeros(self.n_max)
        vec[0] = 1.0
        return vec


def default_truncation(alpha: float) -> int:
    """Cutoff that covers coherent amplitudes up to 2 alpha with wide margin."""
    x = 2.0 * abs(_real_scalar(alpha, "alpha"))
    return math.ceil(x * x + 8.0 * x + 20.0)


def coherent_state(alpha: float, space: FockSpace) -> np.ndarray:
    """Coherent amplitude vector e^{-a^2/2} a^n / sqrt(n!), renormalized.

    alpha may be any real number.  Raises TruncationError when the cutoff
    drops 1e-12 or more of the probability mass.
    """
    a = _real_scalar(alpha, "alpha")
    if a == 0.0:
        return space.vacuum()
    ns = np.arange(space.n_max)
    log_mag = -0.5 * a * a + ns * math.log(abs(a)) - 0.5 * gammaln(ns + 1)
    vec = np.sign(a) ** ns * np.exp(log_mag)
    tail = 1.0 - float(vec @ vec)
    if tail >= _TAIL_TOL:
        raise TruncationError(
            f"n_max={space.n_max} drops {tail:.3e} of the coherent mass at alpha={a}"
        )
    return vec / np.linalg.norm(vec)


def displacement_operator(alpha: float, space: FockSpace) -> np.ndarray:
    """exp(alpha (adag - a)) for real alpha.

    Validated in place: the displaced vacuum must match coherent_state(alpha)
    to 1e-9, otherwise TruncationError.
    """
    a = _real_scalar(alpha, "alpha")
    ad = space.creation()
    dop = expm(a * (ad - ad.T))
    defect = float(np.linalg.norm(dop @ space.vacuum() - coherent_state(a, space)))
    if defect > 1e-9:
        raise TruncationError(
            f"displaced vacuum deviates from the coherent state by {defect:.3e}"
        )
    return dop


def _check_coherent_args(index: int, alpha: float) -> float:
    _check_index(index)
    a = _real_scalar(alpha, "alpha")
    if a < 0.0:
        raise DomainError(f"alpha must be nonnegative, got {a}")
    if a == 0.0 and index in (2, 4):
        raise DegenerateState(f"index {index} vanishes at alpha = 0")
    return a


def quasi_bell_coherent(index: int, alpha: float, space: FockSpace) -> np.ndarray:
    """Two-mode quasi-Bell state on {|alpha>, |-alpha>} as an n x n array.

    The pair overlap is kappa = exp(-2 alpha^2).  Indices 2 and 4 vanish at
    alpha = 0 and raise DegenerateState there.
    """
    a = _check_coherent_args(index, alpha)
    plus = coherent_state(a, space)
    minus = coherent_state(-a, space)
    if index == 1:
        vec = np.outer(plus, minus) + np.outer(minus, plus)
    elif index == 2:
        vec = np.outer(plus, minus) - np.outer(minus, plus)
    elif index == 3:
        vec = np.outer(plus, plus) + np.outer(minus, minus)
    else:
        vec = np.outer(plus, plus) - np.outer(minus, minus)
    return vec / np.linalg.norm(vec)


def partial_trace(state: np.ndarray, keep: str = "A") -> DensityMatrix:
    """Reduced density of one mode of a two-mode amplitude array."""
    m = np.asarray(state)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"two-mode state must be a square array, got shape {m.shape}")
    if keep == "A":
        rho = m @ m.conj().T
    elif keep == "B":
        rho = m.T @ m.conj()
    else:
        raise DomainError(f"keep must be 'A' or 'B', got {keep!r}")
    return DensityMatrix(rho)


def mean_photon_number(index: int, alpha: float, space: FockSpace | None = None) -> float:
    """Mean photon number of the first mode, by numeric partial trace."""
    a = _check_coherent_args(index, alpha)
    if space is None:
        space = FockSpace(default_truncation(a))
    rho = partial_trace(quasi_bell_coherent(index, a, space), "A")
    return float(np.arange(space.n_max) @ np.real(np.diag(rho.entries)))


def mean_photon_number_closed(index: int, alpha: float) -> float:
    """Closed form alpha^2 (1 -/+ kappa^2)/(1 +/- kappa^2), sign by index.

    Indices 1 and 3 take the smaller value, 2 and 4 the larger; both tend to
    alpha^2 as the overlap vanishes.
    """
    a = _check_coherent_args(index, alpha)
    k2 = math.exp(-4.0 * a * a)
    if index in (1, 3):
        return a * a * (1.0 - k2) / (1.0 + k2)
    return a * a * (1.0 + k2) / (1.0 - k2)


def characteristic_function_numeric(state, xi, eta, tail_tol: float = 1e-9) -> complex:
    """Symmetric-order two-mode characteristic function by dense matrix action.

    Applies exp(xi adag) exp(-xi* a) per mode and the Gaussian factor
    exp(-(|xi|^2 + |eta|^2)/2), then takes the overlap with the input.  The
    displaced state must keep the input norm to tail_tol, otherwise the
    cutoff is too small and TruncationError is raised.
    """
    m = np.asarray(state, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"two-mode state must be a square array, got shape {m.shape}")
    n = m.shape[0]
    xi = complex(xi)
    eta = complex(eta)
    a = np.diag(np.sqrt(np.arange(1.0, n)), 1)
    ad = a.T
    op_a = expm(xi * ad) @ expm(-np.conj(xi) * a)
    op_b = expm(eta * ad) @ expm(-np.conj(eta) * a)
    gauss = math.exp(-(abs(xi) ** 2 + abs(eta) ** 2) / 2.0)
    displaced = gauss * (op_a @ m @ op_b.T)
    defect = abs(float(np.linalg.norm(displaced)) - float(np.linalg.norm(m)))
    if defect > tail_tol:
        raise TruncationError(
            f"displacement by (|xi|={abs(xi):.3g}, |eta|={abs(eta):.3g}) loses "
            f"{defect:.3e} of the norm at n_max={n}"
        )
    return complex(np.vdot(m, displaced))


def characteristic_function_closed(index: int, alpha: float, xi, eta) -> complex:
    """Closed form of the quasi-Bell characteristic function.

    Four exponential terms; the cross terms carry the squared pair overlap
    kappa^2, which makes C(0, 0) = 1 exactly.
    """
    a = _check_coherent_args(index, alpha)
    xi = complex(xi)
    eta = complex(eta)
    k2 = math.exp(-4.0 * a * a)
    h2 = 1.0 / (2.0 * (1.0 + k2)) if index in (1, 3) else 1.0 / (2.0 * (1.0 - k2))
    sign = 1.0 if index in (1, 3) else -1.0
    a1, a2 = xi - np.conj(xi), xi + np.conj(xi)
    b1, b2 = eta - np.conj(eta), eta + np.conj(eta)
    if index in (1, 2):
        terms = (
            np.exp((a1 - b1) * a)
            + np.exp((-a1 + b1) * a)
            + sign * k2 * (np.exp((a2 - b2) * a) + np.exp((-a2 + b2) * a))
        )
    else:
        terms = (
            np.exp((a1 + b1) * a)
            + np.exp(-(a1 + b1) * a)
            + sign * k2 * (np.exp((a2 + b2) * a) + np.exp(-(a2 + b2) * a))
        )
    gauss = math.exp(-(abs(xi) ** 2 + abs(eta) ** 2) / 2.0)
    return complex(h2 * gauss * terms)


def gaussian_characteristic(state, xi, eta) -> complex:
    """Characteristic function of the Gaussian sharing the state's moments.

    Evaluates exp(<X> + Var(X)/2) with X = xi adag_A - xi* a_A + eta adag_B
    - eta* a_B, the exact value for any Gaussian state.  Serves as the
    reference in non-Gaussianity checks.
    """
    m = np.asarray(state, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"two-mode state must be a square array, got shape {m.shape}")
    n = m.shape[0]
    xi = complex(xi)
    eta = complex(eta)
    a = np.diag(np.sqrt(np.arange(1.0, n)), 1)
    ad = a.T

    def apply_x(arr):
        return (
            xi * (ad @ arr)
            - np.conj(xi) * (a @ arr)
            + eta * (arr @ a)
            - np.conj(eta) * (arr @ ad)
        )

    x1 = apply_x(m)
    mean = complex(np.vdot(m, x1))
    second = complex(np.vdot(m, apply_x(x1)))
    return complex(np.exp(mean + (second - mean * mean) / 2.0))


def even_odd_coherent(alpha: float, space: FockSpace) -> tuple[np.ndarray, np.ndarray]:
    """Even and odd coherent superpositions (|alpha> +/- |-alpha>), normalized.

    The even state is supported on even photon numbers only, the odd state on
    odd ones.  Requires alpha > 0; the odd state vanishes at alpha = 0.
    """
    a = _real_scalar(alpha, "alpha")
    if a < 0.0:
        raise DomainError(f"alpha must be nonnegative, got {a}")
    if a == 0.0:
        raise DegenerateState("odd superposition vanishes at alpha = 0")
    plus = coherent_state(a, space)
    minus = coherent_state(-a, space)
    even = plus + minus
    odd = plus - minus
    return even / np.linalg.norm(even), odd / np.linalg.norm(odd)


@dataclass(frozen=True)
class SynthesisResult:
    """Output of synthesize_hadamard.

    c holds the target expansion coefficients c_0 .. c_M, d their unit
    renormalization over 1 .. M.  p_m is anti-Hermitian and q_m Hermitian;
    delta_m is the relative mass beyond the cutoff and gate_error the worst
    deviation from the exact gate over the two displaced cat-basis states.
    """

    alpha: float
    m_cut: int
    c: np.ndarray
    d: np.ndarray
    p_m: np.ndarray
    q_m: np.ndarray
    delta_m: float
    gate_error: float


def synthesis_coefficients(alpha: float, m_cut: int) -> tuple[np.ndarray, np.ndarray, float]:
    """Target coefficients and cutoff residual for the gate synthesis.

    c_n = e^{-2 alpha^2} (-2 alpha)^n / sqrt(n!) are the number-basis
    amplitudes of |-2 alpha> for n = 0 .. m_cut; d renormalizes c_1 .. c_M to
    a unit vector.  delta_m = 1 - sum(c_n^2, n=1..M) / (1 - c_0^2) lies in
    [0, 1], never increases with the cutoff and tends to zero.
    """
    a = _real_scalar(alpha, "alpha")
    if a <= 0.0:
        raise DomainError(f"synthesis requires alpha > 0, got {a}")
    if int(m_cut) != m_cut or m_cut < 1:
        raise DomainError(f"m_cut must be an integer >= 1, got {m_cut!r}")
    m = int(m_cut)
    ns = np.arange(m + 1)
    x = 2.0 * a
    log_mag = -0.5 * x * x + ns * math.log(x) - 0.5 * gammaln(ns + 1)
    c = (-1.0) ** ns * np.exp(log_mag)
    kept = math.fsum(float(v) for v in c[1:] ** 2)
    c0sq = float(c[0]) ** 2
    d = c[1:] / math.sqrt(kept)
    delta = 1.0 - kept / (1.0 - c0sq)
    return c, d, float(delta)


def synthesize_hadamard(
    alpha: float, m_cut: int, space: FockSpace | None = None
) -> SynthesisResult:
    """Build the cutoff-M Hadamard generators and score them against the exact gate.

    With c_0 = exp(-2 alpha^2), S = sum_{l=0..M} (-adag)^l a^l / l! and
    T = sum_{n=1..M} d_n a^n / sqrt(n!), the generators are

        P_M = (S T)^dag - S T
        Q_M = c_0 (S - T^dag S T) + sqrt(1 - c_0^2) (S T + (S T)^dag)

    normalized so they match the displaced exact generators on the span of
    the displaced cat states up to the cutoff residual.  The approximate gate
    is -i exp(i (pi/2) Q_M) exp((pi/4) P_M).  gate_error is the worst norm
    deviation from the exact displaced Hadamard over the two cat-basis
    states; it scales like sqrt(delta_m) because the exact gate moves that
    much amplitude above the cutoff.  ConvergenceWarning is emitted above
    0.1.
    """
    a = _real_scalar(alpha, "alpha")
    c, d, delta = synthesis_coefficients(a, m_cut)
    m = int(m_cut)
    if space is None:
        space = FockSpace(default_truncation(a))
    floor = 4 * max(1, math.ceil(4.0 * a * a)) + 16
    if space.n_max < floor:
        raise TruncationError(
            f"n_max={space.n_max} below the synthesis floor {floor} for alpha={a}"
        )
    if m >= space.n_max:
        raise DomainError(f"m_cut={m} must be below n_max={space.n_max}")
    n = space.n_max
    a_op = space.annihilation()
    ad_op = a_op.T

    s_mat = np.zeros((n, n))
    left = np.eye(n)
    right = np.eye(n)
    fact = 1.0
    for l in range(m + 1):
        if l:
            left = left @ (-ad_op)
            right = a_op @ right
            fact *= l
        s_mat += left @ right / fact

    t_mat = np.zeros((n, n))
    power = np.eye(n)
    for k in range(1, m + 1):
        power = power @ a_op
        t_mat += float(d[k - 1]) * math.exp(-0.5 * float(gammaln(k + 1))) * power

    c0 = float(c[0])
    s_full = math.sqrt(1.0 - c0 * c0)
    st = s_mat @ t_mat
    p_m = st.T - st
    q_m = c0 * (s_mat - t_mat.T @ s_mat @ t_mat) + s_full * (st + st.T)
    # symmetric in exact arithmetic; matmul roundoff on the large high-n
    # entries would otherwise break Hermiticity at the 1e-16 relative level
    q_m = (q_m + q_m.T) / 2.0

    u_approx = -1j * expm(1j * (math.pi / 2.0) * q_m) @ expm((math.pi / 4.0) * p_m)

    even, odd = even_odd_coherent(a, space)
    h2 = hadamard_rotation()
    lift = (
        np.eye(n)
        - np.outer(even, even)
        - np.outer(odd, odd)
        + h2[0, 0] * np.outer(even, even)
        + h2[0, 1] * np.outer(even, odd)
        + h2[1, 0] * np.outer(odd, even)
        + h2[1, 1] * np.outer(odd, odd)
    )
    d_minus = displacement_operator(-a, space)
    u_exact = d_minus @ lift @ displacement_operator(a, space)
    cat_e = d_minus @ even
    cat_o = d_minus @ odd
    diff = u_approx - u_exact
    gate_error = max(
        float(np.linalg.norm(diff @ cat_e)), float(np.linalg.norm(diff @ cat_o))
    )
    if gate_error > _GATE_WARN:
        warnings.warn(
            f"synthesized gate error {gate_error:.3g} at m_cut={m}", ConvergenceWarning
        )
    return SynthesisResult(
        alpha=a,
        m_cut=m,
        c=c,
        d=d,
        p_m=p_m,
        q_m=q_m,
        delta_m=delta,
        gate_error=gate_error,
    )
