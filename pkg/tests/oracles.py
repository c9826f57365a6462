"""Independent reference routes used to check library output.

Everything here is built from first principles (explicit Gram-Schmidt
embedding, eigendecompositions, high-precision series) without calling the
package, so agreement is meaningful.
"""

import math

import numpy as np


def embedded_pair(kappa):
    """|psi_1>, |psi_2> embedded in C^2 with psi_1 = (1, 0)."""
    return np.array([1.0, 0.0]), np.array([kappa, math.sqrt(1.0 - kappa * kappa)])


def embedded_quasi_bell(kappa, index):
    """Quasi-Bell 4-vector in the embedding basis, normalized."""
    p1, p2 = embedded_pair(kappa)
    if index in (1, 2):
        t1, t2 = np.kron(p1, p2), np.kron(p2, p1)
    else:
        t1, t2 = np.kron(p1, p1), np.kron(p2, p2)
    sign = 1.0 if index in (1, 3) else -1.0
    vec = t1 + sign * t2
    return vec / np.linalg.norm(vec)


def embedded_even_odd(kappa):
    """Even/odd combinations of the embedded pair, unnormalized inputs."""
    p1, p2 = embedded_pair(kappa)
    e = (p1 + p2) / math.sqrt(2.0 * (1.0 + kappa))
    o = (p1 - p2) / math.sqrt(2.0 * (1.0 - kappa))
    return e, o


def reduced_from_vector(vec):
    """Trace out the second tensor factor of a two-qubit 4-vector."""
    m = np.asarray(vec).reshape(2, 2)
    return m @ m.conj().T


def entropy_bits_of(rho):
    lam = np.linalg.eigvalsh(rho)
    lam = lam[lam > 1e-15]
    return float(-(lam @ np.log2(lam)))


def binary_entropy_highprec(x):
    from mpmath import mp, mpf

    with mp.workdps(50):
        v = mpf(repr(float(x)))
        if v == 0 or v == 1:
            return 0.0
        return float(-(v * mp.log(v, 2) + (1 - v) * mp.log(1 - v, 2)))


def coherent_overlap(a, b):
    """<a|b> for real coherent amplitudes."""
    return math.exp(-0.5 * (a - b) ** 2)


def coherent_charfunc(beta, xi):
    """<beta|D(xi)|beta> for a real coherent amplitude beta."""
    xi = complex(xi)
    return complex(np.exp(-abs(xi) ** 2 / 2.0 + (xi - np.conj(xi)) * beta))


def delta_highprec(alpha, m_cut):
    """Cutoff residual via 50-digit series."""
    from mpmath import exp, factorial, mp, mpf

    with mp.workdps(50):
        x = 4 * mpf(repr(float(alpha))) ** 2
        c0sq = exp(-x)
        kept = sum(exp(-x) * x**n / factorial(n) for n in range(1, m_cut + 1))
        return float(1 - kept / (1 - c0sq))


def poisson_tail_delta(alpha, m_cut):
    """Same residual via the regularized incomplete gamma identity."""
    from scipy.special import gammainc

    x = 4.0 * alpha * alpha
    return float(gammainc(m_cut + 1, x) / -math.expm1(-x))


def rotation_via_expm(theta):
    """exp(theta (|o><e| - |e><o|)) evaluated by scipy."""
    from scipy.linalg import expm

    gen = np.array([[0.0, -1.0], [1.0, 0.0]])
    return expm(theta * gen)
