import math

import numpy as np
import pytest

import oracles
from quasibell import (
    DegenerateState,
    DomainError,
    FockSpace,
    OverlapPair,
    TruncationError,
    characteristic_function_closed,
    characteristic_function_numeric,
    coherent_state,
    default_truncation,
    displacement_operator,
    entropy_of_entanglement,
    even_odd_coherent,
    gaussian_characteristic,
    mean_photon_number,
    mean_photon_number_closed,
    partial_trace,
    quasi_bell_coherent,
    quasi_bell_state,
)


def test_fock_space_validation():
    FockSpace(2)
    with pytest.raises(DomainError):
        FockSpace(1)
    with pytest.raises(DomainError):
        FockSpace(2.5)


def test_commutator_truncation_pattern():
    space = FockSpace(12)
    comm = (
        space.annihilation() @ space.creation()
        - space.creation() @ space.annihilation()
    )
    expected = np.eye(12)
    expected[-1, -1] = -(12 - 1)
    assert np.max(np.abs(comm - expected)) < 1e-12


def test_number_operator_consistency():
    space = FockSpace(10)
    n_op = space.creation() @ space.annihilation()
    assert np.max(np.abs(n_op - space.number_operator())) < 1e-12


def test_default_truncation_floor():
    assert default_truncation(0.0) == 20
    assert default_truncation(1.0) >= 40
    # the cutoff must actually hold the coherent mass it claims to cover
    for alpha in (0.5, 1.0, 2.0, 3.0):
        space = FockSpace(default_truncation(alpha))
        coherent_state(2.0 * alpha, space)


def test_coherent_vacuum_limit():
    space = FockSpace(8)
    assert np.array_equal(coherent_state(0.0, space), space.vacuum())


def test_coherent_overlap_grid():
    space = FockSpace(60)
    for alpha in (0.2, 0.5, 1.0, 1.5, 2.0):
        plus = coherent_state(alpha, space)
        minus = coherent_state(-alpha, space)
        assert abs(plus @ minus - math.exp(-2.0 * alpha * alpha)) < 1e-12
        assert abs(plus @ minus - oracles.coherent_overlap(alpha, -alpha)) < 1e-12


def test_coherent_mean_photon():
    space = FockSpace(80)
    for alpha in (0.3, 1.0, 2.0):
        vec = coherent_state(alpha, space)
        mean = float(np.arange(space.n_max) @ vec ** 2)
        assert abs(mean - alpha * alpha) < 1e-10


def test_coherent_sign_pattern():
    vec = coherent_state(-1.0, FockSpace(40))
    signs = np.sign(vec[:6])
    assert np.array_equal(signs, np.array([1.0, -1.0, 1.0, -1.0, 1.0, -1.0]))


def test_coherent_truncation_error():
    with pytest.raises(TruncationError):
        coherent_state(5.0, FockSpace(16))


def test_displacement_inverts_coherent():
    space = FockSpace(60)
    for alpha in (0.4, 1.0, 1.8):
        back = displacement_operator(-alpha, space) @ coherent_state(alpha, space)
        assert np.linalg.norm(back - space.vacuum()) < 1e-9


def test_displacement_composition():
    space = FockSpace(80)
    moved = displacement_operator(-1.0, space) @ coherent_state(-1.0, space)
    assert np.linalg.norm(moved - coherent_state(-2.0, space)) < 1e-9
    prod = displacement_operator(1.0, space) @ displacement_operator(-1.0, space)
    # unitary inverse pair; compare on the subspace the cutoff represents well
    vac = space.vacuum()
    assert np.linalg.norm(prod @ vac - vac) < 1e-9


def test_quasi_bell_coherent_norm_and_errors():
    space = FockSpace(40)
    for index in (1, 2, 3, 4):
        state = quasi_bell_coherent(index, 0.7, space)
        assert abs(np.linalg.norm(state) - 1.0) < 1e-12
    for index in (2, 4):
        with pytest.raises(DegenerateState):
            quasi_bell_coherent(index, 0.0, space)
    with pytest.raises(DomainError):
        quasi_bell_coherent(1, -0.5, space)
    with pytest.raises(DomainError):
        quasi_bell_coherent(7, 0.5, space)


def test_reduced_eigenvalues_half_overlap():
    # exp(-2 alpha^2) = 0.5 puts the index-1 reduced spectrum at {0.9, 0.1}
    alpha = math.sqrt(math.log(2.0) / 2.0)
    assert abs(alpha - 0.588705011258) < 1e-10
    space = FockSpace(default_truncation(alpha))
    rho = partial_trace(quasi_bell_coherent(1, alpha, space), "A")
    eig = rho.eigenvalues()
    assert abs(eig[0] - 0.9) < 1e-8
    assert abs(eig[1] - 0.1) < 1e-8
    assert np.max(np.abs(eig[2:])) < 1e-8


def test_partial_trace_sides_agree():
    space = FockSpace(40)
    state = quasi_bell_coherent(3, 0.8, space)
    ent_a = partial_trace(state, "A").entropy_bits()
    ent_b = partial_trace(state, "B").entropy_bits()
    assert abs(ent_a - ent_b) < 1e-10
    with pytest.raises(DomainError):
        partial_trace(state, "C")


def test_fock_entropy_matches_two_state_model():
    for alpha in (0.3, 0.588705011258, 1.0, 2.0):
        kappa = math.exp(-2.0 * alpha * alpha)
        pair = OverlapPair(kappa)
        space = FockSpace(default_truncation(alpha))
        for index in (1, 2, 3, 4):
            fock = partial_trace(quasi_bell_coherent(index, alpha, space), "A")
            abstract = entropy_of_entanglement(quasi_bell_state(pair, index))
            assert abs(fock.entropy_bits() - abstract) < 1e-8


def test_mean_photon_closed_vs_numeric():
    for alpha in (0.25, 0.5, 1.0, 2.0):
        for index in (1, 2, 3, 4):
            closed = mean_photon_number_closed(index, alpha)
            numeric = mean_photon_number(index, alpha)
            assert abs(closed - numeric) < 1e-10


def test_mean_photon_reference_values():
    assert abs(mean_photon_number_closed(1, 1.0) - 0.964027580076) < 1e-10
    assert abs(mean_photon_number_closed(2, 1.0) - 1.03731472073) < 1e-10
    # both branches approach alpha^2 when the overlap dies out
    assert abs(mean_photon_number_closed(1, 3.0) - 9.0) < 1e-6
    assert abs(mean_photon_number_closed(2, 3.0) - 9.0) < 1e-6


def test_even_odd_coherent_parity_support():
    space = FockSpace(50)
    even, odd = even_odd_coherent(1.0, space)
    assert np.max(np.abs(even[1::2])) == 0.0
    assert np.max(np.abs(odd[0::2])) == 0.0
    assert abs(np.linalg.norm(even) - 1.0) < 1e-12
    assert abs(np.linalg.norm(odd) - 1.0) < 1e-12
    with pytest.raises(DegenerateState):
        even_odd_coherent(0.0, space)


def test_even_odd_coherent_photon_numbers():
    space = FockSpace(60)
    ns = np.arange(space.n_max)
    for alpha in (0.5, 1.0, 1.5):
        even, odd = even_odd_coherent(alpha, space)
        a2 = alpha * alpha
        assert abs(float(ns @ even ** 2) - a2 * math.tanh(a2)) < 1e-10
        assert abs(float(ns @ odd ** 2) - a2 / math.tanh(a2)) < 1e-10
    even, _ = even_odd_coherent(1.0, space)
    assert abs(float(ns @ even ** 2) - 0.761594155956) < 1e-10


def test_characteristic_function_product_coherent():
    space = FockSpace(40)
    beta_a, beta_b = 0.6, -0.3
    state = np.outer(coherent_state(beta_a, space), coherent_state(beta_b, space))
    for xi, eta in ((0.3j, 0.3j), (0.2 + 0.1j, -0.4j), (0.0, 0.5)):
        got = characteristic_function_numeric(state, xi, eta)
        want = oracles.coherent_charfunc(beta_a, xi) * oracles.coherent_charfunc(
            beta_b, eta
        )
        assert abs(got - want) < 1e-10
    # purely imaginary symmetric point of the vacuum-like envelope
    vac_pair = np.outer(space.vacuum(), space.vacuum())
    got = characteristic_function_numeric(vac_pair, 0.3j, 0.0)
    assert abs(got - math.exp(-0.045)) < 1e-12


def test_characteristic_function_closed_matches_numeric():
    for alpha in (0.5, 1.0):
        space = FockSpace(default_truncation(alpha) + 10)
        for index in (1, 2, 3, 4):
            state = quasi_bell_coherent(index, alpha, space)
            for xi in (0.0, 0.3, 0.2j, -0.25 + 0.1j):
                for eta in (0.0, -0.4, 0.35j):
                    got = characteristic_function_numeric(state, xi, eta)
                    want = characteristic_function_closed(index, alpha, xi, eta)
                    assert abs(got - want) < 1e-10


def test_characteristic_function_origin_and_reality():
    for index in (1, 2, 3, 4):
        assert abs(characteristic_function_closed(index, 0.8, 0.0, 0.0) - 1.0) < 1e-14
    # real arguments keep the index-1 value real
    for xi in (-0.4, 0.1, 0.5):
        for eta in (-0.2, 0.3):
            value = characteristic_function_closed(1, 0.7, xi, eta)
            assert abs(value.imag) < 1e-14


def test_characteristic_function_truncation_error():
    space = FockSpace(16)
    state = quasi_bell_coherent(1, 0.5, space)
    with pytest.raises(TruncationError):
        characteristic_function_numeric(state, 3.0, 0.0)


def test_gaussian_characteristic_agrees_on_gaussian_states():
    space = FockSpace(40)
    state = np.outer(coherent_state(0.5, space), coherent_state(-0.2, space))
    for xi, eta in ((0.3j, -0.1j), (0.2, 0.4), (0.1 + 0.2j, 0.0)):
        gauss = gaussian_characteristic(state, xi, eta)
        exact = characteristic_function_numeric(state, xi, eta)
        assert abs(gauss - exact) < 1e-10


def test_gaussian_characteristic_detects_non_gaussian():
    alpha = 1.0
    space = FockSpace(default_truncation(alpha))
    state = quasi_bell_coherent(4, alpha, space)
    worst = 0.0
    for x in np.linspace(-0.5, 0.5, 5):
        for y in np.linspace(-0.5, 0.5, 5):
            gauss = gaussian_characteristic(state, complex(x, y), complex(-y, x))
            exact = characteristic_function_closed(4, alpha, complex(x, y), complex(-y, x))
            worst = max(worst, abs(gauss - exact))
    assert worst > 1e-3
