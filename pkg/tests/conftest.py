import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20250817)


def random_two_qubit_states(rng, count):
    """Normalized complex 4-vectors, uniform on the sphere."""
    raw = rng.normal(size=(count, 4)) + 1j * rng.normal(size=(count, 4))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)
