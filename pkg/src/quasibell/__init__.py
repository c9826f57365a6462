"""Quasi-Bell states on nonorthogonal state pairs.

Closed-form entangled states and entanglement measures, gates on the
even/odd qubit encoding, a truncated Fock-space realization on coherent
state pairs, and the cutoff-M synthesis of the cat-qubit Hadamard gate.
"""

from .errors import (
    ConvergenceWarning,
    DegenerateState,
    DomainError,
    TruncationError,
    ZeroNormState,
)
from .fock import (
    FockSpace,
    SynthesisResult,
    characteristic_function_closed,
    characteristic_function_numeric,
    coherent_state,
    default_truncation,
    displacement_operator,
    even_odd_coherent,
    gaussian_characteristic,
    mean_photon_number,
    mean_photon_number_closed,
    partial_trace,
    quasi_bell_coherent,
    synthesis_coefficients,
    synthesize_hadamard,
)
from .gates import controlled_not, generate_quasi_bell, hadamard_rotation, walsh_hadamard
from .twostate import (
    DensityMatrix,
    EvenOddBasis,
    GeneralWeights,
    OverlapPair,
    TwoQubitState,
    binary_entropy,
    concurrence,
    entropy_of_entanglement,
    even_odd_basis,
    general_state,
    gram_matrix,
    quasi_bell_state,
    reduced_density,
    reduced_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceWarning",
    "DegenerateState",
    "DensityMatrix",
    "DomainError",
    "EvenOddBasis",
    "FockSpace",
    "GeneralWeights",
    "OverlapPair",
    "SynthesisResult",
    "TruncationError",
    "TwoQubitState",
    "ZeroNormState",
    "binary_entropy",
    "characteristic_function_closed",
    "characteristic_function_numeric",
    "coherent_state",
    "concurrence",
    "controlled_not",
    "default_truncation",
    "displacement_operator",
    "entropy_of_entanglement",
    "even_odd_basis",
    "even_odd_coherent",
    "gaussian_characteristic",
    "general_state",
    "generate_quasi_bell",
    "gram_matrix",
    "hadamard_rotation",
    "mean_photon_number",
    "mean_photon_number_closed",
    "partial_trace",
    "quasi_bell_coherent",
    "quasi_bell_state",
    "reduced_density",
    "reduced_eigenvalues",
    "synthesis_coefficients",
    "synthesize_hadamard",
    "walsh_hadamard",
]
