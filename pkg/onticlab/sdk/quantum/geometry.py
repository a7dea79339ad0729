"""Phase-invariant geometry on the space of rays."""
import numpy as np

from onticlab.sdk.quantum.stateVector import StateVector, inner_product


def orthogonal_weight(a: StateVector, b: StateVector) -> float:
    """
    1 - |⟨a|b⟩|², evaluated as ‖b - ⟨a|b⟩a‖².

    The projection form keeps full relative precision when b is close to a,
    where the subtraction ``1 - |⟨a|b⟩|²`` would only resolve ~1e-16.
    """
    overlap = inner_product(a, b)
    residual = b.amplitudes - overlap * a.amplitudes
    weight = float(np.vdot(residual, residual).real)
    return min(max(weight, 0.0), 1.0)


def overlap_probability(a: StateVector, b: StateVector) -> float:
    """Born transition probability |⟨a|b⟩|²."""
    return min(abs(inner_product(a, b)) ** 2, 1.0)


def fubini_study_dist2(a: StateVector, b: StateVector) -> float:
    """Infinitesimal Fubini-Study form dD² = 4·(1 - |⟨a|b⟩|²)."""
    return 4.0 * orthogonal_weight(a, b)


def fidelity_error(a: StateVector, b: StateVector) -> float:
    """1 - fidelity between two pure states."""
    return orthogonal_weight(a, b)
