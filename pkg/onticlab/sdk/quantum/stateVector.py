"""
Pure states of a finite-dimensional Hilbert space.

A StateVector is a ray representative: global phase is never canonicalized,
so every comparison between states goes through phase-invariant functionals
(overlap modulus, Fubini-Study distance).
"""
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from onticlab.sdk.common.exceptions import DimensionMismatchError, NormalizationError, NumericalError

NORM_TOLERANCE = 1e-12

ArrayLike = Union[Sequence[complex], np.ndarray]


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    Unit-norm complex amplitude vector.

    Attributes:
        amplitudes: Read-only complex128 array of length ``dim`` (dim >= 2)
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size < 2:
            raise DimensionMismatchError(f"state dimension must be at least 2, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise NumericalError("state amplitudes must be finite")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOLERANCE:
            raise NormalizationError(f"squared norm {norm_sq!r} differs from 1 by more than {NORM_TOLERANCE}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    def __len__(self) -> int:
        return self.dim

    @classmethod
    def from_amplitudes(cls, values: ArrayLike, normalize: bool = False) -> "StateVector":
        """
        Build a state from raw amplitudes.

        :param values: Complex amplitudes
        :param normalize: Rescale to unit norm instead of rejecting
        """
        amps = np.asarray(values, dtype=np.complex128).reshape(-1)
        if normalize:
            norm = float(np.linalg.norm(amps))
            if norm == 0.0 or not np.isfinite(norm):
                raise NormalizationError("cannot normalize a zero or non-finite vector")
            amps = amps / norm
        return cls(amps)

    def with_phase(self, alpha: float) -> "StateVector":
        """Same ray, amplitudes multiplied by exp(i·alpha)."""
        return StateVector(self.amplitudes * np.exp(1j * alpha))

    def bloch_vector(self) -> np.ndarray:
        return bloch_vector(self)


def _require_same_dim(a: StateVector, b: StateVector) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")


def inner_product(a: StateVector, b: StateVector) -> complex:
    """
    ⟨a|b⟩ = Σ conj(a_i)·b_i.

    :raises DimensionMismatchError: If the dimensions differ
    """
    _require_same_dim(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def basis_state(index: int, dim: int) -> StateVector:
    """The computational basis state |index⟩ of a dim-dimensional space."""
    if not 0 <= index < dim:
        raise DimensionMismatchError(f"basis index {index} outside dimension {dim}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(amps)


def state_from_bloch(theta: float, phi: float) -> StateVector:
    """Qubit state cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩."""
    return StateVector([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)])


def bloch_vector(psi: StateVector) -> np.ndarray:
    """
    Bloch vector n̂ of a qubit state, so that |0⟩ maps to (0, 0, 1).

    :raises DimensionMismatchError: If psi is not a qubit
    """
    if psi.dim != 2:
        raise DimensionMismatchError(f"Bloch vector needs a qubit, got dimension {psi.dim}")
    c0, c1 = psi.amplitudes
    cross = np.conj(c0) * c1
    vec = np.array([2.0 * cross.real, 2.0 * cross.imag, abs(c0) ** 2 - abs(c1) ** 2])
    return vec / np.linalg.norm(vec)


def bloch_angles(psi: StateVector) -> Tuple[float, float]:
    """Polar and azimuthal angles (θ, φ) of the Bloch vector."""
    x, y, z = bloch_vector(psi)
    return float(np.arccos(np.clip(z, -1.0, 1.0))), float(np.mod(np.arctan2(y, x), 2.0 * np.pi))
