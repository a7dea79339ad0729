"""
Hermitian generators and exact Schrödinger evolution.

Evolution goes through the eigendecomposition of H, so the propagator
exp(-i·H·dt/ħ) is exact up to floating point and no integrator error leaks
into the frozen-response deficits.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np
import scipy.linalg

from onticlab.sdk.common.exceptions import (
    DimensionCapError,
    DimensionMismatchError,
    DomainError,
    NonHermitianError,
    NormalizationError,
    NumericalError,
)
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.quantum.stateVector import StateVector

logger = get_logger(__name__)

HERMITIAN_TOLERANCE = 1e-12
MAX_EXACT_DIM = 64


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """
    Dense Hermitian matrix, in energy units where it is a Hamiltonian.

    Attributes:
        entries: Read-only dim×dim complex128 array
    """
    entries: np.ndarray

    def __post_init__(self):
        mat = np.array(self.entries, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionMismatchError(f"operator must be square, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise NumericalError("operator entries must be finite")
        deviation = float(np.max(np.abs(mat - mat.conj().T))) if mat.size else 0.0
        if deviation > HERMITIAN_TOLERANCE:
            logger.warning(f"Rejected non-Hermitian operator (max deviation {deviation:.3e})")
            raise NonHermitianError(f"operator is not Hermitian: max |H - H†| = {deviation!r}")
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[complex]]) -> "HermitianOperator":
        """
        :raises NonHermitianError: If any |H_ij - conj(H_ji)| exceeds 1e-12
        """
        return cls(np.asarray(matrix, dtype=np.complex128))

    @classmethod
    def diag(cls, values: Sequence[float]) -> "HermitianOperator":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @classmethod
    def zeros(cls, dim: int) -> "HermitianOperator":
        return cls(np.zeros((dim, dim)))

    def shifted(self, c: float) -> "HermitianOperator":
        """H + c·I."""
        return HermitianOperator(self.entries + c * np.eye(self.dim))

    @cached_property
    def eigensystem(self) -> Tuple[np.ndarray, np.ndarray]:
        """Eigenvalues (ascending) and eigenvector columns."""
        if self.dim > MAX_EXACT_DIM:
            raise DimensionCapError(f"exact eigendecomposition is capped at dimension {MAX_EXACT_DIM}, got {self.dim}")
        try:
            energies, vectors = scipy.linalg.eigh(self.entries)
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgError, ValueError) as e:
            raise NumericalError(f"eigendecomposition failed: {e}") from e
        return energies, vectors


@dataclass(frozen=True)
class EvolutionParams:
    """
    Attributes:
        dt: Time step, in the time units of ħ/energy
        hbar: Reduced Planck constant; natural units by default
    """
    dt: float
    hbar: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.hbar) or self.hbar <= 0:
            raise DomainError(f"hbar must be positive, got {self.hbar!r}")
        if not np.isfinite(self.dt) or self.dt <= 0:
            raise DomainError(f"dt must be positive, got {self.dt!r}")

    def scaled(self, factor: float) -> "EvolutionParams":
        return EvolutionParams(dt=self.dt * factor, hbar=self.hbar)


def _require_same_dim(psi: StateVector, H: HermitianOperator) -> None:
    if psi.dim != H.dim:
        raise DimensionMismatchError(f"state dimension {psi.dim} does not match operator dimension {H.dim}")


def expectation(psi: StateVector, H: HermitianOperator) -> float:
    """⟨ψ|H|ψ⟩ (real for Hermitian H)."""
    _require_same_dim(psi, H)
    return float(np.vdot(psi.amplitudes, H.entries @ psi.amplitudes).real)


def evolve(psi: StateVector, H: HermitianOperator, params: EvolutionParams) -> StateVector:
    """
    exp(-i·H·dt/ħ)|ψ⟩ through the eigenbasis of H.

    :raises NumericalError: If the decomposition fails or unitarity is lost
    """
    _require_same_dim(psi, H)
    energies, vectors = H.eigensystem
    phases = np.exp(-1j * energies * (params.dt / params.hbar))
    evolved = vectors @ (phases * (vectors.conj().T @ psi.amplitudes))
    try:
        return StateVector(evolved)
    except NormalizationError as e:
        raise NumericalError(f"evolution lost unitarity: {e}") from e


def energy_variance(psi: StateVector, H: HermitianOperator) -> float:
    """
    (ΔH)²_ψ = ⟨H²⟩_ψ - ⟨H⟩²_ψ.

    Evaluated as ‖(H - ⟨H⟩)ψ‖², the same quantity without the cancellation
    of the two-moment form; it is invariant under H → H + c·I.
    """
    _require_same_dim(psi, H)
    mean = expectation(psi, H)
    centered = H.entries @ psi.amplitudes - mean * psi.amplitudes
    variance = float(np.vdot(centered, centered).real)
    return max(variance, 0.0)


def evolution_speed(psi: StateVector, H: HermitianOperator, params: EvolutionParams) -> float:
    """Speed v = dD/dt = 2·(ΔH)_ψ/ħ of the state in projective space."""
    return 2.0 * float(np.sqrt(energy_variance(psi, H))) / params.hbar
