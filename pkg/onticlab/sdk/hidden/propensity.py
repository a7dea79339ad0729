"""
Propensity amplitudes A(λ|P_ψ) over hidden states and the operations on them.

A quantum state is the amplitude-weighted average of hidden states,
|ψ⟩ = Σ_λ A(λ|P_ψ)|λ⟩, with Σ_λ |A|² = 1. Because the hidden basis is
orthonormal, overlaps of amplitudes restricted to shared cells reproduce
the quantum transition amplitudes exactly.
"""
import json
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable

import numpy as np

from onticlab.sdk.common.exceptions import (
    DimensionMismatchError,
    DomainError,
    ImpossibleObservationError,
    NormalizationError,
    ProfileMismatchError,
    SpaceMismatchError,
)
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.hidden.hiddenSpace import HiddenSpace, SmearProfile
from onticlab.sdk.quantum.geometry import orthogonal_weight
from onticlab.sdk.quantum.stateVector import StateVector

logger = get_logger(__name__)

AMPLITUDE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class PropensityAmplitude:
    """
    Attributes:
        values: Complex amplitude per hidden index (length space.hdim), Σ|A|² = 1 to 1e-12
        space: Hidden space the amplitudes live on
    """
    values: np.ndarray
    space: HiddenSpace

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128).reshape(-1)
        if values.size != self.space.hdim:
            raise DimensionMismatchError(f"{values.size} amplitudes for a hidden space of dimension {self.space.hdim}")
        if not np.all(np.isfinite(values)):
            raise DomainError("amplitudes must be finite")
        norm_squared = math.fsum(np.abs(values) ** 2)
        if abs(norm_squared - 1.0) > AMPLITUDE_TOLERANCE:
            logger.warning(f"Rejected unnormalized amplitude (Σ|A|² = {norm_squared!r})")
            raise NormalizationError(f"Σ|A|² = {norm_squared!r} differs from 1")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def probabilities(self) -> np.ndarray:
        """P(λ|P_ψ) = |A(λ|P_ψ)|²."""
        return np.abs(self.values) ** 2

    def norm_squared(self) -> float:
        return math.fsum(self.probabilities())

    def is_normalized(self, tolerance: float = AMPLITUDE_TOLERANCE) -> bool:
        return abs(self.norm_squared() - 1.0) <= tolerance

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.values != 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "qdim": self.space.qdim,
            "smear": self.space.smear,
            "values": [[float(v.real), float(v.imag)] for v in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PropensityAmplitude":
        space = HiddenSpace(qdim=int(data["qdim"]), smear=int(data["smear"]))
        values = np.array([complex(re, im) for re, im in data["values"]], dtype=np.complex128)
        return cls(values, space)

    @classmethod
    def from_json(cls, text: str) -> "PropensityAmplitude":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Preparation:
    """
    Attributes:
        label: Identifier of the preparation procedure P_ψ
        target: Quantum state the procedure prepares
        profile: Spread of the amplitude over each cell
    """
    label: str
    target: StateVector
    profile: SmearProfile


@dataclass(frozen=True)
class SharpenResult:
    """
    Attributes:
        m: Hidden sub-levels per quantum direction
        trace_distance_to_complete: Within-cell spread 1 - max_j |s_j|²
        embedding_infidelity: 1 - |⟨embed(ψ)|reconstruct(prepare(P_ψ))⟩|²
    """
    m: int
    trace_distance_to_complete: float
    embedding_infidelity: float


def _require_same_space(a: PropensityAmplitude, b: PropensityAmplitude) -> None:
    if a.space != b.space:
        raise SpaceMismatchError(f"amplitudes live on different hidden spaces: {a.space} vs {b.space}")


def _require_compatible(target: StateVector, profile: SmearProfile, space: HiddenSpace) -> None:
    if target.dim != space.qdim:
        raise DimensionMismatchError(f"target dimension {target.dim} does not match qdim {space.qdim}")
    if profile.m != space.smear:
        raise ProfileMismatchError(f"profile has {profile.m} sub-levels, space expects {space.smear}")


def prepare(prep: Preparation, space: HiddenSpace) -> PropensityAmplitude:
    """
    A(λ_{k,j}|P_ψ) = c_k·s_j for target amplitudes c_k and profile s_j.
    """
    _require_compatible(prep.target, prep.profile, space)
    return PropensityAmplitude(np.kron(prep.target.amplitudes, prep.profile.weights), space)


def reconstruct(A: PropensityAmplitude) -> StateVector:
    """|ψ⟩ = Σ_λ A(λ|P_ψ)|λ⟩ in the enlarged space."""
    return StateVector(A.values)


def embed(psi: StateVector, space: HiddenSpace) -> StateVector:
    """ψ-complete embedding: amplitude c_k on the first sub-level of cell k."""
    if psi.dim != space.qdim:
        raise DimensionMismatchError(f"state dimension {psi.dim} does not match qdim {space.qdim}")
    values = np.zeros(space.hdim, dtype=np.complex128)
    values[::space.smear] = psi.amplitudes
    return StateVector(values)


def project(A: PropensityAmplitude, profile: SmearProfile) -> StateVector:
    """
    V†A for the isometry V|k⟩ = Σ_j s_j|k, j⟩, back in the quantum space.

    :raises NormalizationError: If A is not in the range of V
    """
    if profile.m != A.space.smear:
        raise ProfileMismatchError(f"profile has {profile.m} sub-levels, space expects {A.space.smear}")
    blocks = A.values.reshape(A.space.qdim, A.space.smear)
    return StateVector(blocks @ np.conj(profile.weights))


def transition_amplitude(A_phi: PropensityAmplitude, A_psi: PropensityAmplitude) -> complex:
    """Σ_{λ ∈ λ_ψ ∩ λ_φ} conj(A_φ(λ))·A_ψ(λ)."""
    _require_same_space(A_phi, A_psi)
    shared = (A_phi.values != 0) & (A_psi.values != 0)
    return complex(np.vdot(A_phi.values[shared], A_psi.values[shared]))


def transition_probability(A_phi: PropensityAmplitude, A_psi: PropensityAmplitude) -> float:
    """Squared modulus of the shared-support amplitude overlap."""
    return min(abs(transition_amplitude(A_phi, A_psi)) ** 2, 1.0)


def cell_weight(A: PropensityAmplitude, k: int) -> float:
    """Probability Σ_{λ ∈ cell k} |A(λ)|² of revealing cell k."""
    cell = A.space.cell_of(k)
    return math.fsum(np.abs(A.values[cell.start:cell.stop]) ** 2)


def bayesian_update(A: PropensityAmplitude, revealed_cell: Iterable[int]) -> PropensityAmplitude:
    """
    Condition the amplitude on the ontic state lying in ``revealed_cell``.

    Amplitudes outside the cell are zeroed and the rest renormalized. When the
    support already lies inside the cell, A is returned unchanged, which makes
    the update idempotent.

    :raises ImpossibleObservationError: If the cell carries zero weight
    """
    indices = np.unique(np.fromiter(revealed_cell, dtype=np.int64))
    if indices.size and (indices[0] < 0 or indices[-1] >= A.space.hdim):
        raise DomainError(f"revealed indices outside hidden dimension {A.space.hdim}")

    mask = np.zeros(A.space.hdim, dtype=bool)
    mask[indices] = True
    if not np.any((A.values != 0) & ~mask):
        return A

    weight = math.fsum(np.abs(A.values[mask]) ** 2)
    if weight <= 0.0:
        logger.warning("Rejected Bayesian update on a cell with zero posterior weight")
        raise ImpossibleObservationError("revealed cell has zero weight under this amplitude")

    logger.debug(f"Bayesian update onto {indices.size} hidden states, cell weight {weight!r}")
    return PropensityAmplitude(np.where(mask, A.values, 0.0) / math.sqrt(weight), A.space)


def sharpen(space: HiddenSpace, prep: Preparation) -> SharpenResult:
    """
    Distance of the hidden-state description from the ψ-complete one.

    The spread vanishes for m = 1, where reconstruction and embedding coincide.
    """
    _require_compatible(prep.target, prep.profile, space)
    infidelity = orthogonal_weight(embed(prep.target, space), reconstruct(prepare(prep, space)))
    return SharpenResult(
        m=space.smear,
        trace_distance_to_complete=prep.profile.spread,
        embedding_infidelity=infidelity,
    )
