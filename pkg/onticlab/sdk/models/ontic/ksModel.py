"""
Kochen-Specker qubit model on the Bloch sphere.

μ_ψ(λ) = (1/π)·max(n̂_ψ·λ̂, 0) and ξ_φ(λ) = [n̂_φ·λ̂ > 0]. The lune
integral of the pair is (1 + n̂_φ·n̂_ψ)/2 = |⟨φ|ψ⟩|².
"""
import math

import numpy as np

from onticlab.sdk.common.exceptions import DimensionMismatchError, DomainError, NormalizationError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.common.utils.summation import deterministic_sum
from onticlab.sdk.models.ontic.baseModel import OntologicalModel
from onticlab.sdk.models.ontic.onticGrid import OnticGrid
from onticlab.sdk.models.ontic.tables import EpistemicDistribution, ResponseFunction
from onticlab.sdk.quantum.stateVector import StateVector, bloch_vector

logger = get_logger(__name__)

KS_TOLERANCE = 1e-4


def _require_qubit(state: StateVector, grid: OnticGrid) -> None:
    if state.dim != 2:
        raise DimensionMismatchError(f"the Kochen-Specker instance is qubit-only, got dimension {state.dim}")
    if not grid.covers_sphere:
        raise DomainError("the Kochen-Specker instance needs a grid covering the unit sphere")


def _projection(grid: OnticGrid, state: StateVector) -> np.ndarray:
    # shared by μ and ξ so both see bit-identical n̂·λ̂ values
    return grid.directions @ bloch_vector(state)


def ks_distribution(psi: StateVector, grid: OnticGrid, renormalize: bool = True) -> EpistemicDistribution:
    """
    Clipped-cosine density around the Bloch vector of psi.

    :param renormalize: Divide by the discrete integral so Σ w·μ = 1 to
        rounding; otherwise the continuum constant 1/π is kept as is
    """
    _require_qubit(psi, grid)
    projection = _projection(grid, psi)
    density = np.where(projection > 0.0, projection / math.pi, 0.0)
    if renormalize:
        total = deterministic_sum(grid.weights * density)
        if total <= 0.0:
            raise NormalizationError("density has no support on this grid")
        density = density / total
    # the raw continuum density is only normalized up to quadrature error
    return EpistemicDistribution(density, grid, enforce_normalization=renormalize)


def ks_response(phi: StateVector, grid: OnticGrid) -> ResponseFunction:
    """
    Hemisphere indicator of phi; points with n̂_φ·λ̂ = 0 exactly respond 0.
    """
    _require_qubit(phi, grid)
    projection = _projection(grid, phi)
    return ResponseFunction((projection > 0.0).astype(np.float64), grid)


class KochenSpeckerModel(OntologicalModel):
    """ψ-epistemic qubit model whose distributions overlap for non-orthogonal states."""

    name = "ks"

    def __init__(self, grid: OnticGrid, tolerance: float = KS_TOLERANCE, renormalize: bool = True):
        super().__init__(grid, tolerance)
        if not grid.covers_sphere:
            raise DomainError("the Kochen-Specker model needs a spherical grid")
        self.renormalize = renormalize

    def supports_dim(self, dim: int) -> bool:
        return dim == 2

    def mu_of(self, psi: StateVector) -> EpistemicDistribution:
        return ks_distribution(psi, self.grid, renormalize=self.renormalize)

    def xi_of(self, phi: StateVector) -> ResponseFunction:
        return ks_response(phi, self.grid)
