from abc import ABC, abstractmethod

from onticlab.sdk.models.ontic.onticGrid import OnticGrid
from onticlab.sdk.models.ontic.tables import EpistemicDistribution, ResponseFunction, born_integral
from onticlab.sdk.quantum.stateVector import StateVector


class OntologicalModel(ABC):
    """
    Base class for ontological models of quantum states on a discretized Λ.

    A model assigns every state ψ a distribution μ(ψ|λ) and every outcome φ a
    response ξ(φ|λ) such that the quadrature of ξ·μ reproduces |⟨φ|ψ⟩|²
    within ``tolerance``. Subclasses implement ``mu_of`` and ``xi_of``.
    """

    name: str = "base"

    def __init__(self, grid: OnticGrid, tolerance: float):
        self.grid = grid
        self.tolerance = tolerance

    @abstractmethod
    def mu_of(self, psi: StateVector) -> EpistemicDistribution:
        """Epistemic distribution assigned to the preparation of psi."""
        raise NotImplementedError

    @abstractmethod
    def xi_of(self, phi: StateVector) -> ResponseFunction:
        """Response function of the outcome phi."""
        raise NotImplementedError

    def supports_dim(self, dim: int) -> bool:
        return True

    def born(self, phi: StateVector, psi: StateVector, workers: int = 1) -> float:
        """The model's prediction for the probability of phi given psi."""
        return born_integral(self.xi_of(phi), self.mu_of(psi), workers=workers)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(grid={self.grid.count} points, tolerance={self.tolerance})"
