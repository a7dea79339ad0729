"""
Numerical form of the frozen-response argument against ψ-epistemic models.

If the response function of ψ(t) is held fixed while the state moves to
ψ(t+dt), the Born integral stays at 1, but the quantum overlap drops to
1 - dt²(ΔH)²/ħ². Both readings are reported; the caller interprets them.
"""
from dataclasses import asdict, dataclass
from typing import Any, Dict

import numpy as np

from onticlab.sdk.common.exceptions import DimensionMismatchError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.models.ontic.baseModel import OntologicalModel
from onticlab.sdk.models.ontic.tables import born_integral, measure_of
from onticlab.sdk.quantum.dynamics import EvolutionParams, HermitianOperator, energy_variance, evolve
from onticlab.sdk.quantum.geometry import orthogonal_weight
from onticlab.sdk.quantum.stateVector import StateVector

logger = get_logger(__name__)


@dataclass(frozen=True)
class FrozenResponseResult:
    """
    Attributes:
        frozen_integral: ∫ ξ(ψ(t)|λ) μ(ψ(t)|λ) dλ, the response held at time t
        updated_integral: ∫ ξ(ψ(t+dt)|λ) μ(ψ(t)|λ) dλ, a response that tracks the state
        born_value: |⟨ψ(t+dt)|ψ(t)⟩|², exact
        deficit: frozen_integral - born_value
        dt: Time step used
        delta_H_sq: (ΔH)²_ψ
        hbar: ħ used for the evolution
    """
    frozen_integral: float
    updated_integral: float
    born_value: float
    deficit: float
    dt: float
    delta_H_sq: float
    hbar: float = 1.0

    @property
    def leading_order(self) -> float:
        """dt²·(ΔH)²/ħ², the deficit to leading order in dt."""
        return self.dt ** 2 * self.delta_H_sq / self.hbar ** 2

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _require_model_dim(psi: StateVector, model: OntologicalModel) -> None:
    if not model.supports_dim(psi.dim):
        raise DimensionMismatchError(f"model '{model.name}' does not cover dimension {psi.dim}")


def frozen_response_test(psi: StateVector, H: HermitianOperator, params: EvolutionParams,
                         model: OntologicalModel, workers: int = 1) -> FrozenResponseResult:
    """
    Compare the frozen and the updated response against the exact overlap.

    :param psi: State at time t
    :param H: Hamiltonian generating the evolution
    :param params: ħ and dt
    :param model: Ontological model built for psi's dimension
    :param workers: Threads for the quadrature
    """
    _require_model_dim(psi, model)
    psi_next = evolve(psi, H, params)
    mu_now = model.mu_of(psi)

    frozen = born_integral(model.xi_of(psi), mu_now, workers=workers)
    updated = born_integral(model.xi_of(psi_next), mu_now, workers=workers)
    born_value = 1.0 - orthogonal_weight(psi_next, psi)
    variance = energy_variance(psi, H)

    logger.debug(f"frozen={frozen!r} updated={updated!r} born={born_value!r} dt={params.dt!r}")
    return FrozenResponseResult(
        frozen_integral=frozen,
        updated_integral=updated,
        born_value=born_value,
        deficit=frozen - born_value,
        dt=params.dt,
        delta_H_sq=variance,
        hbar=params.hbar,
    )


@dataclass(frozen=True)
class ResponseDifferential:
    """
    Attributes:
        changed_measure: Measure of the set where ξ(ψ(t+dt)) differs from ξ(ψ(t))
        changed_points: Number of grid points in that set
        max_change: Largest pointwise |dξ|
    """
    changed_measure: float
    changed_points: int
    max_change: float


def response_differential(psi: StateVector, H: HermitianOperator, params: EvolutionParams,
                          model: OntologicalModel) -> ResponseDifferential:
    """
    Tabulate dξ = ξ(ψ(t+dt)|λ) - ξ(ψ(t)|λ) over the grid.

    The frozen-response argument takes every differential of ξ to vanish;
    for a step-function model the response instead jumps on a set whose
    measure grows linearly in dt.
    """
    _require_model_dim(psi, model)
    now = model.xi_of(psi).values
    later = model.xi_of(evolve(psi, H, params)).values
    change = np.abs(later - now)
    changed = np.flatnonzero(change > 0.0)
    return ResponseDifferential(
        changed_measure=measure_of(model.grid, changed),
        changed_points=int(changed.size),
        max_change=float(change.max()) if change.size else 0.0,
    )
