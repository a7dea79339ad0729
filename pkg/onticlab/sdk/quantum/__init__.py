"""
Finite-dimensional Hilbert-space core: states, Hermitian generators, exact
unitary evolution, energy variance and Fubini-Study geometry.
"""
from onticlab.sdk.quantum.stateVector import (
    StateVector,
    basis_state,
    bloch_angles,
    bloch_vector,
    inner_product,
    state_from_bloch,
)
from onticlab.sdk.quantum.dynamics import (
    EvolutionParams,
    HermitianOperator,
    energy_variance,
    evolution_speed,
    evolve,
    expectation,
)
from onticlab.sdk.quantum.geometry import (
    fidelity_error,
    fubini_study_dist2,
    orthogonal_weight,
    overlap_probability,
)
from onticlab.sdk.quantum.sampling import make_rng, random_hermitian, random_state

__all__ = [
    'StateVector',
    'HermitianOperator',
    'EvolutionParams',
    'inner_product',
    'basis_state',
    'state_from_bloch',
    'bloch_vector',
    'bloch_angles',
    'evolve',
    'expectation',
    'energy_variance',
    'evolution_speed',
    'fubini_study_dist2',
    'orthogonal_weight',
    'overlap_probability',
    'fidelity_error',
    'make_rng',
    'random_state',
    'random_hermitian',
]
