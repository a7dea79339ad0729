"""Seeded sampling of states and generators."""
from typing import Optional, Union

import numpy as np

from onticlab.sdk.quantum.dynamics import HermitianOperator
from onticlab.sdk.quantum.stateVector import StateVector, state_from_bloch

SeedLike = Optional[Union[int, np.random.Generator]]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    """A numpy Generator; passing an existing Generator returns it unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_state(dim: int, rng: SeedLike = None) -> StateVector:
    """
    Haar-random pure state.

    Qubits are drawn uniformly on the Bloch sphere (cos θ uniform on [-1, 1]);
    larger dimensions normalize a complex Gaussian vector.
    """
    rng = make_rng(rng)
    if dim == 2:
        cos_theta = 1.0 - 2.0 * rng.random()
        phi = 2.0 * np.pi * rng.random()
        return state_from_bloch(float(np.arccos(cos_theta)), float(phi))
    raw = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector.from_amplitudes(raw, normalize=True)


def random_hermitian(dim: int, rng: SeedLike = None, scale: float = 1.0) -> HermitianOperator:
    """Random Hermitian matrix (A + A†)/2 with Gaussian entries."""
    rng = make_rng(rng)
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return HermitianOperator(scale * (raw + raw.conj().T) / 2.0)
