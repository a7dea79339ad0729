"""
Epistemic distributions μ(ψ|λ) and response functions ξ(φ|λ) tabulated on
an OnticGrid, and the quadrature forms of the Born-rule conditions.
"""
from dataclasses import dataclass

import numpy as np

from onticlab.sdk.common.exceptions import DomainError, NormalizationError
from onticlab.sdk.common.utils.summation import chunked_reduce
from onticlab.sdk.models.ontic.onticGrid import OnticGrid, require_same_grid

NORMALIZATION_TOLERANCE = 1e-6


def _as_table(values, grid: OnticGrid) -> np.ndarray:
    table = np.array(values, dtype=np.float64).reshape(-1)
    if table.size != grid.count:
        raise DomainError(f"{table.size} values for a grid of {grid.count} points")
    if not np.all(np.isfinite(table)):
        raise DomainError("tabulated values must be finite")
    return table


@dataclass(frozen=True, eq=False)
class EpistemicDistribution:
    """
    Nonnegative density μ(ψ|λ) per unit measure.

    Attributes:
        values: Density at each grid point
        grid: Grid the values are aligned with
        enforce_normalization: Reject densities violating Σ w·μ = 1
    """
    values: np.ndarray
    grid: OnticGrid
    enforce_normalization: bool = True

    def __post_init__(self):
        table = _as_table(self.values, self.grid)
        if np.any(table < 0):
            raise DomainError("epistemic density must be nonnegative")
        table.setflags(write=False)
        object.__setattr__(self, "values", table)
        if self.enforce_normalization:
            total = check_normalization(self)
            if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
                raise NormalizationError(f"density integrates to {total!r}, expected 1")

    @classmethod
    def uniform(cls, grid: OnticGrid) -> "EpistemicDistribution":
        return cls(np.full(grid.count, 1.0 / grid.total_measure), grid)


@dataclass(frozen=True, eq=False)
class ResponseFunction:
    """
    Response ξ(φ|λ) with values in [0, 1].

    Attributes:
        values: Response at each grid point
        grid: Grid the values are aligned with
    """
    values: np.ndarray
    grid: OnticGrid

    def __post_init__(self):
        table = _as_table(self.values, self.grid)
        if np.any(table < 0) or np.any(table > 1):
            raise DomainError("response values must lie in [0, 1]")
        table.setflags(write=False)
        object.__setattr__(self, "values", table)

    @classmethod
    def constant(cls, grid: OnticGrid, value: float = 1.0) -> "ResponseFunction":
        return cls(np.full(grid.count, value), grid)


def born_integral(xi: ResponseFunction, mu: EpistemicDistribution, workers: int = 1) -> float:
    """
    ∫ dλ ξ(φ|λ) μ(ψ|λ) as Σ_i w_i·ξ_i·μ_i.

    :param workers: Threads for the chunk sums; the result does not depend on it
    :raises GridMismatchError: If the tables live on different grids
    """
    require_same_grid(xi.grid, mu.grid)
    weights, x, m = mu.grid.weights, xi.values, mu.values
    return chunked_reduce(lambda lo, hi: float(np.sum(weights[lo:hi] * x[lo:hi] * m[lo:hi])),
                          mu.grid.count, workers=workers)


def check_normalization(mu: EpistemicDistribution, workers: int = 1) -> float:
    """Σ_i w_i·μ_i; the caller compares it against 1."""
    weights, m = mu.grid.weights, mu.values
    return chunked_reduce(lambda lo, hi: float(np.sum(weights[lo:hi] * m[lo:hi])),
                          mu.grid.count, workers=workers)


def support(mu: EpistemicDistribution, threshold: float = 0.0) -> np.ndarray:
    """
    Λ_ψ = {λ | μ(ψ|λ) > threshold}, as sorted grid indices.
    """
    if threshold < 0:
        raise DomainError(f"support threshold must be nonnegative, got {threshold!r}")
    return np.flatnonzero(mu.values > threshold)


def overlap_region(mu1: EpistemicDistribution, mu2: EpistemicDistribution) -> np.ndarray:
    """Δ: grid indices where both densities are strictly positive."""
    require_same_grid(mu1.grid, mu2.grid)
    return np.flatnonzero((mu1.values > 0) & (mu2.values > 0))


def measure_of(grid: OnticGrid, indices: np.ndarray) -> float:
    """Total weight of a set of grid indices."""
    return chunked_reduce(lambda lo, hi: float(np.sum(grid.weights[indices[lo:hi]])), len(indices))
