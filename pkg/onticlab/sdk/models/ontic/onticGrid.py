import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from onticlab.sdk.common.exceptions import DomainError, GridMismatchError
from onticlab.sdk.common.utils.log import get_logger

logger = get_logger(__name__)

SPHERE_MEASURE = 4.0 * math.pi
MEASURE_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class OnticGrid:
    """
    Quadrature rule discretizing an ontic space Λ.

    Attributes:
        points: (count, 2) array of (θ, φ) labels in radians
        weights: Positive measure dλ carried by each point
        total_measure: Measure of Λ the weights must add up to
    """
    points: np.ndarray
    weights: np.ndarray
    total_measure: float = SPHERE_MEASURE

    def __post_init__(self):
        points = np.array(self.points, dtype=np.float64)
        weights = np.array(self.weights, dtype=np.float64).reshape(-1)
        if points.ndim != 2 or points.shape[1] != 2:
            raise DomainError(f"grid points must have shape (count, 2), got {points.shape}")
        if points.shape[0] != weights.size or weights.size == 0:
            raise DomainError(f"{points.shape[0]} points but {weights.size} weights")
        if not np.all(weights > 0):
            raise DomainError("grid weights must all be positive")
        measure = math.fsum(weights)
        if abs(measure - self.total_measure) > MEASURE_TOLERANCE:
            raise DomainError(f"weights sum to {measure!r}, expected {self.total_measure!r}")
        points.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @property
    def count(self) -> int:
        return int(self.weights.size)

    @property
    def covers_sphere(self) -> bool:
        return abs(self.total_measure - SPHERE_MEASURE) <= MEASURE_TOLERANCE

    @cached_property
    def directions(self) -> np.ndarray:
        """Unit vectors λ̂ for the (θ, φ) labels, shape (count, 3)."""
        theta, phi = self.points[:, 0], self.points[:, 1]
        sin_theta = np.sin(theta)
        unit = np.column_stack((sin_theta * np.cos(phi), sin_theta * np.sin(phi), np.cos(theta)))
        unit.setflags(write=False)
        return unit

    def same_as(self, other: "OnticGrid") -> bool:
        if self is other:
            return True
        return (self.count == other.count
                and np.array_equal(self.weights, other.weights)
                and np.array_equal(self.points, other.points))


def require_same_grid(a: OnticGrid, b: OnticGrid) -> None:
    if not a.same_as(b):
        raise GridMismatchError(f"tables live on different grids ({a.count} vs {b.count} points)")


def sphere_grid(n_theta: int = 200, n_phi: int = 400, oversample: int = 4) -> OnticGrid:
    """
    Midpoint product grid on the unit sphere.

    Each nominal (θ, φ) cell is split into oversample² sub-cells. A sub-cell
    carries its exact band area 2·sinθ·sin(Δθ/2)·Δφ, which telescopes so the
    weights add up to 4π to rounding.

    :param n_theta: Nominal polar resolution
    :param n_phi: Nominal azimuthal resolution
    :param oversample: Sub-cells per nominal cell side
    """
    if n_theta < 1 or n_phi < 1 or oversample < 1:
        raise DomainError("grid resolutions and oversample must be positive")

    rows, cols = n_theta * oversample, n_phi * oversample
    d_theta = math.pi / rows
    d_phi = 2.0 * math.pi / cols
    theta = (np.arange(rows) + 0.5) * d_theta
    phi = (np.arange(cols) + 0.5) * d_phi

    band = 2.0 * np.sin(theta) * math.sin(d_theta / 2.0) * d_phi
    theta_grid, phi_grid = np.meshgrid(theta, phi, indexing="ij")
    weights = np.repeat(band, cols)

    logger.debug(f"Built sphere grid {rows}x{cols} ({rows * cols} points)")
    return OnticGrid(points=np.column_stack((theta_grid.ravel(), phi_grid.ravel())), weights=weights)
