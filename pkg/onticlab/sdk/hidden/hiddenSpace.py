"""
The enlarged hidden-state space and its partition into cells.

Quantum basis direction k owns the cell {k·m, ..., k·m + m - 1} of an
orthonormal hidden basis, so the cells are disjoint, non-empty and cover all
d·m hidden indices.
"""
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from onticlab.sdk.common.enums import SmearKind
from onticlab.sdk.common.exceptions import DomainError, NormalizationError

PROFILE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class HiddenSpace:
    """
    Attributes:
        qdim: Quantum dimension d
        smear: Hidden sub-levels per quantum direction, m >= 1
    """
    qdim: int
    smear: int = 1

    def __post_init__(self):
        if self.qdim < 2:
            raise DomainError(f"quantum dimension must be at least 2, got {self.qdim}")
        if self.smear < 1:
            raise DomainError(f"smear must be at least 1, got {self.smear}")

    @property
    def hdim(self) -> int:
        return self.qdim * self.smear

    def cell_of(self, k: int) -> range:
        if not 0 <= k < self.qdim:
            raise DomainError(f"quantum index {k} outside dimension {self.qdim}")
        return range(k * self.smear, (k + 1) * self.smear)

    def cells(self) -> List[range]:
        return [self.cell_of(k) for k in range(self.qdim)]

    def cell_index(self, hidden_index: int) -> int:
        """Quantum direction whose cell contains a hidden index."""
        if not 0 <= hidden_index < self.hdim:
            raise DomainError(f"hidden index {hidden_index} outside dimension {self.hdim}")
        return hidden_index // self.smear


def check_partition(space: HiddenSpace) -> bool:
    """
    Verify the partition axioms: no empty cell, pairwise disjoint, covering.

    :raises DomainError: Naming the first axiom that fails
    """
    seen = set()
    for k, cell in enumerate(space.cells()):
        members = set(cell)
        if not members:
            raise DomainError(f"cell {k} is empty")
        if seen & members:
            raise DomainError(f"cell {k} overlaps an earlier cell")
        seen |= members
    if seen != set(range(space.hdim)):
        raise DomainError("cells do not cover the hidden space")
    return True


@dataclass(frozen=True, eq=False)
class SmearProfile:
    """
    Within-cell amplitude profile s_j, Σ_j |s_j|² = 1.

    Attributes:
        weights: Read-only complex128 array of length m
    """
    weights: np.ndarray

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.complex128).reshape(-1)
        if weights.size == 0:
            raise DomainError("smear profile needs at least one sub-level")
        total = math.fsum(np.abs(weights) ** 2)
        if abs(total - 1.0) > PROFILE_TOLERANCE:
            raise NormalizationError(f"profile squared norm {total!r} differs from 1")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return int(self.weights.size)

    @property
    def spread(self) -> float:
        """1 - max_j |s_j|², zero for a single sub-level."""
        return 1.0 - float(np.max(np.abs(self.weights) ** 2))

    @classmethod
    def uniform(cls, m: int) -> "SmearProfile":
        if m < 1:
            raise DomainError(f"smear must be at least 1, got {m}")
        return cls(np.full(m, 1.0 / math.sqrt(m)))

    @classmethod
    def gaussian(cls, m: int, width: float = 1.0) -> "SmearProfile":
        """
        Real Gaussian taper centered on the middle sub-level.

        :param width: Standard deviation of |s_j|², in sub-levels
        """
        if m < 1:
            raise DomainError(f"smear must be at least 1, got {m}")
        if width <= 0:
            raise DomainError(f"profile width must be positive, got {width!r}")
        offsets = np.arange(m) - (m - 1) / 2.0
        raw = np.exp(-offsets ** 2 / (4.0 * width ** 2))
        return cls(raw / np.linalg.norm(raw))

    @classmethod
    def of_kind(cls, kind: SmearKind, m: int, width: float = 1.0) -> "SmearProfile":
        if kind is SmearKind.GAUSSIAN:
            return cls.gaussian(m, width)
        return cls.uniform(m)
