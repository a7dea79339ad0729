"""
Single-particle detection at two regions A and B, the ontic labels assigned
to the entangled particle-detector state, and conditional probability tables
over those labels.

Branch weights given as ``Fraction`` keep every derived probability exact.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from onticlab.sdk.common.enums import AssignmentMode
from onticlab.sdk.common.exceptions import DisjointnessError, DomainError, NormalizationError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.hidden.hiddenSpace import HiddenSpace

logger = get_logger(__name__)

Probability = Union[Fraction, float]

BRANCH_TOLERANCE = 1e-12
TABLE_TOLERANCE = 1e-12

PSI_LABEL = "Psi"
CELL_A_LABEL = "lambda_A"
CELL_B_LABEL = "lambda_B"
JOINT_CELL_LABEL = "lambda_A&lambda_B"

BALANCED_WEIGHTS = (Fraction(1, 2), Fraction(1, 2))


def _exact(weight: Union[Fraction, float, int, str]) -> Fraction:
    return Fraction(str(weight)) if isinstance(weight, float) else Fraction(weight)


def detection(region: str) -> str:
    """Event label for a detection in ``region``, e.g. ``1_A``."""
    return f"1_{region}"


def entry_key(event: str, label: str, given: Optional[str] = None) -> str:
    """
    Table key for p(event | given, label), e.g. ``p(1_B|1_A,Psi)``.
    """
    condition = f"{given},{label}" if given else label
    return f"p({event}|{condition})"


@dataclass(frozen=True)
class DetectionScenario:
    """
    |Ψ⟩ = a|ψ⟩_A|χ⟩_A + b|ψ⟩_B|χ⟩_B with orthogonal detector states.

    Left unset, the branches are balanced and weighted exactly 1/2 each.

    Attributes:
        regions: Labels of the two detection regions
        branch_amplitudes: (a, b), Σ|·|² = 1; derived from the weights when unset
        assignment_mode: How the state is assigned ontic labels
        branch_weights: Exact (|a|², |b|²) when built from rational weights
    """
    regions: Tuple[str, str] = ("A", "B")
    branch_amplitudes: Optional[Tuple[complex, complex]] = None
    assignment_mode: AssignmentMode = AssignmentMode.PSI_COMPLETE
    branch_weights: Optional[Tuple[Fraction, Fraction]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.regions) != 2 or self.regions[0] == self.regions[1]:
            raise DomainError(f"need two distinct region labels, got {self.regions}")
        if self.branch_amplitudes is None and self.branch_weights is None:
            object.__setattr__(self, "branch_weights", BALANCED_WEIGHTS)
        if self.branch_weights is not None:
            if any(w < 0 or w > 1 for w in self.branch_weights) or sum(self.branch_weights) != 1:
                raise NormalizationError(f"branch weights {self.branch_weights} must lie in [0, 1] and sum to 1")
            if self.branch_amplitudes is None:
                amplitudes = tuple(complex(math.sqrt(float(w))) for w in self.branch_weights)
                object.__setattr__(self, "branch_amplitudes", amplitudes)
            return
        total = math.fsum(abs(a) ** 2 for a in self.branch_amplitudes)
        if abs(total - 1.0) > BRANCH_TOLERANCE:
            raise NormalizationError(f"Σ|branch amplitude|² = {total!r} differs from 1")

    @property
    def is_exact(self) -> bool:
        return self.branch_weights is not None

    def weights(self) -> Tuple[Probability, Probability]:
        """Born weights (p(1_A|Ψ), p(1_B|Ψ)) of the two branches."""
        if self.branch_weights is not None:
            return self.branch_weights
        a, b = self.branch_amplitudes
        return abs(a) ** 2, abs(b) ** 2

    def zero(self) -> Probability:
        return Fraction(0) if self.is_exact else 0.0

    def one(self) -> Probability:
        return Fraction(1) if self.is_exact else 1.0

    def with_mode(self, mode: AssignmentMode) -> "DetectionScenario":
        return DetectionScenario(self.regions, self.branch_amplitudes, mode, self.branch_weights)

    @classmethod
    def balanced(cls, mode: AssignmentMode = AssignmentMode.PSI_COMPLETE) -> "DetectionScenario":
        return cls.from_weights(Fraction(1, 2), Fraction(1, 2), mode)

    @classmethod
    def from_weights(cls, weight_a, weight_b, mode: AssignmentMode = AssignmentMode.PSI_COMPLETE,
                     regions: Tuple[str, str] = ("A", "B")) -> "DetectionScenario":
        """
        Build a scenario on the exact rational path.

        Floats are read through their shortest decimal form, so 0.8 is 4/5.

        :param weight_a: |a|², anything ``Fraction`` accepts
        :param weight_b: |b|²
        """
        weights = (_exact(weight_a), _exact(weight_b))
        return cls(regions, None, mode, weights)

    @classmethod
    def from_amplitudes(cls, amp_a: complex, amp_b: complex,
                        mode: AssignmentMode = AssignmentMode.PSI_COMPLETE) -> "DetectionScenario":
        return cls(branch_amplitudes=(complex(amp_a), complex(amp_b)), assignment_mode=mode)


@dataclass(frozen=True)
class OntAssignment:
    """
    Ontic labels of the detection state.

    ψ-complete: the single label Ψ. Epistemic: two disjoint cells λ_A, λ_B of
    the hidden space, the particle's ontic state lying in exactly one of them.

    Attributes:
        mode: Assignment mode
        cells: (λ_A, λ_B) as sets of hidden indices, epistemic mode only
    """
    mode: AssignmentMode
    cells: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self):
        if self.mode is AssignmentMode.PSI_COMPLETE:
            if self.cells:
                raise DomainError("a ψ-complete assignment carries no cells")
            return
        if len(self.cells) != 2:
            raise DomainError(f"an epistemic assignment needs two cells, got {len(self.cells)}")
        cell_a, cell_b = self.cells
        if not cell_a or not cell_b:
            raise DomainError("epistemic cells must be non-empty")
        shared = cell_a & cell_b
        if shared:
            logger.warning(f"Rejected epistemic assignment with overlapping cells {sorted(shared)}")
            raise DisjointnessError(f"cells λ_A and λ_B share hidden states {sorted(shared)}")

    @classmethod
    def psi_complete(cls) -> "OntAssignment":
        return cls(AssignmentMode.PSI_COMPLETE)

    @classmethod
    def epistemic(cls, cell_a: Iterable[int] = (0,), cell_b: Iterable[int] = (1,)) -> "OntAssignment":
        return cls(AssignmentMode.EPISTEMIC, (frozenset(cell_a), frozenset(cell_b)))

    @classmethod
    def from_space(cls, space: HiddenSpace, index_a: int = 0, index_b: int = 1) -> "OntAssignment":
        """Epistemic assignment using two partition cells of a hidden space."""
        return cls.epistemic(space.cell_of(index_a), space.cell_of(index_b))

    @classmethod
    def for_mode(cls, mode: AssignmentMode) -> "OntAssignment":
        return cls.psi_complete() if mode is AssignmentMode.PSI_COMPLETE else cls.epistemic()

    @property
    def state_label(self) -> str:
        """Label of the ontic state of the whole detection state."""
        return PSI_LABEL if self.mode is AssignmentMode.PSI_COMPLETE else JOINT_CELL_LABEL


class ConditionalProbabilityTable:
    """
    Map of ``p(event|condition)`` keys to probabilities in [0, 1].

    Detections at the two regions are exclusive, so for every label the pair
    p(1_A|label), p(1_B|label) may sum to at most 1.
    """

    def __init__(self, entries: Mapping[str, Probability], regions: Tuple[str, str] = ("A", "B")):
        self.regions = regions
        self._entries: Dict[str, Probability] = dict(entries)
        self._validate()

    def _validate(self) -> None:
        for key, value in self._entries.items():
            if not 0 <= value <= 1:
                raise DomainError(f"table entry {key} = {value} outside [0, 1]")

        labels = {key[key.index("|") + 1:-1] for key in self._entries if "|" in key and "," not in key}
        event_a, event_b = (detection(region) for region in self.regions)
        for label in labels:
            pa = self._entries.get(entry_key(event_a, label))
            pb = self._entries.get(entry_key(event_b, label))
            if pa is not None and pb is not None and pa + pb > 1 + TABLE_TOLERANCE:
                raise DomainError(f"exclusive detections under {label} sum to {pa + pb} > 1")

    def __contains__(self, key: str) -> bool:
        return key in self._entries

    def __getitem__(self, key: str) -> Probability:
        return self._entries[key]

    def __len__(self) -> int:
        return len(self._entries)

    def keys(self) -> List[str]:
        return sorted(self._entries)

    def missing(self, required: Iterable[str]) -> List[str]:
        return sorted(key for key in set(required) if key not in self._entries)

    def with_entry(self, key: str, value: Probability) -> "ConditionalProbabilityTable":
        entries = dict(self._entries)
        entries[key] = value
        return ConditionalProbabilityTable(entries, self.regions)

    def to_dict(self) -> Dict[str, Probability]:
        return {key: self._entries[key] for key in self.keys()}
