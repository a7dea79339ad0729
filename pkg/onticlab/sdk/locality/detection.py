"""
Joint-detection probabilities for the two-region scenario under each ontic
assignment, and the quantum prediction they are compared against.
"""
from typing import Dict, Optional, Tuple

from onticlab.sdk.common.enums import AssignmentMode
from onticlab.sdk.common.exceptions import AssignmentModeError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.locality.scenario import (
    CELL_A_LABEL,
    CELL_B_LABEL,
    ConditionalProbabilityTable,
    DetectionScenario,
    OntAssignment,
    Probability,
    detection,
    entry_key,
)

logger = get_logger(__name__)


def _require_mode(scenario: DetectionScenario, mode: AssignmentMode) -> None:
    if scenario.assignment_mode is not mode:
        raise AssignmentModeError(
            f"expected a {mode.value} scenario, got {scenario.assignment_mode.value}")


def _require_assignment(assignment: Optional[OntAssignment], mode: AssignmentMode) -> OntAssignment:
    if assignment is None:
        return OntAssignment.for_mode(mode)
    if assignment.mode is not mode:
        raise AssignmentModeError(f"expected a {mode.value} assignment, got {assignment.mode.value}")
    return assignment


def joint_detection_ontic(scenario: DetectionScenario) -> Probability:
    """
    p(1_A∧1_B|Ψ) = p(1_A|Ψ)·p(1_B|1_A,Ψ) with locality p(1_B|1_A,Ψ) = p(1_B|Ψ).

    :raises AssignmentModeError: Unless the scenario is ψ-complete
    """
    _require_mode(scenario, AssignmentMode.PSI_COMPLETE)
    p_a, p_b = scenario.weights()
    return p_a * p_b


def joint_detection_epistemic(scenario: DetectionScenario,
                              assignment: Optional[OntAssignment] = None) -> Probability:
    """
    p(1_A∧1_B|λ_A∧λ_B) = p(1_A|λ_A)·p(1_B|λ_A) = 1·0.

    The cell λ_A fixes the detection at A; disjointness of λ_A and λ_B is
    enforced when the assignment is built.

    :raises AssignmentModeError: Unless scenario and assignment are epistemic
    """
    _require_mode(scenario, AssignmentMode.EPISTEMIC)
    _require_assignment(assignment, AssignmentMode.EPISTEMIC)
    return scenario.one() * scenario.zero()


def _register_weights(scenario: DetectionScenario) -> Dict[Tuple[int, int], Probability]:
    """
    Born weights of |Ψ⟩ over the detector register basis |n_A, n_B⟩.

    Only |1,0⟩ and |0,1⟩ appear; there is no |1,1⟩ component.
    """
    p_a, p_b = scenario.weights()
    return {(1, 0): p_a, (0, 1): p_b}


def quantum_joint_prediction(scenario: DetectionScenario) -> Probability:
    """Squared norm of |Ψ⟩ projected onto simultaneous detection, |1,1⟩."""
    weights = _register_weights(scenario)
    return sum((w for (n_a, n_b), w in weights.items() if n_a and n_b), scenario.zero())


def quantum_single_marginals(scenario: DetectionScenario) -> Tuple[Probability, Probability]:
    weights = _register_weights(scenario)
    zero = scenario.zero()
    return (sum((w for (n_a, _), w in weights.items() if n_a), zero),
            sum((w for (_, n_b), w in weights.items() if n_b), zero))


def single_detection_marginals(scenario: DetectionScenario) -> Tuple[Probability, Probability]:
    """
    (p(1_A), p(1_B)) under the scenario's assignment.

    ψ-complete: the Born weights of Ψ. Epistemic: the deterministic cell
    responses averaged over the probability of each cell being actual.
    """
    p_a, p_b = scenario.weights()
    if scenario.assignment_mode is AssignmentMode.PSI_COMPLETE:
        return p_a, p_b
    one, zero = scenario.one(), scenario.zero()
    return p_a * one + p_b * zero, p_a * zero + p_b * one


def build_table(scenario: DetectionScenario,
                assignment: Optional[OntAssignment] = None) -> ConditionalProbabilityTable:
    """
    The conditional probability table implied by the scenario's mode, with
    the locality assumption imposed.
    """
    mode = scenario.assignment_mode
    assignment = _require_assignment(assignment, mode)
    region_a, region_b = scenario.regions
    event_a, event_b = detection(region_a), detection(region_b)
    both = f"{event_a}&{event_b}"
    label = assignment.state_label

    if mode is AssignmentMode.PSI_COMPLETE:
        p_a, p_b = scenario.weights()
        entries = {
            entry_key(event_a, label): p_a,
            entry_key(event_b, label): p_b,
            entry_key(event_b, label, given=event_a): p_b,
            entry_key(both, label): joint_detection_ontic(scenario),
        }
    else:
        one, zero = scenario.one(), scenario.zero()
        entries = {
            entry_key(event_a, CELL_A_LABEL): one,
            entry_key(event_b, CELL_A_LABEL): zero,
            entry_key(event_a, CELL_B_LABEL): zero,
            entry_key(event_b, CELL_B_LABEL): one,
            entry_key(event_a, label): one,
            entry_key(event_b, label, given=event_a): zero,
            entry_key(both, label): joint_detection_epistemic(scenario, assignment),
        }

    logger.debug(f"Built {mode.value} table with {len(entries)} entries")
    return ConditionalProbabilityTable(entries, scenario.regions)
