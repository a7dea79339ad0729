"""
Locality audit of a conditional probability table.

Each assignment mode demands a set of conditional-independence equations;
every one is evaluated with its residual, and the table's joint-detection
probability is compared with the quantum prediction.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from onticlab.sdk.common.enums import AssignmentMode
from onticlab.sdk.common.exceptions import MissingEntriesError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.common.utils.stringUtil import json_number
from onticlab.sdk.locality.detection import quantum_joint_prediction
from onticlab.sdk.locality.scenario import (
    CELL_A_LABEL,
    ConditionalProbabilityTable,
    DetectionScenario,
    OntAssignment,
    Probability,
    detection,
    entry_key,
)

logger = get_logger(__name__)

FLOAT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Equation:
    """
    lhs = product of the rhs entries.

    Attributes:
        lhs: Table key on the left
        rhs: Table keys multiplied on the right
    """
    lhs: str
    rhs: Tuple[str, ...]

    @property
    def rhs_text(self) -> str:
        return "*".join(self.rhs)

    def keys(self) -> List[str]:
        return [self.lhs, *self.rhs]


@dataclass(frozen=True)
class EquationCheck:
    lhs: str
    rhs: str
    lhs_value: Probability
    rhs_value: Probability
    residual: Probability
    ok: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "lhs_value": json_number(self.lhs_value),
            "rhs_value": json_number(self.rhs_value),
            "residual": json_number(self.residual),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class LocalityReport:
    mode: AssignmentMode
    equations: List[EquationCheck] = field(default_factory=list)
    joint_probability: Probability = Fraction(0)
    quantum_prediction: Probability = Fraction(0)
    born_residual: Probability = Fraction(0)
    born_ok: bool = True

    @property
    def locality_ok(self) -> bool:
        return all(check.ok for check in self.equations)

    def violations(self) -> List[EquationCheck]:
        return [check for check in self.equations if not check.ok]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "equations": [check.to_dict() for check in self.equations],
            "joint_probability": json_number(self.joint_probability),
            "quantum_prediction": json_number(self.quantum_prediction),
            "born_residual": json_number(self.born_residual),
            "born_ok": self.born_ok,
            "locality_ok": self.locality_ok,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def required_equations(assignment: OntAssignment, regions: Tuple[str, str] = ("A", "B")) -> List[Equation]:
    """The conditional-independence equations the assignment mode demands."""
    event_a, event_b = (detection(region) for region in regions)
    both = f"{event_a}&{event_b}"
    label = assignment.state_label
    conditional = entry_key(event_b, label, given=event_a)
    factorization = Equation(entry_key(both, label), (entry_key(event_a, label), conditional))

    if assignment.mode is AssignmentMode.PSI_COMPLETE:
        return [
            Equation(conditional, (entry_key(event_b, label),)),
            factorization,
        ]
    return [
        Equation(entry_key(event_a, label), (entry_key(event_a, CELL_A_LABEL),)),
        Equation(conditional, (entry_key(event_b, CELL_A_LABEL),)),
        factorization,
    ]


def _product(values: Sequence[Probability]) -> Probability:
    result: Probability = Fraction(1) if all(isinstance(v, (int, Fraction)) for v in values) else 1.0
    for value in values:
        result = result * value
    return result


def _within(residual: Probability) -> bool:
    if isinstance(residual, (int, Fraction)):
        return residual == 0
    return residual <= FLOAT_TOLERANCE


def locality_audit(table: ConditionalProbabilityTable, assignment: OntAssignment,
                   scenario: Optional[DetectionScenario] = None) -> LocalityReport:
    """
    Check every equation the assignment's mode demands.

    :param table: Conditional probabilities to audit
    :param assignment: Ontic assignment the table is conditioned on
    :param scenario: Source of the quantum prediction, balanced by default
    :raises MissingEntriesError: Listing every required key the table lacks
    """
    equations = required_equations(assignment, table.regions)
    missing = table.missing(key for equation in equations for key in equation.keys())
    if missing:
        logger.warning(f"Locality audit rejected a table missing {len(missing)} entries")
        raise MissingEntriesError(missing)

    checks = []
    for equation in equations:
        lhs_value = table[equation.lhs]
        rhs_value = _product([table[key] for key in equation.rhs])
        residual = abs(lhs_value - rhs_value)
        checks.append(EquationCheck(equation.lhs, equation.rhs_text, lhs_value, rhs_value,
                                    residual, _within(residual)))

    if scenario is None:
        scenario = DetectionScenario.balanced(assignment.mode)
    joint = table[equations[-1].lhs]
    quantum = quantum_joint_prediction(scenario)
    born_residual = abs(joint - quantum)

    report = LocalityReport(
        mode=assignment.mode,
        equations=checks,
        joint_probability=joint,
        quantum_prediction=quantum,
        born_residual=born_residual,
        born_ok=_within(born_residual),
    )
    logger.debug(f"Audit {assignment.mode.value}: locality_ok={report.locality_ok} born_residual={born_residual}")
    return report
