from onticlab.sdk.locality.audit import EquationCheck, LocalityReport, locality_audit, required_equations
from onticlab.sdk.locality.detection import (
    build_table,
    joint_detection_epistemic,
    joint_detection_ontic,
    quantum_joint_prediction,
    quantum_single_marginals,
    single_detection_marginals,
)
from onticlab.sdk.locality.scenario import (
    ConditionalProbabilityTable,
    DetectionScenario,
    OntAssignment,
    entry_key,
)

__all__ = [
    'DetectionScenario',
    'OntAssignment',
    'ConditionalProbabilityTable',
    'entry_key',
    'joint_detection_ontic',
    'joint_detection_epistemic',
    'quantum_joint_prediction',
    'quantum_single_marginals',
    'single_detection_marginals',
    'build_table',
    'locality_audit',
    'required_equations',
    'EquationCheck',
    'LocalityReport',
]
