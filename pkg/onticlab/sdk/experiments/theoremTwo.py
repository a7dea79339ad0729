from onticlab.sdk.common.enums import AssignmentMode, ExperimentName
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.locality import DetectionScenario, OntAssignment, build_table, locality_audit


class TheoremTwoExperiment(BaseExperiment):
    """
    Joint detection of a single particle at two regions, for the ψ-complete
    and the epistemic assignment, in exact rational arithmetic.
    """
    name = ExperimentName.THEOREM2
    description = "Joint detection under locality, ψ-complete against epistemic"
    columns = ("mode", "joint_prob", "quantum_pred", "residual")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        for mode in AssignmentMode:
            scenario = DetectionScenario.balanced(mode)
            audit = locality_audit(build_table(scenario), OntAssignment.for_mode(mode), scenario)
            report.add_row(mode.value, audit.joint_probability, audit.quantum_prediction, audit.born_residual)
