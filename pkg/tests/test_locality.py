import json
import math
from fractions import Fraction

import pytest

from onticlab.sdk.common.enums import AssignmentMode
from onticlab.sdk.common.exceptions import (
    AssignmentModeError,
    DisjointnessError,
    DomainError,
    MissingEntriesError,
    NormalizationError,
)
from onticlab.sdk.hidden import HiddenSpace
from onticlab.sdk.locality import (
    ConditionalProbabilityTable,
    DetectionScenario,
    OntAssignment,
    build_table,
    entry_key,
    joint_detection_epistemic,
    joint_detection_ontic,
    locality_audit,
    quantum_joint_prediction,
    quantum_single_marginals,
    required_equations,
    single_detection_marginals,
)

PSI = AssignmentMode.PSI_COMPLETE
EPISTEMIC = AssignmentMode.EPISTEMIC


def test_entry_keys():
    assert entry_key("1_A", "Psi") == "p(1_A|Psi)"
    assert entry_key("1_B", "Psi", given="1_A") == "p(1_B|1_A,Psi)"


class TestScenario:
    def test_balanced_scenario_is_exact(self):
        scenario = DetectionScenario.balanced()
        assert scenario.is_exact
        assert scenario.weights() == (Fraction(1, 2), Fraction(1, 2))
        assert scenario.zero() == 0 and isinstance(scenario.zero(), Fraction)

    def test_amplitude_scenario_is_float(self):
        scenario = DetectionScenario.from_amplitudes(0.6, 0.8j)
        assert not scenario.is_exact
        assert scenario.weights() == pytest.approx((0.36, 0.64), abs=1e-15)

    def test_rejects_bad_weights(self):
        with pytest.raises(NormalizationError):
            DetectionScenario.from_weights(Fraction(1, 2), Fraction(1, 3))
        with pytest.raises(NormalizationError):
            DetectionScenario.from_amplitudes(1.0, 1.0)
        with pytest.raises(DomainError):
            DetectionScenario(regions=("A", "A"))

    def test_float_weights_are_read_exactly(self):
        scenario = DetectionScenario.from_weights(0.8, 0.2)
        assert scenario.weights() == (Fraction(4, 5), Fraction(1, 5))
        assert joint_detection_ontic(scenario) == Fraction(4, 25)

    def test_default_scenario_is_balanced_and_exact(self):
        scenario = DetectionScenario()
        assert scenario.is_exact
        assert [abs(a) for a in scenario.branch_amplitudes] == pytest.approx([2 ** -0.5, 2 ** -0.5])
        assert joint_detection_ontic(scenario) == Fraction(1, 4)
        assert scenario == DetectionScenario.balanced()

    def test_with_mode_keeps_weights(self):
        scenario = DetectionScenario.from_weights("1/3", "2/3").with_mode(EPISTEMIC)
        assert scenario.assignment_mode is EPISTEMIC
        assert scenario.weights() == (Fraction(1, 3), Fraction(2, 3))


class TestAssignment:
    def test_cells_must_be_disjoint(self):
        with pytest.raises(DisjointnessError):
            OntAssignment.epistemic((0, 1), (1, 2))

    def test_cells_must_be_non_empty(self):
        with pytest.raises(DomainError):
            OntAssignment.epistemic((), (1,))

    def test_psi_complete_has_no_cells(self):
        with pytest.raises(DomainError):
            OntAssignment(PSI, (frozenset({0}), frozenset({1})))
        assert OntAssignment.psi_complete().state_label == "Psi"

    def test_cells_from_hidden_space(self):
        assignment = OntAssignment.from_space(HiddenSpace(qdim=2, smear=3))
        assert assignment.cells == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        assert assignment.state_label == "lambda_A&lambda_B"


class TestDetection:
    def test_psi_complete_joint_probability(self):
        assert joint_detection_ontic(DetectionScenario.balanced()) == Fraction(1, 4)

    def test_epistemic_joint_probability(self):
        assert joint_detection_epistemic(DetectionScenario.balanced(EPISTEMIC)) == 0

    def test_quantum_prediction(self):
        scenario = DetectionScenario.balanced()
        assert quantum_joint_prediction(scenario) == 0
        assert quantum_single_marginals(scenario) == (Fraction(1, 2), Fraction(1, 2))

    @pytest.mark.parametrize("mode", [PSI, EPISTEMIC])
    def test_single_marginals_match_quantum(self, mode):
        scenario = DetectionScenario.from_weights("1/3", "2/3", mode)
        assert single_detection_marginals(scenario) == quantum_single_marginals(scenario)

    def test_mode_mismatch(self):
        with pytest.raises(AssignmentModeError):
            joint_detection_ontic(DetectionScenario.balanced(EPISTEMIC))
        with pytest.raises(AssignmentModeError):
            joint_detection_epistemic(DetectionScenario.balanced(EPISTEMIC), OntAssignment.psi_complete())
        with pytest.raises(AssignmentModeError):
            build_table(DetectionScenario.balanced(PSI), OntAssignment.epistemic())

    def test_table_entries(self):
        psi_table = build_table(DetectionScenario.balanced())
        assert psi_table["p(1_B|1_A,Psi)"] == Fraction(1, 2)
        assert psi_table["p(1_A&1_B|Psi)"] == Fraction(1, 4)

        epistemic_table = build_table(DetectionScenario.balanced(EPISTEMIC))
        assert epistemic_table["p(1_A|lambda_A)"] == 1
        assert epistemic_table["p(1_B|lambda_A)"] == 0
        assert epistemic_table["p(1_A&1_B|lambda_A&lambda_B)"] == 0


class TestTable:
    def test_rejects_out_of_range_entries(self):
        with pytest.raises(DomainError):
            ConditionalProbabilityTable({"p(1_A|Psi)": Fraction(3, 2)})

    def test_rejects_non_exclusive_detections(self):
        with pytest.raises(DomainError):
            ConditionalProbabilityTable({"p(1_A|Psi)": 0.7, "p(1_B|Psi)": 0.7})

    def test_missing_and_with_entry(self):
        table = ConditionalProbabilityTable({"p(1_A|Psi)": Fraction(1, 2)})
        assert table.missing(["p(1_A|Psi)", "p(1_B|Psi)"]) == ["p(1_B|Psi)"]
        extended = table.with_entry("p(1_B|Psi)", Fraction(1, 2))
        assert len(extended) == 2 and "p(1_B|Psi)" not in table


class TestAudit:
    def test_psi_complete_locality_contradicts_quantum(self):
        scenario = DetectionScenario.balanced()
        report = locality_audit(build_table(scenario), OntAssignment.psi_complete(), scenario)
        assert report.locality_ok
        assert report.joint_probability == Fraction(1, 4)
        assert report.quantum_prediction == 0
        assert report.born_residual == Fraction(1, 4)
        assert not report.born_ok

    def test_epistemic_locality_agrees_with_quantum(self):
        scenario = DetectionScenario.balanced(EPISTEMIC)
        report = locality_audit(build_table(scenario), OntAssignment.epistemic())
        assert report.locality_ok
        assert report.joint_probability == 0
        assert report.born_ok
        assert len(report.equations) == 3

    def test_float_scenario_uses_tolerance(self):
        scenario = DetectionScenario.from_amplitudes(1 / math.sqrt(2), 1 / math.sqrt(2))
        report = locality_audit(build_table(scenario), OntAssignment.psi_complete(), scenario)
        assert report.locality_ok
        assert report.joint_probability == pytest.approx(0.25, abs=1e-15)
        assert not report.born_ok

    def test_nonlocal_table_is_flagged(self):
        table = build_table(DetectionScenario.balanced()).with_entry("p(1_B|1_A,Psi)", Fraction(0))
        report = locality_audit(table, OntAssignment.psi_complete())
        assert not report.locality_ok
        assert [check.lhs for check in report.violations()] == ["p(1_B|1_A,Psi)", "p(1_A&1_B|Psi)"]

    def test_missing_entries(self):
        table = ConditionalProbabilityTable({"p(1_A|Psi)": Fraction(1, 2)})
        with pytest.raises(MissingEntriesError) as info:
            locality_audit(table, OntAssignment.psi_complete())
        assert info.value.missing == ["p(1_A&1_B|Psi)", "p(1_B|1_A,Psi)", "p(1_B|Psi)"]

    def test_required_equations(self):
        equations = required_equations(OntAssignment.epistemic())
        assert [eq.lhs for eq in equations] == [
            "p(1_A|lambda_A&lambda_B)", "p(1_B|1_A,lambda_A&lambda_B)", "p(1_A&1_B|lambda_A&lambda_B)"]
        assert equations[-1].rhs_text == "p(1_A|lambda_A&lambda_B)*p(1_B|1_A,lambda_A&lambda_B)"

    def test_report_serializes_exact_values(self):
        scenario = DetectionScenario.balanced()
        data = json.loads(locality_audit(build_table(scenario), OntAssignment.psi_complete()).to_json())
        assert data["mode"] == "psi_complete"
        assert data["joint_probability"] == 0.25
        assert data["quantum_prediction"] == 0
        assert data["locality_ok"] is True
