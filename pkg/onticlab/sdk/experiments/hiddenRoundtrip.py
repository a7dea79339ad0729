from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.hidden import HiddenSpace, Preparation, SmearProfile, prepare, project, transition_probability
from onticlab.sdk.quantum.geometry import fidelity_error, overlap_probability
from onticlab.sdk.quantum.sampling import make_rng, random_state

logger = get_logger(__name__)


class HiddenRoundtripExperiment(BaseExperiment):
    """
    Shared-support transition probabilities of the hidden-state model against
    |⟨φ|ψ⟩|² for seeded random pairs in dimension qdim with smear_m sub-levels.
    """
    name = ExperimentName.HIDDEN_ROUNDTRIP
    description = "Hidden-state transition probabilities against the Born rule"
    columns = ("pair_id", "qm_overlap_sq", "eq10_value", "abs_error")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        space = HiddenSpace(config.qdim, config.smear_m)
        profile = SmearProfile.of_kind(config.profile, config.smear_m, config.profile_width)
        rng = make_rng(config.seed)
        worst_roundtrip = 0.0

        for pair_id in range(config.pairs):
            psi = random_state(config.qdim, rng)
            phi = psi if config.identical_pairs else random_state(config.qdim, rng)
            A_psi = prepare(Preparation(f"psi_{pair_id}", psi, profile), space)
            A_phi = prepare(Preparation(f"phi_{pair_id}", phi, profile), space)

            exact = overlap_probability(phi, psi)
            value = transition_probability(A_phi, A_psi)
            worst_roundtrip = max(worst_roundtrip, fidelity_error(psi, project(A_psi, profile)))
            report.add_row(pair_id, exact, value, abs(value - exact))

        logger.info(f"Largest reconstruction fidelity error: {worst_roundtrip!r}")
