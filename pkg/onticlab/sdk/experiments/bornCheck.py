from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.models.modelFactory import ModelFactory
from onticlab.sdk.quantum.geometry import overlap_probability
from onticlab.sdk.quantum.sampling import make_rng, random_state

logger = get_logger(__name__)


class BornCheckExperiment(BaseExperiment):
    """
    Quadrature of ξ(φ|λ)·μ(ψ|λ) for the Kochen-Specker qubit model against
    the exact |⟨φ|ψ⟩|², over seeded random qubit pairs.
    """
    name = ExperimentName.BORN_CHECK
    description = "Born rule reproduced by the Kochen-Specker qubit model"
    columns = ("pair_id", "overlap_exact", "born_integral", "abs_error")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        if config.qdim != 2:
            logger.warning(f"The Kochen-Specker model is a qubit model, ignoring qdim={config.qdim}")
        model = ModelFactory().get_model("ks", n_theta=config.grid_theta, n_phi=config.grid_phi,
                                         oversample=config.oversample)
        rng = make_rng(config.seed)

        for pair_id in range(config.pairs):
            psi = random_state(2, rng)
            phi = psi if config.identical_pairs else random_state(2, rng)
            exact = overlap_probability(phi, psi)
            integral = model.born(phi, psi, workers=config.workers)
            report.add_row(pair_id, exact, integral, abs(integral - exact))
