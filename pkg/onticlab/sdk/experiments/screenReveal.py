import math

import numpy as np

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.hidden import HiddenSpace, Preparation, SmearProfile, bayesian_update, cell_weight, prepare
from onticlab.sdk.quantum.stateVector import StateVector


class ScreenRevealExperiment(BaseExperiment):
    """
    A particle spread evenly over qdim detector spots. Revealing the cell of
    spot k updates the amplitude onto that cell: the particle is then found
    at k with certainty and nowhere else.
    """
    name = ExperimentName.SCREEN_REVEAL
    description = "Detection on a screen as a Bayesian update of the hidden state"
    columns = ("spot", "prior_marginal", "posterior_marginal", "other_posterior", "joint_detection")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        space = HiddenSpace(config.qdim, config.smear_m)
        profile = SmearProfile.of_kind(config.profile, config.smear_m, config.profile_width)
        screen = StateVector.from_amplitudes(np.ones(config.qdim), normalize=True)
        A = prepare(Preparation("screen", screen, profile), space)

        for spot in range(config.qdim):
            posterior = bayesian_update(A, space.cell_of(spot))
            found = cell_weight(posterior, spot)
            elsewhere = math.fsum(cell_weight(posterior, k) for k in range(config.qdim) if k != spot)
            report.add_row(spot, cell_weight(A, spot), found, elsewhere, found * elsewhere)
