from typing import List

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.hidden import HiddenSpace, Preparation, SmearProfile, sharpen
from onticlab.sdk.quantum.sampling import make_rng, random_state


def smear_levels(m: int) -> List[int]:
    """m, m // 2, ..., 1."""
    levels = []
    while m >= 1:
        levels.append(m)
        m //= 2
    return levels


class SharpenSweepExperiment(BaseExperiment):
    """
    Distance of the hidden-state description from the ψ-complete one as the
    cells shrink towards single hidden states.
    """
    name = ExperimentName.SHARPEN_SWEEP
    description = "Sharpening limit of the hidden-state model"
    columns = ("m", "deviation")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        psi = random_state(config.qdim, make_rng(config.seed))
        for m in smear_levels(config.smear_m):
            profile = SmearProfile.of_kind(config.profile, m, config.profile_width)
            result = sharpen(HiddenSpace(config.qdim, m), Preparation("psi", psi, profile))
            report.add_row(result.m, result.trace_distance_to_complete)
