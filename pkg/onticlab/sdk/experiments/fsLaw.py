import math

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.quantum.dynamics import EvolutionParams, energy_variance, evolution_speed, evolve
from onticlab.sdk.quantum.geometry import fubini_study_dist2
from onticlab.sdk.quantum.sampling import make_rng, random_hermitian, random_state


class FsLawExperiment(BaseExperiment):
    """
    Fubini-Study distance covered in one step against 4·dt²(ΔH)²/ħ², for a
    seeded random generator and state.
    """
    name = ExperimentName.FS_LAW
    description = "Fubini-Study distance against the energy-uncertainty law"
    columns = ("dt", "delta_H_sq", "fs_dist2", "predicted", "residual", "speed_dt", "fs_dist")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        rng = make_rng(config.seed)
        H = random_hermitian(config.qdim, rng)
        psi = random_state(config.qdim, rng)
        variance = energy_variance(psi, H)

        for dt in self.dt_sweep(config):
            params = EvolutionParams(dt=dt, hbar=config.hbar)
            dist2 = fubini_study_dist2(psi, evolve(psi, H, params))
            predicted = 4.0 * dt ** 2 * variance / config.hbar ** 2
            report.add_row(dt, variance, dist2, predicted, dist2 - predicted,
                           evolution_speed(psi, H, params) * dt, math.sqrt(dist2))
