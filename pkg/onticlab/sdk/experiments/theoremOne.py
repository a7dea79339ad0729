import math

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.models.modelFactory import ModelFactory
from onticlab.sdk.models.ontic.frozenResponse import frozen_response_test
from onticlab.sdk.quantum.dynamics import EvolutionParams, HermitianOperator
from onticlab.sdk.quantum.stateVector import StateVector


class TheoremOneExperiment(BaseExperiment):
    """
    Frozen-response test for H = diag(1, -1) and ψ = (|0⟩ + |1⟩)/√2 over the
    dt sweep. The frozen integral stays at 1 while the exact overlap falls
    by dt²(ΔH)²/ħ².
    """
    name = ExperimentName.THEOREM1
    description = "Frozen response function against the evolved overlap"
    columns = ("dt", "delta_H_sq", "frozen_integral", "updated_integral", "born_value", "deficit",
               "deficit_over_dt2")

    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        H = HermitianOperator.diag([1.0, -1.0])
        psi = StateVector([1 / math.sqrt(2), 1 / math.sqrt(2)])
        model = ModelFactory().get_model("ks", n_theta=config.grid_theta, n_phi=config.grid_phi,
                                         oversample=config.oversample)

        for dt in self.dt_sweep(config):
            result = frozen_response_test(psi, H, EvolutionParams(dt=dt, hbar=config.hbar), model,
                                          workers=config.workers)
            report.add_row(dt, result.delta_H_sq, result.frozen_integral, result.updated_integral,
                           result.born_value, result.deficit, result.deficit / dt ** 2)
