"""
Dispatch of an experiment config to its experiment and the report file.
"""
import numpy as np

from onticlab.sdk.common.exceptions import NumericalError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport
from onticlab.sdk.experiments.experimentManager import ExperimentManager

logger = get_logger(__name__)


def run(config: ExperimentConfig, write: bool = True) -> ExperimentReport:
    """
    Run the configured experiment.

    :param config: Validated experiment config
    :param write: Write the report to ``config.resolved_output_path``
    :return: The report
    :raises UnknownExperimentError: If the experiment is not registered
    :raises UnwritablePathError: If the report cannot be written
    :raises NumericalError: If a numerical routine fails
    """
    experiment = ExperimentManager().create_experiment(config.experiment)
    try:
        with np.errstate(invalid="raise", divide="raise", over="raise"):
            report = experiment.run(config)
    except (FloatingPointError, np.linalg.LinAlgError) as e:
        raise NumericalError(f"{config.experiment.value} failed: {e}") from e

    if write:
        report.write(config.resolved_output_path, config.format)
    return report
