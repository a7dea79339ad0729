import math
import numbers
from abc import ABC, abstractmethod
from typing import List, Tuple

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.common.exceptions import NumericalError
from onticlab.sdk.common.utils.log import logger
from onticlab.sdk.core.experimentConfig import ExperimentConfig
from onticlab.sdk.core.result import ExperimentReport


class BaseExperiment(ABC):
    """Base class for all experiments."""

    # Class attributes must be overridden
    name: ExperimentName = None
    description: str = "Base experiment"
    columns: Tuple[str, ...] = ()

    def run(self, config: ExperimentConfig) -> ExperimentReport:
        """
        Execute the experiment and stamp the report metadata.

        :raises NumericalError: If a row holds a non-finite number
        """
        report = ExperimentReport(self.name.value, list(self.columns))
        logger.info(f"Running {self.name.value} (seed={config.seed}, workers={config.workers})")
        self.execute(config, report)
        self._check_finite(report)
        report.stamp(config.echo())
        logger.info(f"{self.name.value} produced {len(report.rows)} rows")
        return report

    @abstractmethod
    def execute(self, config: ExperimentConfig, report: ExperimentReport) -> None:
        """Specific logic to be implemented by subclasses"""

    @staticmethod
    def _check_finite(report: ExperimentReport) -> None:
        for row in report.rows:
            for cell in row:
                if isinstance(cell, numbers.Real) and not isinstance(cell, bool) and not math.isfinite(cell):
                    raise NumericalError(f"{report.experiment} produced a non-finite value in row {row}")

    @staticmethod
    def dt_sweep(config: ExperimentConfig) -> List[float]:
        """dt, dt/10, dt/100, ... with ``dt_steps`` entries."""
        return [config.dt / 10 ** k for k in range(config.dt_steps)]
