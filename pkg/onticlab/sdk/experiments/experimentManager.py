import importlib
from typing import Dict, Type

from onticlab.sdk.common.enums import ExperimentName
from onticlab.sdk.common.exceptions import UnknownExperimentError
from onticlab.sdk.common.utils.log import logger
from onticlab.sdk.experiments.baseExperiment import BaseExperiment


class ExperimentManager:
    """
    Experiment manager for the registered experiments.
    """
    _instance = None

    def __new__(cls):
        """Singleton pattern to ensure only one instance of ExperimentManager exists."""
        if cls._instance is None:
            cls._instance = super(ExperimentManager, cls).__new__(cls)
            cls._instance.experiment_classes = {}
        return cls._instance

    def load_experiments(self) -> bool:
        """
        Load experiment classes from experiments.__init__.__all__

        :return: True if experiments were loaded, False otherwise
        """
        if self.experiment_classes:
            return True

        package = importlib.import_module("onticlab.sdk.experiments")
        for class_name in getattr(package, "__all__", []):
            if class_name in ["BaseExperiment", "ExperimentManager"]:
                continue
            cls = getattr(package, class_name, None)
            if isinstance(cls, type) and issubclass(cls, BaseExperiment) and cls is not BaseExperiment:
                self.experiment_classes[cls.name] = cls
                logger.debug(f"Loaded experiment: {cls.name.value} from class {class_name}")

        return len(self.experiment_classes) > 0

    def create_experiment(self, name) -> BaseExperiment:
        """
        Get a new instance of an experiment.

        :param name: ExperimentName or its command-line name
        :raises UnknownExperimentError: If no experiment is registered under the name
        """
        self.load_experiments()
        try:
            key = name if isinstance(name, ExperimentName) else ExperimentName.from_name(name)
        except ValueError as e:
            raise UnknownExperimentError(str(e)) from e

        experiment_class = self.experiment_classes.get(key)
        if experiment_class is None:
            raise UnknownExperimentError(f"experiment '{key.value}' is not registered")
        return experiment_class()

    def list_experiments(self) -> Dict[str, Dict[str, object]]:
        """
        Get information about all loaded experiments.

        :return: Name mapped to description and columns, in declaration order
        """
        self.load_experiments()
        result = {}
        for member in ExperimentName:
            experiment_class: Type[BaseExperiment] = self.experiment_classes.get(member)
            if experiment_class is not None:
                result[member.value] = {
                    "description": experiment_class.description,
                    "columns": list(experiment_class.columns),
                }
        return result
