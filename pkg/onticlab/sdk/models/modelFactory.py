from typing import Callable, Dict, List, Optional

from onticlab.sdk.common.utils.log import logger
from onticlab.sdk.models.ontic.baseModel import OntologicalModel
from onticlab.sdk.models.ontic.ksModel import KochenSpeckerModel
from onticlab.sdk.models.ontic.onticGrid import OnticGrid, sphere_grid

ModelBuilder = Callable[..., OntologicalModel]


class ModelFactory:
    """
    Registry of ontological model instances, keyed by name.

    The Kochen-Specker qubit model is registered as ``"ks"``; further models
    are added with ``register``.
    """
    _builders: Dict[str, ModelBuilder] = {
        KochenSpeckerModel.name: KochenSpeckerModel,
    }

    @classmethod
    def register(cls, name: str, builder: ModelBuilder) -> None:
        """
        :param name: Registry key
        :param builder: Callable taking ``grid`` plus keyword options
        """
        if name in cls._builders:
            logger.warning(f"Model '{name}' is already registered, replacing it")
        cls._builders[name] = builder

    @classmethod
    def available(cls) -> List[str]:
        return sorted(cls._builders)

    def get_model(self, model_name: str = KochenSpeckerModel.name, grid: Optional[OnticGrid] = None,
                  n_theta: int = 200, n_phi: int = 400, oversample: int = 4, **options) -> OntologicalModel:
        """
        Build a model by name.

        :param model_name: Registry key
        :param grid: Grid to tabulate on; a sphere grid of the given resolution otherwise
        :param options: Passed to the model builder
        :raises KeyError: If the name is not registered
        """
        builder = self._builders.get(model_name)
        if builder is None:
            raise KeyError(f"unknown ontological model '{model_name}', available: {', '.join(self.available())}")
        if grid is None:
            grid = sphere_grid(n_theta, n_phi, oversample)
        return builder(grid=grid, **options)
