from onticlab.sdk.models.ontic import KochenSpeckerModel, OntologicalModel, OnticGrid, sphere_grid
from onticlab.sdk.models.modelFactory import ModelFactory

__all__ = ['ModelFactory', 'OntologicalModel', 'KochenSpeckerModel', 'OnticGrid', 'sphere_grid']
