"""
Discretized ontological-model framework: ontic grids, distributions μ,
response functions ξ, the Born-rule quadratures and the Kochen-Specker
qubit instance.
"""
from onticlab.sdk.models.ontic.onticGrid import OnticGrid, sphere_grid
from onticlab.sdk.models.ontic.tables import (
    EpistemicDistribution,
    ResponseFunction,
    born_integral,
    check_normalization,
    measure_of,
    overlap_region,
    support,
)
from onticlab.sdk.models.ontic.baseModel import OntologicalModel
from onticlab.sdk.models.ontic.ksModel import KochenSpeckerModel, ks_distribution, ks_response
from onticlab.sdk.models.ontic.frozenResponse import (
    FrozenResponseResult,
    ResponseDifferential,
    frozen_response_test,
    response_differential,
)
from onticlab.sdk.models.ontic.tableIO import export_table, import_table

__all__ = [
    'OnticGrid',
    'sphere_grid',
    'EpistemicDistribution',
    'ResponseFunction',
    'born_integral',
    'check_normalization',
    'measure_of',
    'support',
    'overlap_region',
    'OntologicalModel',
    'KochenSpeckerModel',
    'ks_distribution',
    'ks_response',
    'FrozenResponseResult',
    'ResponseDifferential',
    'frozen_response_test',
    'response_differential',
    'export_table',
    'import_table',
]
