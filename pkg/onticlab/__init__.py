"""
onticlab - numerical laboratory for ontological models of quantum states

Discretized ontic spaces, the Kochen-Specker qubit model, the frozen-response
test, a hidden-state epistemic model and the single-particle locality
calculus, with a reproducible experiment runner on top.

 SDK Usage (Programmatic):
    from onticlab.sdk import ExperimentConfig, run

    report = run(ExperimentConfig(experiment="theorem2"), write=False)
    print(report.to_csv())

 CLI Usage (Command Line):
    onticlab theorem1 --config experiments/theorem1.conf
    onticlab list
    onticlab --help
"""

from onticlab import sdk
from onticlab import cli

from onticlab.sdk import (
    ExperimentConfig,
    ExperimentReport,
    ModelFactory,
    StateVector,
    __version__,
    config,
    load_config,
    parse_config,
    run,
)

__all__ = [
    'ExperimentConfig',
    'ExperimentReport',
    'ModelFactory',
    'StateVector',
    'parse_config',
    'run',
    'config',
    'load_config',
    '__version__',

    # Modules
    'sdk',
    'cli',
]
