from onticlab.sdk.experiments.baseExperiment import BaseExperiment
from onticlab.sdk.experiments.bornCheck import BornCheckExperiment
from onticlab.sdk.experiments.experimentManager import ExperimentManager
from onticlab.sdk.experiments.fsLaw import FsLawExperiment
from onticlab.sdk.experiments.hiddenRoundtrip import HiddenRoundtripExperiment
from onticlab.sdk.experiments.screenReveal import ScreenRevealExperiment
from onticlab.sdk.experiments.sharpenSweep import SharpenSweepExperiment
from onticlab.sdk.experiments.theoremOne import TheoremOneExperiment
from onticlab.sdk.experiments.theoremTwo import TheoremTwoExperiment

__all__ = [
    'BaseExperiment',
    'ExperimentManager',
    'BornCheckExperiment',
    'TheoremOneExperiment',
    'HiddenRoundtripExperiment',
    'TheoremTwoExperiment',
    'SharpenSweepExperiment',
    'FsLawExperiment',
    'ScreenRevealExperiment',
]
