"""
onticlab SDK - ontological models of quantum states

Usage:
    from onticlab.sdk import ModelFactory, StateVector, state_from_bloch

    model = ModelFactory().get_model("ks", n_theta=200, n_phi=400)
    psi = state_from_bloch(0.3, 1.2)
    model.born(psi, psi)  # ≈ 1
"""

# Quantum core
from onticlab.sdk.quantum import (
    EvolutionParams,
    HermitianOperator,
    StateVector,
    evolve,
    energy_variance,
    fubini_study_dist2,
    state_from_bloch,
)

# Ontological models
from onticlab.sdk.models.modelFactory import ModelFactory
from onticlab.sdk.models.ontic.baseModel import OntologicalModel
from onticlab.sdk.models.ontic.frozenResponse import frozen_response_test

# Hidden-state model and locality
from onticlab.sdk.hidden import HiddenSpace, Preparation, PropensityAmplitude, SmearProfile
from onticlab.sdk.locality import DetectionScenario, OntAssignment, locality_audit

# Experiments
from onticlab.sdk.core import ExperimentConfig, ExperimentReport, parse_config, run
from onticlab.sdk.experiments import BaseExperiment, ExperimentManager

# Common Utilities
from onticlab.sdk.common import __version__, config, load_config

__all__ = [
    # Quantum core
    "StateVector",
    "HermitianOperator",
    "EvolutionParams",
    "evolve",
    "energy_variance",
    "fubini_study_dist2",
    "state_from_bloch",

    # Ontological models
    "ModelFactory",
    "OntologicalModel",
    "frozen_response_test",

    # Hidden-state model and locality
    "HiddenSpace",
    "SmearProfile",
    "Preparation",
    "PropensityAmplitude",
    "DetectionScenario",
    "OntAssignment",
    "locality_audit",

    # Experiments
    "ExperimentConfig",
    "ExperimentReport",
    "parse_config",
    "run",
    "BaseExperiment",
    "ExperimentManager",

    # Configuration
    "config",
    "load_config",
    "__version__",
]
