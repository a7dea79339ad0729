"""
Hidden-state epistemic model: an enlarged orthonormal basis partitioned into
cells, propensity amplitudes, reconstruction, transition probabilities,
Bayesian updating and the sharpening limit.
"""
from onticlab.sdk.hidden.hiddenSpace import HiddenSpace, SmearProfile, check_partition
from onticlab.sdk.hidden.propensity import (
    Preparation,
    PropensityAmplitude,
    SharpenResult,
    bayesian_update,
    cell_weight,
    embed,
    prepare,
    project,
    reconstruct,
    sharpen,
    transition_amplitude,
    transition_probability,
)

__all__ = [
    'HiddenSpace',
    'SmearProfile',
    'check_partition',
    'Preparation',
    'PropensityAmplitude',
    'SharpenResult',
    'prepare',
    'reconstruct',
    'embed',
    'project',
    'transition_amplitude',
    'transition_probability',
    'cell_weight',
    'bayesian_update',
    'sharpen',
]
