from onticlab.sdk.core.experimentConfig import ExperimentConfig, parse_config, parse_config_text
from onticlab.sdk.core.result import ExperimentReport, data_region
from onticlab.sdk.core.runner import run

__all__ = ['ExperimentConfig', 'ExperimentReport', 'parse_config', 'parse_config_text', 'data_region', 'run']
