import copy
import os
from typing import Any, Dict, Optional

import yaml

from onticlab.sdk.common.utils.log import logger

DEFAULT_SETTINGS: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
    },
    "numerics": {
        "workers": 1,
        # fixed chunk length for born_integral; changing it changes the last bits
        "chunk_size": 65536,
    },
}

global_config: Dict[str, Any] = copy.deepcopy(DEFAULT_SETTINGS)


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load global settings from YAML and merge them over the built-in defaults.

    Lookup order: the explicit path, ``ONTICLAB_CONFIG``, ``config.yaml`` in the
    working directory. A missing file leaves the defaults in place.
    """
    global global_config

    candidates = [config_path, os.environ.get("ONTICLAB_CONFIG"),
                  os.path.join(os.getcwd(), "config.yaml")]
    resolved = next((path for path in candidates if path and os.path.exists(path)), None)

    if resolved is None:
        if config_path:
            logger.warning(f"Settings file {config_path} not found, using defaults")
        global_config = copy.deepcopy(DEFAULT_SETTINGS)
        return global_config

    with open(resolved, 'r', encoding="utf-8") as file:
        loaded = yaml.safe_load(file) or {}

    global_config = _merge(DEFAULT_SETTINGS, loaded)
    logger.debug(f"Loaded settings from {resolved}")
    return global_config


def config() -> Dict[str, Any]:
    return global_config
