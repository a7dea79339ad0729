from onticlab.sdk.common.config.configManager import config, load_config
from onticlab.sdk.common.utils.log import logger, get_logger, setup_logging, set_log_level

__version__ = "0.1.0"

__all__ = ['config', 'load_config', 'logger', 'setup_logging', 'get_logger', 'set_log_level', '__version__']
