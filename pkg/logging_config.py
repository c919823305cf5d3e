"""
Logging for lattice13
stderr console output plus optional rotating log files; stdout is left to command results
"""
import os
import sys
import logging
from logging.handlers import RotatingFileHandler

from config_loader import get_setting

DEFAULT_LOG_PATH = os.path.join(os.path.expanduser('~'), '.lattice13', 'logs')

LOGGING_DEFAULTS = {
    'LOG_LEVEL': 'WARNING',
    'LOG_PATH': DEFAULT_LOG_PATH,
    'LOG_FILE_PREFIX': 'lattice13',
    'LOG_MAX_SIZE': '10485760',  # 10MB
    'LOG_BACKUP_COUNT': '5',
    'LOG_FORMAT': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'LOG_TO_CONSOLE': 'True',
    'LOG_TO_FILE': 'False',
}


def _option(settings, key):
    return get_setting(settings, key, LOGGING_DEFAULTS[key])


def _flag(settings, key):
    return str(_option(settings, key)).lower() == 'true'


def _rotating(path, level, formatter, max_size, backups):
    handler = RotatingFileHandler(path, maxBytes=max_size, backupCount=backups, encoding='utf-8')
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def setup_logging(settings=None, level=None):
    """
    Configure the root logger once per process.

    `level` (the --log-level flag) wins over LOG_LEVEL from the settings file or
    environment. File logging writes <prefix>.log and <prefix>_error.log under
    LOG_PATH and stays off unless LOG_TO_FILE is true.
    """
    settings = settings or {}
    level_name = str(level or _option(settings, 'LOG_LEVEL')).upper()
    log_level = getattr(logging, level_name, logging.WARNING)
    formatter = logging.Formatter(_option(settings, 'LOG_FORMAT'))

    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    root.setLevel(log_level)

    if _flag(settings, 'LOG_TO_CONSOLE'):
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(log_level)
        console.setFormatter(formatter)
        root.addHandler(console)

    log_files = []
    if _flag(settings, 'LOG_TO_FILE'):
        log_path = _option(settings, 'LOG_PATH')
        prefix = _option(settings, 'LOG_FILE_PREFIX')
        max_size = int(_option(settings, 'LOG_MAX_SIZE'))
        backups = int(_option(settings, 'LOG_BACKUP_COUNT'))
        os.makedirs(log_path, exist_ok=True)
        for suffix, file_level in (('', log_level), ('_error', logging.ERROR)):
            path = os.path.join(log_path, f'{prefix}{suffix}.log')
            root.addHandler(_rotating(path, file_level, formatter, max_size, backups))
            log_files.append(path)

    logging.debug(f"Logging initialized - Level: {level_name}")
    if log_files:
        logging.info(f"Log files: {', '.join(log_files)}")
    return logging.getLogger(__name__)

