import json
import os
import logging

SETTINGS_ENV = 'LATTICE13_SETTINGS'
DEFAULT_SETTINGS_PATH = os.path.join('~', '.lattice13', 'settings.json')

# built-in values used when neither the settings file nor the environment has a key
DEFAULTS = {
    'NUMERIC_MODE': 'exact',
    'COMPARISON_TOLERANCE': '1e-9',
    'DEFAULT_KIND': 'm',
    'DEFAULT_METRIC': 'linf',
    'DEDUPE_THRESHOLD_FACTOR': '1e-3',
    'ISOMETRY_TOLERANCE': '1e-6',
    'JOBS': '1',
    'RANDOM_SEED': '20240917',
    'VERIFY_SAMPLES': None,
}


def default_settings_path():
    return os.path.expanduser(os.environ.get(SETTINGS_ENV) or DEFAULT_SETTINGS_PATH)


def load_settings_from_json(file_path=None):
    """
    Load settings from a JSON file.

    Args:
        file_path (str): Path to the JSON settings file.
                        Defaults to $LATTICE13_SETTINGS, then ~/.lattice13/settings.json

    Returns:
        dict: Dictionary containing settings; empty when the file is missing or unreadable
    """
    if file_path is None:
        file_path = default_settings_path()

    try:
        if os.path.exists(file_path):
            with open(file_path, 'r', encoding='utf-8') as f:
                settings = json.load(f)
            if not isinstance(settings, dict):
                logging.error(f"❌ Settings file {file_path} must hold a JSON object")
                return {}
            logging.info(f"✅ Settings loaded from {file_path}")
            return settings
        else:
            logging.debug(f"Settings file not found at {file_path}")
            return {}
    except json.JSONDecodeError as e:
        logging.error(f"❌ Error parsing JSON settings file: {e}")
        return {}
    except OSError as e:
        logging.error(f"❌ Error loading settings file: {e}")
        return {}


def get_setting(settings, key, default=None):
    """
    Get a setting with fallback to an environment variable, then to the default.

    Args:
        settings (dict): Loaded settings dictionary
        key (str): Setting key to retrieve
        default: Value used when the key is found nowhere; DEFAULTS[key] when omitted

    Returns:
        Setting value
    """
    if key in settings:
        return settings[key]

    env_value = os.environ.get(key)
    if env_value:
        logging.debug(f"Using environment variable for {key}")
        return env_value

    return DEFAULTS.get(key) if default is None else default
