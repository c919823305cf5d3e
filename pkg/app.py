import logging

import click
from dotenv import load_dotenv

from config_loader import load_settings_from_json, get_setting
from logging_config import setup_logging
from modules.core.numeric import EXACT, FLOAT, set_numeric_mode


def build_config(settings, mode=None, tol=None):
    """Resolved configuration: CLI flags over settings file over environment over built-ins"""
    return {
        'mode': mode or get_setting(settings, 'NUMERIC_MODE'),
        'tolerance': tol if tol is not None else float(get_setting(settings, 'COMPARISON_TOLERANCE')),
        'kind': get_setting(settings, 'DEFAULT_KIND'),
        'metric': get_setting(settings, 'DEFAULT_METRIC'),
        'threshold_factor': str(get_setting(settings, 'DEDUPE_THRESHOLD_FACTOR')),
        'isometry_tolerance': str(get_setting(settings, 'ISOMETRY_TOLERANCE')),
        'jobs': int(get_setting(settings, 'JOBS')),
        'seed': int(get_setting(settings, 'RANDOM_SEED')),
        'verify_samples': get_setting(settings, 'VERIFY_SAMPLES'),
    }


@click.group()
@click.option('--mode', type=click.Choice([EXACT, FLOAT]), default=None,
              help='Arithmetic for all comparisons (default: exact rationals).')
@click.option('--tol', type=float, default=None, help='Comparison tolerance in float mode.')
@click.option('--settings', 'settings_path', type=click.Path(dir_okay=False), default=None,
              help='JSON settings file.')
@click.option('--log-level', default=None, help='Logging level for stderr output.')
@click.pass_context
def cli(ctx, mode, tol, settings_path, log_level):
    """Fingerprints, reductions and isometries of three-dimensional lattices."""
    load_dotenv()
    settings = load_settings_from_json(settings_path)
    setup_logging(settings, log_level)
    config = build_config(settings, mode, tol)
    if config['mode'] not in (EXACT, FLOAT):
        raise click.BadParameter(f"unknown numeric mode {config['mode']!r}", param_hint='NUMERIC_MODE')
    set_numeric_mode(config['mode'], config['tolerance'])
    logging.debug(f"Configuration: {config}")
    ctx.obj = config


# Register all modules through main controller
from modules import main_controller  # noqa: E402
main_controller.register_modules(cli)
