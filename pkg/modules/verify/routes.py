"""
Verify command
"""
import logging

import click

from modules.shared.responses import emit_json
from modules.verify.suites import SUITE_NAMES, run_suites

logger = logging.getLogger(__name__)


@click.command('verify')
@click.option('--suite', type=click.Choice(SUITE_NAMES), default='all', show_default=True)
@click.option('--samples', type=int, default=None, help='Samples per suite (default: suite-specific).')
@click.option('--seed', type=int, default=None, help='Random seed.')
@click.pass_obj
def verify_command(config, suite, samples, seed):
    """Run property suites; exit 0 iff every selected suite passes."""
    if samples is None and config.get('verify_samples') is not None:
        samples = int(config['verify_samples'])
    if samples is not None and samples < 0:
        raise click.BadParameter("must be non-negative", param_hint='--samples')
    results = run_suites(suite, samples, config['seed'] if seed is None else seed)
    for result in results:
        emit_json(result.to_dict())
    failed = [r.suite for r in results if not r.passed]
    if failed:
        logger.error(f"❌ Failed suites: {', '.join(failed)}")
        raise click.exceptions.Exit(1)
    logger.info(f"✅ {len(results)} suite(s) passed")
