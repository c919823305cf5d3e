"""
Command responses: JSON on stdout, failures on stderr with the error's exit code
"""
import json
import logging

import click

logger = logging.getLogger(__name__)


def emit_json(data):
    click.echo(json.dumps(data))


def report_failure(error, action):
    """Log, print a one-line message and leave with the exit code the error carries"""
    code = getattr(error, 'exit_code', 3)
    logger.error(f"❌ {action} failed: {error}")
    click.echo(f"error: {error}", err=True)
    raise click.exceptions.Exit(code)
