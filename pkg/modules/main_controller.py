"""
Main Controller to integrate all modules
Provides a unified interface to register every module's commands
"""
import logging

import click

from modules.ctype.routes import ctype_command
from modules.dedupe.routes import dedupe_command
from modules.embedding.routes import dist_command, embed_command
from modules.isometry.routes import isometries_command
from modules.reduction.routes import reduce_command
from modules.verify.routes import verify_command

logger = logging.getLogger(__name__)

MODULE_COMMANDS = {
    'reduction': (reduce_command,),
    'embedding': (embed_command, dist_command),
    'ctype': (ctype_command,),
    'isometry': (isometries_command,),
    'dedupe': (dedupe_command,),
    'verify': (verify_command,),
}


def register_modules(cli: click.Group):
    """Attach all module commands to the CLI group"""
    for commands in MODULE_COMMANDS.values():
        for command in commands:
            cli.add_command(command)
    logger.debug(f"Registered {sum(len(c) for c in MODULE_COMMANDS.values())} commands "
                 f"from {len(MODULE_COMMANDS)} modules")

