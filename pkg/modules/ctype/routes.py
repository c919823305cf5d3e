"""
C-type enumeration command
"""
import logging
import os
import sys

import click
from tqdm import tqdm

from modules.core.numeric import EXACT, numeric_mode
from modules.ctype.atlas import write_atlas
from modules.ctype.ctype import enumerate_ctype_reps
from modules.shared.errors import LatticeError
from modules.shared.responses import report_failure

logger = logging.getLogger(__name__)


def class_count_line(count):
    return "1 class" if count == 1 else f"{count} classes"


@click.command('ctype')
@click.option('--n', 'n', type=int, default=3, show_default=True, help='Dimension (2 or 3).')
@click.option('--r', 'r', type=int, default=3, show_default=True, help='Modulus (2, 3 or 4).')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None, help='Atlas JSON file.')
@click.option('--progress', is_flag=True, help='Show a progress bar on stderr.')
def ctype_command(n, r, out_path, progress):
    """Enumerate primitive C-type domains modulo r and write the atlas."""
    try:
        bar = tqdm(desc='classes', unit='class', file=sys.stderr, disable=not progress)

        def advance(done, known):
            bar.total = known
            bar.update(done - bar.n)

        with numeric_mode(EXACT), bar:
            domains = enumerate_ctype_reps(n, r, advance)
        if out_path:
            os.makedirs(os.path.dirname(os.path.abspath(out_path)), exist_ok=True)
            write_atlas(out_path, n, r, domains)
        click.echo(class_count_line(len(domains)))
    except LatticeError as e:
        report_failure(e, 'ctype')
