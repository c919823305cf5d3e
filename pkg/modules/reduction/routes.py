"""
Reduction commands
"""
import logging

import click

from modules.core.models import SymMat2
from modules.reduction.minkowski import minkowski_reduce
from modules.reduction.selling import reduce_2d, selling_reduce
from modules.shared.errors import LatticeError
from modules.shared.formatting import format_matrix, format_scalar
from modules.shared.parsing import gram_from_inputs, require_count
from modules.shared.responses import emit_json, report_failure

logger = logging.getLogger(__name__)

REDUCTION_KINDS = ('selling', 'minkowski', 's', 'm')


def reduce_form(gram, kind):
    """Binary forms have a single reduced form; ternary forms follow kind"""
    if isinstance(gram, SymMat2):
        return reduce_2d(gram)
    if kind in ('selling', 's'):
        return selling_reduce(gram)
    return minkowski_reduce(gram)


@click.command('reduce')
@click.argument('matrix', required=False)
@click.option('--cell', default=None, help='Cell parameters a,b,c,alpha,beta,gamma (degrees).')
@click.option('--kind', type=click.Choice(REDUCTION_KINDS, case_sensitive=False), default='minkowski',
              show_default=True)
def reduce_command(matrix, cell, kind):
    """Reduce a Gram matrix (s11,s22,s33,s12,s13,s23) and print it with its transform."""
    try:
        grams = require_count(gram_from_inputs([matrix] if matrix else [], [cell] if cell else []), 1, 'reduce')
        result = reduce_form(grams[0], kind.lower())
        logger.debug(f"Reduced {grams[0].entries()} to {result.reduced.entries()}")
        emit_json({
            'success': True,
            'kind': 'selling' if kind.lower() in ('selling', 's') else 'minkowski',
            'reduced': [format_scalar(x) for x in result.reduced.entries()],
            'matrix': format_matrix(result.reduced.rows),
            'transform': [list(row) for row in result.transform.rows],
        })
    except LatticeError as e:
        report_failure(e, 'reduce')
