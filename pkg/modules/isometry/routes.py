"""
Isometry commands
"""
import logging

import click

from modules.core.numeric import to_scalar
from modules.isometry.isometry import exact_isometries, rank_isometries
from modules.isometry.models import IsometryCandidate
from modules.shared.errors import LatticeError, ParseError
from modules.shared.parsing import gram_from_inputs, require_count
from modules.shared.responses import emit_json, report_failure

logger = logging.getLogger(__name__)


@click.command('isometries')
@click.argument('matrices', nargs=-1)
@click.option('--cell', 'cells', multiple=True, help='Cell parameters; may be given twice.')
@click.option('--tol', 'tol', default=None, help='Largest residual ||g T1 g^T - T2||_inf listed.')
@click.option('--inclusive', is_flag=True, help='Admit rows with norm equal to lambda_j + lambda_1.')
@click.option('--exact', 'exact_only', is_flag=True, help='Only exact isometries, by backtracking search.')
@click.pass_obj
def isometries_command(config, matrices, cells, tol, inclusive, exact_only):
    """List potential isometries g with g T1 g^T close to T2, best first."""
    try:
        t1, t2 = require_count(gram_from_inputs(matrices, cells), 2, 'isometries')
        if t1.n != 3 or t2.n != 3:
            raise ParseError("isometries needs 3x3 Gram matrices")
        if exact_only:
            found = [IsometryCandidate(g, 0, True) for g in exact_isometries(t1, t2)]
        else:
            try:
                limit = to_scalar(tol if tol is not None else config['isometry_tolerance'])
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad tolerance {tol!r}: {e}") from e
            found = rank_isometries(t1, t2, tol=limit, inclusive=inclusive)
        logger.info(f"✅ {len(found)} isometr{'y' if len(found) == 1 else 'ies'} listed")
        emit_json({'success': True, 'count': len(found), 'isometries': [c.to_dict() for c in found]})
    except LatticeError as e:
        report_failure(e, 'isometries')
