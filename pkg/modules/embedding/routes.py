"""
Embedding and distance commands
"""
import logging

import click

from modules.embedding.distance import lattice_distance, rank2_distance, vonorm_distance_generic
from modules.embedding.embedding import iota
from modules.embedding.models import EmbeddingKind
from modules.shared.errors import LatticeError, ParseError
from modules.shared.formatting import render_line, render_scalar
from modules.shared.parsing import gram_from_inputs, require_count
from modules.shared.responses import report_failure

logger = logging.getLogger(__name__)

KIND_CHOICES = ('s', 'm', 'selling', 'minkowski')
METRIC_CHOICES = ('l1', 'l2', 'linf')
ALGORITHMS = ('embed13', 'vonorm-generic', 'rank2')


def _ternary(grams, what):
    for gram in grams:
        if gram.n != 3:
            raise ParseError(f"{what} needs 3x3 Gram matrices")
    return grams


@click.command('embed')
@click.argument('matrix', required=False)
@click.option('--cell', default=None, help='Cell parameters a,b,c,alpha,beta,gamma (degrees).')
@click.option('--kind', type=click.Choice(KIND_CHOICES, case_sensitive=False), default=None,
              help='s: Selling fingerprint, m: Minkowski fingerprint.')
@click.option('--normalize-scale', is_flag=True, help='Divide by det^(1/3) first (float mode).')
@click.pass_obj
def embed_command(config, matrix, cell, kind, normalize_scale):
    """Print the 13 fingerprint values of one form on one line."""
    try:
        grams = require_count(gram_from_inputs([matrix] if matrix else [], [cell] if cell else []), 1, 'embed')
        gram = _ternary(grams, 'embed')[0]
        embedding = iota(gram, EmbeddingKind.parse(kind or config['kind']), normalize_scale)
        click.echo(render_line(embedding.values))
    except (LatticeError, ValueError) as e:
        report_failure(e if isinstance(e, LatticeError) else ParseError(str(e)), 'embed')


@click.command('dist')
@click.argument('matrices', nargs=-1)
@click.option('--cell', 'cells', multiple=True, help='Cell parameters; may be given twice.')
@click.option('--kind', type=click.Choice(KIND_CHOICES, case_sensitive=False), default=None)
@click.option('--metric', type=click.Choice(METRIC_CHOICES, case_sensitive=False), default=None)
@click.option('--algo', type=click.Choice(ALGORITHMS), default='embed13', show_default=True)
@click.option('--normalize-scale', is_flag=True)
@click.pass_obj
def dist_command(config, matrices, cells, kind, metric, algo, normalize_scale):
    """Distance between two forms."""
    try:
        gram1, gram2 = require_count(gram_from_inputs(matrices, cells), 2, 'dist')
        metric = (metric or config['metric']).lower()
        if algo == 'rank2':
            if gram1.n != 2 or gram2.n != 2:
                raise ParseError("rank2 needs 2x2 Gram matrices (s11,s22,s12)")
            d = rank2_distance(gram1, gram2, metric)
        elif algo == 'vonorm-generic':
            if gram1.n != gram2.n:
                raise ParseError("both forms must have the same rank")
            d = vonorm_distance_generic(gram1, gram2, metric)
        else:
            _ternary((gram1, gram2), 'embed13')
            d = lattice_distance(gram1, gram2, metric, EmbeddingKind.parse(kind or config['kind']), normalize_scale)
        logger.debug(f"{algo} distance ({metric}) = {d}")
        click.echo(render_scalar(d))
    except (LatticeError, ValueError) as e:
        report_failure(e if isinstance(e, LatticeError) else ParseError(str(e)), 'dist')
