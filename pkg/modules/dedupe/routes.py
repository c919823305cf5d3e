"""
Dedupe command
"""
import logging

import click

from modules.dedupe.dedupe import dedupe, export_fingerprint_csv, read_index
from modules.embedding.routes import KIND_CHOICES, METRIC_CHOICES
from modules.shared.errors import LatticeError, ParseError
from modules.shared.responses import emit_json, report_failure

logger = logging.getLogger(__name__)


@click.command('dedupe')
@click.option('--in', 'in_path', required=True, type=click.Path(dir_okay=False),
              help='CSV with header id,a,b,c,alpha,beta,gamma or id,s11,s22,s33,s12,s13,s23.')
@click.option('--out', 'out_path', default=None, type=click.Path(dir_okay=False), help='JSONL fingerprint index.')
@click.option('--csv-out', 'csv_path', default=None, type=click.Path(dir_okay=False),
              help='Also export the fingerprints as CSV.')
@click.option('--threshold', default=None, help='Single-link threshold (default: factor x median trace).')
@click.option('--metric', type=click.Choice(METRIC_CHOICES, case_sensitive=False), default=None)
@click.option('--kind', type=click.Choice(KIND_CHOICES, case_sensitive=False), default=None)
@click.option('--jobs', type=int, default=None, help='Worker processes for fingerprinting.')
@click.option('--normalize-scale', is_flag=True, help='Divide each form by det^(1/3) (float mode).')
@click.option('--progress', is_flag=True, help='Show a progress bar on stderr.')
@click.pass_obj
def dedupe_command(config, in_path, out_path, csv_path, threshold, metric, kind, jobs, normalize_scale, progress):
    """Fingerprint a lattice dataset and group near-duplicates."""
    try:
        jobs = config['jobs'] if jobs is None else jobs
        if jobs < 1:
            raise ParseError(f"--jobs must be at least 1, got {jobs}")
        try:
            report = dedupe(in_path, out_path, threshold=threshold, metric=(metric or config['metric']).lower(),
                            kind=kind or config['kind'], jobs=jobs, normalize=normalize_scale,
                            factor=config['threshold_factor'], progress=progress)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(str(e)) from e
        if csv_path and out_path:
            export_fingerprint_csv(csv_path, read_index(out_path))
        elif csv_path:
            logger.warning("⚠️ --csv-out needs --out; no CSV written")
        if report.warnings:
            logger.warning(f"⚠️ {len(report.warnings)} row(s) skipped")
        emit_json(report.to_dict())
    except LatticeError as e:
        report_failure(e, 'dedupe')
