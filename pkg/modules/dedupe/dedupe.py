"""
Duplicate detection for lattice datasets.

CSV rows (cell parameters or Gram entries) are fingerprinted on a worker pool,
persisted as a JSON Lines index and grouped by single-link clustering on the
embedding distance.
"""
import json
import logging
import os
import statistics
import sys
from functools import partial
from multiprocessing import Pool

import numpy as np
import pandas as pd
from tqdm import tqdm

from modules.core.lattice import gram_from_cell
from modules.core.models import CellParameters, SymMat3
from modules.core.numeric import get_numeric, is_exact, numeric_mode, to_scalar
from modules.dedupe.models import CELL_SCHEMA, GRAM_SCHEMA, DedupeReport, FingerprintEntry, LatticeRecord
from modules.embedding.distance import vector_distance
from modules.embedding.embedding import iota, normalize_scale
from modules.embedding.models import EmbeddingKind, MetricKind
from modules.reduction.minkowski import minkowski_reduce
from modules.shared.errors import LatticeError, ParseError
from modules.shared.formatting import parse_scalar, render_scalar

logger = logging.getLogger(__name__)

CELL_COLUMNS = ('id', 'a', 'b', 'c', 'alpha', 'beta', 'gamma')
GRAM_COLUMNS = ('id', 's11', 's22', 's33', 's12', 's13', 's23')
DEFAULT_THRESHOLD_FACTOR = '1e-3'
MAX_CHUNKSIZE = 1000


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------

def detect_schema(columns):
    names = tuple(str(c).strip().lower() for c in columns)
    if set(names) == set(CELL_COLUMNS) and len(names) == len(CELL_COLUMNS):
        return CELL_SCHEMA
    if set(names) == set(GRAM_COLUMNS) and len(names) == len(GRAM_COLUMNS):
        return GRAM_SCHEMA
    raise ParseError(f"header {list(columns)} matches neither {list(CELL_COLUMNS)} nor {list(GRAM_COLUMNS)}")


def read_records(path) -> list:
    """Records of a CSV file; rows are numbered from 1 after the header"""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True, encoding='utf-8')
    except pd.errors.EmptyDataError:
        logger.warning(f"⚠️ {path} is empty")
        return []
    except (OSError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ParseError(f"could not read {path}: {e}") from e

    schema = detect_schema(frame.columns)
    frame.columns = [str(c).strip().lower() for c in frame.columns]
    fields = (CELL_COLUMNS if schema == CELL_SCHEMA else GRAM_COLUMNS)[1:]
    records, seen = [], set()
    for row, item in enumerate(frame.to_dict('records'), start=1):
        record_id = str(item['id']).strip()
        if not record_id:
            raise ParseError("empty id", row=row)
        if record_id in seen:
            raise ParseError(f"duplicate id {record_id!r}", row=row)
        seen.add(record_id)
        try:
            values = tuple(to_scalar(item[name]) for name in fields)
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise ParseError(f"bad number in record {record_id!r}: {e}", row=row) from e
        records.append(LatticeRecord(record_id, schema, values, row))
    logger.info(f"✅ Read {len(records)} {schema} record(s) from {path}")
    return records


def record_gram(record: LatticeRecord) -> SymMat3:
    if record.schema == CELL_SCHEMA:
        return gram_from_cell(CellParameters(*record.values))
    return SymMat3(*record.values)


# ---------------------------------------------------------------------------
# Fingerprinting
# ---------------------------------------------------------------------------

def _fingerprint_worker(record, kind, mode, tolerance, normalize):
    """Worker entry point; returns a result dict instead of raising"""
    with numeric_mode(mode, tolerance):
        try:
            gram = record_gram(record)
            if normalize:
                gram = normalize_scale(gram)
            embedding = iota(gram, kind)
            reduced = minkowski_reduce(gram).reduced
            entry = FingerprintEntry(record.id, embedding.kind.value, embedding.values, gram.det(), reduced.entries())
            return {'success': True, 'row': record.row, 'entry': entry}
        except (LatticeError, ValueError) as e:
            return {'success': False, 'row': record.row, 'id': record.id, 'error': str(e)}


def fingerprint_records(records, kind=EmbeddingKind.MINKOWSKI, jobs=1, normalize=False, progress=False):
    """(entries, warnings) in input order, independent of worker scheduling"""
    num = get_numeric()
    tolerance = getattr(num, 'tolerance', None)
    worker = partial(_fingerprint_worker, kind=EmbeddingKind.parse(kind).value, mode=num.name,
                     tolerance=tolerance, normalize=normalize)
    bar = partial(tqdm, total=len(records), desc='fingerprints', file=sys.stderr, disable=not progress)
    if jobs > 1 and len(records) > 1:
        chunksize = max(min(len(records) // (jobs * 4), MAX_CHUNKSIZE), 1)
        with Pool(jobs) as p:
            results = list(bar(p.imap(worker, records, chunksize=chunksize)))
    else:
        results = [worker(record) for record in bar(records)]

    entries, warnings = [], []
    for result in results:
        if result['success']:
            entries.append(result['entry'])
        else:
            logger.warning(f"⚠️ Row {result['row']} ({result['id']}) skipped: {result['error']}")
            warnings.append({'row': result['row'], 'id': result['id'], 'error': result['error']})
    return entries, warnings


def default_threshold(entries, factor=DEFAULT_THRESHOLD_FACTOR):
    """factor x median trace of the reduced forms"""
    if not entries:
        return to_scalar(0)
    traces = [sum(e.reduced[:3]) for e in entries]
    median = statistics.median(traces) if is_exact() else float(np.median(np.array(traces, dtype=float)))
    return to_scalar(factor) * median


# ---------------------------------------------------------------------------
# Clustering
# ---------------------------------------------------------------------------

def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def cluster(entries, threshold, metric=MetricKind.LINF) -> list:
    """
    Single-link groups of ids, members sorted, groups ordered by smallest id.
    A float L-infinity prefilter discards pairs before the exact comparison;
    it is valid for every metric since L-infinity is the smallest of the three.
    """
    num = get_numeric()
    n = len(entries)
    parent = list(range(n))
    if n > 1:
        table = np.array([[float(x) for x in e.values] for e in entries])
        slack = 1e-9 * max(1.0, float(np.abs(table).max()))
        limit = float(threshold) + slack
        for i in range(n - 1):
            gaps = np.abs(table[i + 1:] - table[i]).max(axis=1)
            for offset in np.nonzero(gaps <= limit)[0]:
                j = i + 1 + int(offset)
                if num.le(vector_distance(entries[i].values, entries[j].values, metric), threshold):
                    ri, rj = _find(parent, i), _find(parent, j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i, entry in enumerate(entries):
        groups.setdefault(_find(parent, i), []).append(entry.id)
    clusters = [sorted(g) for g in groups.values()]
    clusters.sort(key=lambda g: g[0])
    return clusters


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def write_index(path, entries):
    """JSON Lines fingerprint index, one record per lattice"""
    with open(path, 'w', encoding='utf-8') as f:
        for entry in entries:
            f.write(json.dumps(entry.to_dict()) + '\n')
    logger.info(f"✅ Wrote {len(entries)} fingerprint(s) to {path}")


def _entry_from_fields(record_id, kind, values, det, reduced):
    return FingerprintEntry(str(record_id), EmbeddingKind.parse(kind).value,
                            tuple(parse_scalar(x) for x in values), parse_scalar(det),
                            tuple(parse_scalar(x) for x in reduced))


def read_index(path) -> list:
    entries = []
    with open(path, 'r', encoding='utf-8') as f:
        for row, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                entries.append(_entry_from_fields(data['id'], data['kind'], data['values'],
                                                  data['det'], data['reduced']))
            except (json.JSONDecodeError, KeyError, ValueError) as e:
                raise ParseError(f"bad index line: {e}", row=row) from e
    return entries


VALUE_COLUMNS = tuple(f'v{k}' for k in range(1, 14))
REDUCED_COLUMNS = ('r11', 'r22', 'r33', 'r12', 'r13', 'r23')


def export_fingerprint_csv(path, entries):
    rows = []
    for e in entries:
        row = {'id': e.id, 'kind': e.kind}
        row.update({c: render_scalar(x) for c, x in zip(VALUE_COLUMNS, e.values)})
        row['det'] = render_scalar(e.det)
        row.update({c: render_scalar(x) for c, x in zip(REDUCED_COLUMNS, e.reduced)})
        rows.append(row)
    columns = ['id', 'kind', *VALUE_COLUMNS, 'det', *REDUCED_COLUMNS]
    pd.DataFrame(rows, columns=columns).to_csv(path, index=False)
    logger.info(f"✅ Exported {len(entries)} fingerprint(s) to {path}")


def read_fingerprint_csv(path) -> list:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        return []
    entries = []
    for row, item in enumerate(frame.to_dict('records'), start=1):
        try:
            entries.append(_entry_from_fields(item['id'], item['kind'], [item[c] for c in VALUE_COLUMNS],
                                              item['det'], [item[c] for c in REDUCED_COLUMNS]))
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad fingerprint row: {e}", row=row) from e
    return entries


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------

def dedupe(in_path, out_path=None, threshold=None, metric=MetricKind.LINF, kind=EmbeddingKind.MINKOWSKI,
           jobs=1, normalize=False, factor=DEFAULT_THRESHOLD_FACTOR, progress=False) -> DedupeReport:
    metric = MetricKind.parse(metric)
    kind = EmbeddingKind.parse(kind)
    records = read_records(in_path)
    entries, warnings = fingerprint_records(records, kind, jobs=jobs, normalize=normalize, progress=progress)
    if out_path:
        out_dir = os.path.dirname(os.path.abspath(out_path))
        os.makedirs(out_dir, exist_ok=True)
        write_index(out_path, entries)
    threshold = default_threshold(entries, factor) if threshold is None else to_scalar(threshold)
    if get_numeric().negative(threshold):
        raise ParseError(f"threshold must be non-negative, got {threshold}")
    clusters = cluster(entries, threshold, metric)
    logger.info(f"✅ {len(entries)} lattice(s) grouped into {len(clusters)} cluster(s) at threshold {threshold}")
    return DedupeReport(clusters, threshold, metric.value, kind.value, warnings, len(records))
