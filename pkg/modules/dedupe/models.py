"""
Duplicate-detection value types
"""
from dataclasses import dataclass, field

from modules.shared.formatting import format_scalar

CELL_SCHEMA = 'cell'
GRAM_SCHEMA = 'gram'


@dataclass(frozen=True)
class LatticeRecord:
    """One input row; values are the raw numeric fields in header order"""
    id: str
    schema: str
    values: tuple
    row: int


@dataclass(frozen=True)
class FingerprintEntry:
    id: str
    kind: str
    values: tuple
    det: object
    reduced: tuple

    def to_dict(self):
        return {
            'id': self.id,
            'kind': self.kind,
            'values': [format_scalar(x) for x in self.values],
            'det': format_scalar(self.det),
            'reduced': [format_scalar(x) for x in self.reduced],
        }


@dataclass
class DedupeReport:
    clusters: list
    threshold: object
    metric: str
    kind: str
    warnings: list = field(default_factory=list)
    records: int = 0

    def to_dict(self):
        return {
            'success': True,
            'clusters': [list(c) for c in self.clusters],
            'threshold': format_scalar(self.threshold) if self.threshold is not None else None,
            'metric': self.metric,
            'kind': self.kind,
            'records': self.records,
            'warnings': list(self.warnings),
        }
