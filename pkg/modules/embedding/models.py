"""
Embedding value types
"""
from dataclasses import dataclass
from enum import Enum


class EmbeddingKind(str, Enum):
    SELLING = 's'
    MINKOWSKI = 'm'

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        aliases = {'s': cls.SELLING, 'selling': cls.SELLING, 'm': cls.MINKOWSKI, 'minkowski': cls.MINKOWSKI}
        if key not in aliases:
            raise ValueError(f"unknown embedding kind {text!r}")
        return aliases[key]


class MetricKind(str, Enum):
    L1 = 'l1'
    L2 = 'l2'
    LINF = 'linf'

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        return cls(str(text).strip().lower())


@dataclass(frozen=True)
class Embedding13:
    kind: EmbeddingKind
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != 13:
            raise ValueError(f"an embedding has 13 values, got {len(values)}")
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'kind', EmbeddingKind(self.kind))

    def vonorm_part(self):
        return self.values[:7] if self.kind is EmbeddingKind.SELLING else self.values

    def conorm_part(self):
        return self.values[7:] if self.kind is EmbeddingKind.SELLING else ()

    def __iter__(self):
        return iter(self.values)
