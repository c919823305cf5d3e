"""
Isometry value types
"""
from dataclasses import dataclass

from modules.core.models import UnimodularMat
from modules.shared.formatting import format_scalar


@dataclass(frozen=True)
class PsiSets:
    """Admissible rows g_i of a candidate isometry, one set per row index"""
    psi1: tuple
    psi2: tuple
    psi3: tuple

    def for_row(self, i):
        return (self.psi1, self.psi2, self.psi3)[i]

    def union(self):
        return frozenset(self.psi1) | frozenset(self.psi2) | frozenset(self.psi3)


@dataclass(frozen=True)
class IsometryCandidate:
    g: UnimodularMat
    residual: object
    exact: bool = False

    def to_dict(self):
        return {'g': [list(row) for row in self.g.rows], 'residual': format_scalar(self.residual), 'exact': self.exact}
