"""
Reduction value types
"""
from dataclasses import dataclass

from modules.core.models import UnimodularMat


@dataclass(frozen=True)
class Superbase:
    """Superbase vectors (rows, original coordinates) and their Gram matrix tilde_S"""
    vectors: tuple
    tilde: tuple

    @property
    def size(self):
        return len(self.vectors)

    def off_diagonal(self):
        """Entries tilde_s_ij for i < j in lexicographic (i, j) order"""
        k = self.size
        return tuple(self.tilde[i][j] for i in range(k) for j in range(i + 1, k))

    def norms(self):
        return tuple(self.tilde[i][i] for i in range(self.size))


@dataclass(frozen=True)
class ReductionResult:
    reduced: object
    transform: UnimodularMat
