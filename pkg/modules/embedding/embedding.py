"""
The two fingerprints of a ternary form in R^13.

iota_s: sorted vonorms (mod 2) followed by sorted conorms of the Selling-reduced form.
iota_m: sorted vonorms modulo 3, read off the Minkowski-reduced form by a fixed vector list.
"""
import logging

from modules.core.lattice import require_positive_definite
from modules.core.models import SymMat3
from modules.core.numeric import is_exact
from modules.embedding.models import Embedding13, EmbeddingKind
from modules.reduction.minkowski import minkowski_reduce
from modules.reduction.selling import selling_reduce, superbase_of

logger = logging.getLogger(__name__)

SELLING_VECTORS = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
)

MINKOWSKI_FIXED_VECTORS = SELLING_VECTORS + ((1, -1, 0), (1, 0, -1), (0, 1, -1))

# each group contributes the minimum over its vectors
MINKOWSKI_ALTERNATIVES = (
    ((-1, 1, 1), (2, 1, 1)),
    ((1, 1, -1), (1, 1, 2)),
    ((1, -1, 1), (1, 2, 1), (-2, -1, 1), (1, -1, -2)),
)


def selling_values(reduced: SymMat3):
    """(f1, f2) of a Selling-reduced form, both sorted"""
    f1 = sorted(reduced.quad(v) for v in SELLING_VECTORS)
    f2 = sorted(-x for x in superbase_of(reduced).off_diagonal())
    return f1, f2


def minkowski_values(reduced: SymMat3):
    """The 13 values of a Minkowski-reduced form, sorted"""
    values = [reduced.quad(v) for v in MINKOWSKI_FIXED_VECTORS]
    values.extend(min(reduced.quad(v) for v in group) for group in MINKOWSKI_ALTERNATIVES)
    return sorted(values)


def iota_s(gram: SymMat3) -> Embedding13:
    require_positive_definite(gram)
    f1, f2 = selling_values(selling_reduce(gram).reduced)
    return Embedding13(EmbeddingKind.SELLING, tuple(f1 + f2))


def iota_m(gram: SymMat3) -> Embedding13:
    require_positive_definite(gram)
    return Embedding13(EmbeddingKind.MINKOWSKI, tuple(minkowski_values(minkowski_reduce(gram).reduced)))


def normalize_scale(gram: SymMat3) -> SymMat3:
    """S / det(S)^(1/3); float mode only"""
    if is_exact():
        raise ValueError("scale normalization needs float mode (cube roots are irrational)")
    require_positive_definite(gram)
    return gram.scaled(1.0 / float(gram.det()) ** (1.0 / 3.0))


def iota(gram: SymMat3, kind=EmbeddingKind.MINKOWSKI, normalize=False) -> Embedding13:
    kind = EmbeddingKind.parse(kind)
    if normalize:
        gram = normalize_scale(gram)
    if kind is EmbeddingKind.SELLING:
        return iota_s(gram)
    return iota_m(gram)
