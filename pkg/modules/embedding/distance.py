"""
Metrics on fingerprints and the two classical distance algorithms:
vonorm tables minimised over GL_n(Z/2Z) and the rank-2 three-value comparison.
"""
import logging
from functools import lru_cache
from itertools import product

from modules.core import linalg
from modules.core.lattice import require_positive_definite
from modules.core.numeric import get_numeric
from modules.embedding.embedding import iota
from modules.embedding.models import EmbeddingKind, MetricKind
from modules.reduction.selling import reduce_2d
from modules.shared.errors import KindMismatch
from modules.vonorm.vonorm import vonorm_map

logger = logging.getLogger(__name__)


def vector_distance(a, b, metric=MetricKind.LINF):
    metric = MetricKind.parse(metric)
    diffs = [abs(x - y) for x, y in zip(a, b)]
    if metric is MetricKind.L1:
        return sum(diffs)
    if metric is MetricKind.LINF:
        return max(diffs) if diffs else 0
    return get_numeric().sqrt(sum(d * d for d in diffs))


def embed_distance(e1, e2, metric=MetricKind.LINF):
    if e1.kind != e2.kind:
        raise KindMismatch(f"cannot compare a {e1.kind.name} fingerprint with a {e2.kind.name} one")
    return vector_distance(e1.values, e2.values, metric)


def lattice_distance(gram1, gram2, metric=MetricKind.LINF, kind=EmbeddingKind.MINKOWSKI, normalize=False):
    return embed_distance(iota(gram1, kind, normalize), iota(gram2, kind, normalize), metric)


@lru_cache(maxsize=None)
def gl_mod2(n):
    """All invertible n x n matrices over Z/2Z, as tuples of rows"""
    result = []
    for entries in product((0, 1), repeat=n * n):
        rows = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if linalg.det(rows) % 2:
            result.append(rows)
    return tuple(result)


def _nonzero_mod2(n):
    return [v for v in product((0, 1), repeat=n) if any(v)]


def vonorm_distance_generic(gram1, gram2, metric=MetricKind.LINF, n=None):
    """min over g in GL_n(Z/2Z) of d(vo_1, g.vo_2) with (g.vo)(v) = vo(v g)"""
    require_positive_definite(gram1)
    require_positive_definite(gram2)
    n = n or gram1.n
    if gram1.n != n or gram2.n != n:
        raise ValueError(f"both forms must have rank {n}")
    vo1, vo2 = vonorm_map(gram1, 2), vonorm_map(gram2, 2)
    cosets = _nonzero_mod2(n)
    left = [vo1.value_of(v) for v in cosets]
    best = None
    for g in gl_mod2(n):
        right = [vo2.value_of(tuple(x % 2 for x in linalg.vec_mat(v, g))) for v in cosets]
        d = vector_distance(left, right, metric)
        if best is None or d < best:
            best = d
    logger.debug(f"Generic vonorm distance minimised over {len(gl_mod2(n))} matrices")
    return best


def rank2_values(gram):
    """(s11, s22, s11 + s22 + 2 s12) of the reduced rank-2 form; already sorted"""
    reduced = reduce_2d(gram).reduced
    return (reduced.s11, reduced.s22, reduced.s11 + reduced.s22 + 2 * reduced.s12)


def rank2_distance(gram1, gram2, metric=MetricKind.LINF):
    return vector_distance(rank2_values(gram1), rank2_values(gram2), metric)
