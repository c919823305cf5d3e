"""
Fincke-Pohst enumeration of short lattice vectors.

Coordinate ranges are computed in floating point with one unit of slack on
each side; every pruning decision is then made in the active number context,
so the enumeration is exact whenever the mode is.
"""
import logging
import math

from modules.core.lattice import require_positive_definite
from modules.core.numeric import get_numeric

logger = logging.getLogger(__name__)


def _pohst_coefficients(gram):
    """q_ii and q_ij (j > i) with v S v^T = sum_i q_ii (v_i + sum_{j>i} q_ij v_j)^2"""
    n = gram.n
    q = [list(row) for row in gram.rows]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def short_vectors(gram, bound, include_zero=False):
    """All integer vectors v with v S v^T <= bound, as (value, v) pairs in enumeration order"""
    require_positive_definite(gram)
    num = get_numeric()
    n = gram.n
    q = _pohst_coefficients(gram)
    found = []
    x = [0] * n

    def search(i, partial):
        center = -sum(q[i][j] * x[j] for j in range(i + 1, n))
        remaining = bound - partial
        radius = math.sqrt(max(float(remaining), 0.0) / float(q[i][i]))
        c = float(center)
        for xi in range(math.floor(c - radius) - 1, math.ceil(c + radius) + 2):
            t = xi - center
            value = partial + q[i][i] * t * t
            if not num.le(value, bound):
                continue
            x[i] = xi
            if i == 0:
                if include_zero or any(x):
                    found.append((gram.quad(x), tuple(x)))
            else:
                search(i - 1, value)
        x[i] = 0

    search(n - 1, 0)
    logger.debug(f"Enumerated {len(found)} vectors with norm <= {bound}")
    return found
