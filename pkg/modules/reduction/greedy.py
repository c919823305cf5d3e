"""
Greedy (Lagrange-Gauss generalised) lattice basis reduction in Gram coordinates.

For rank <= 3 the greedy output is Minkowski-reduced: sort the basis, reduce
the first two vectors, subtract from the last vector the closest vector of
their span, and repeat while the last vector keeps getting shorter.
"""
import logging
import math
from fractions import Fraction

from modules.core import linalg
from modules.core.lattice import apply_unimodular, require_positive_definite
from modules.core.models import UnimodularMat
from modules.core.numeric import get_numeric
from modules.reduction.models import ReductionResult
from modules.shared.errors import NonTermination

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def bit_size(gram):
    total = 0
    for x in gram.entries():
        if isinstance(x, Fraction):
            total += x.numerator.bit_length() + x.denominator.bit_length()
        else:
            total += 64
    return total


def iteration_cap(gram):
    return 10 * bit_size(gram) + 64


def gauss_pair(gram, b0, b1, max_steps=None):
    """Lagrange-Gauss reduction of the pair (b0, b1): |2 b0.b1| <= |b0|^2 <= |b1|^2"""
    num = get_numeric()
    max_steps = max_steps or iteration_cap(gram)
    q0, q1 = gram.quad(b0), gram.quad(b1)
    for _ in range(max_steps):
        if num.lt(q1, q0):
            b0, b1, q0, q1 = b1, b0, q1, q0
        ip = gram.inner(b0, b1)
        if num.le(2 * abs(ip), q0):
            return b0, b1
        k = math.floor(ip / q0 + HALF)
        b1 = linalg.sub(b1, linalg.scale(k, b0))
        q1 = gram.quad(b1)
    raise NonTermination(f"Gauss reduction did not converge in {max_steps} steps")


def closest_in_span(gram, b0, b1, target):
    """
    Exact closest vector to target in Z b0 + Z b1 for a Gauss-reduced pair.
    Returns (coefficients, target - closest).
    """
    num = get_numeric()
    g00, g11, g01 = gram.quad(b0), gram.quad(b1), gram.inner(b0, b1)
    r0, r1 = gram.inner(target, b0), gram.inner(target, b1)
    d = g00 * g11 - g01 * g01
    x = (g11 * r0 - g01 * r1) / d
    y = (g00 * r1 - g01 * r0) / d
    # on a Gauss-reduced pair the optimum lies within distance 1 of (x, y)
    best = None
    for i in range(math.floor(x) - 1, math.floor(x) + 3):
        for j in range(math.floor(y) - 1, math.floor(y) + 3):
            residual = linalg.sub(target, linalg.add(linalg.scale(i, b0), linalg.scale(j, b1)))
            value = gram.quad(residual)
            if best is None or num.lt(value, best[0]):
                best = (value, (i, j), residual)
    return best[1], best[2]


def greedy_reduce(gram, basis=None) -> ReductionResult:
    require_positive_definite(gram)
    num = get_numeric()
    n = gram.n
    rows = list(basis.rows if basis is not None else linalg.identity(n))
    cap = iteration_cap(gram)
    if n == 2:
        rows = list(gauss_pair(gram, rows[0], rows[1], cap))
    else:
        for step in range(cap):
            rows.sort(key=gram.quad)
            rows[0], rows[1] = gauss_pair(gram, rows[0], rows[1], cap)
            _, rows[2] = closest_in_span(gram, rows[0], rows[1], rows[2])
            if not num.lt(gram.quad(rows[2]), gram.quad(rows[1])):
                break
        else:
            raise NonTermination(f"greedy reduction did not converge in {cap} rounds")
        logger.debug(f"Greedy reduction finished after {step + 1} rounds")
    g = UnimodularMat(tuple(rows))
    return ReductionResult(apply_unimodular(g, gram), g)
