"""
Selling reduction for rank 2 and 3, and the reduced pair form used for rank-2 distances.
"""
import logging

from modules.core import linalg
from modules.core.lattice import apply_unimodular, require_positive_definite
from modules.core.models import SymMat2, UnimodularMat
from modules.core.numeric import get_numeric
from modules.reduction.greedy import gauss_pair, greedy_reduce, iteration_cap
from modules.reduction.models import ReductionResult, Superbase
from modules.shared.errors import NonTermination

logger = logging.getLogger(__name__)


def superbase_vectors(basis_rows):
    """Basis rows followed by minus their sum"""
    rows = [tuple(r) for r in basis_rows]
    return tuple(rows) + (linalg.neg(tuple(sum(col) for col in zip(*rows))),)


def superbase_of(gram, basis_rows=None) -> Superbase:
    vectors = superbase_vectors(basis_rows or linalg.identity(gram.n))
    tilde = tuple(tuple(gram.inner(u, v) for v in vectors) for u in vectors)
    return Superbase(vectors, tilde)


def is_selling_reduced(gram) -> bool:
    require_positive_definite(gram)
    num = get_numeric()
    return not any(num.positive(x) for x in superbase_of(gram).off_diagonal())


def _worst_pair(gram, vectors):
    """Largest positive superbase product; ties go to the smallest (i, j)"""
    num = get_numeric()
    best = None
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            value = gram.inner(vectors[i], vectors[j])
            if num.positive(value) and (best is None or value > best[0]):
                best = (value, i, j)
    return best


def selling_reduce(gram, precondition=True) -> ReductionResult:
    """
    Superbase exchange until no positive tilde_s_ij remains.

    With precondition=True the basis is first greedy-reduced, which bounds the
    number of exchanges independently of how skewed the input is.
    """
    require_positive_definite(gram)
    n = gram.n
    basis = greedy_reduce(gram).transform.rows if precondition else linalg.identity(n)
    vectors = list(superbase_vectors(basis))
    cap = iteration_cap(gram)
    steps = 0
    while True:
        worst = _worst_pair(gram, vectors)
        if worst is None:
            break
        steps += 1
        if steps > cap:
            raise NonTermination(f"Selling reduction exceeded {cap} exchanges")
        _, i, j = worst
        bi = vectors[i]
        for k in range(len(vectors)):
            if k == i or k == j:
                continue
            # rank 3: b_k + b_i for both others; rank 2: the single other gets 2 b_i
            vectors[k] = linalg.add(vectors[k], linalg.scale(2 if n == 2 else 1, bi))
        vectors[i] = linalg.neg(bi)
    logger.debug(f"Selling reduction finished after {steps} exchanges")
    g = UnimodularMat(tuple(vectors[:n]))
    return ReductionResult(apply_unimodular(g, gram), g)


def reduce_2d(gram: SymMat2) -> ReductionResult:
    """0 <= -2 s12 <= s11 <= s22"""
    require_positive_definite(gram)
    b0, b1 = gauss_pair(gram, (1, 0), (0, 1))
    if get_numeric().positive(gram.inner(b0, b1)):
        b1 = linalg.neg(b1)
    g = UnimodularMat((b0, b1))
    return ReductionResult(apply_unimodular(g, gram), g)


def is_reduced_2d(gram: SymMat2) -> bool:
    num = get_numeric()
    return (num.le(0, -2 * gram.s12) and num.le(-2 * gram.s12, gram.s11)
            and num.le(gram.s11, gram.s22))
