"""
Potential isometries between nearly equivalent reduced forms, the stable
order on lattice vectors and exact isometry search.
"""
import logging
from itertools import product

from modules.core import linalg
from modules.core.lattice import apply_unimodular, require_positive_definite
from modules.core.models import UnimodularMat
from modules.core.numeric import get_numeric
from modules.isometry.models import IsometryCandidate, PsiSets
from modules.reduction.minkowski import is_minkowski_reduced, minkowski_reduce
from modules.reduction.models import ReductionResult
from modules.reduction.selling import is_reduced_2d, reduce_2d
from modules.shared.errors import NotReduced
from modules.vonorm.enumeration import short_vectors
from modules.vonorm.vonorm import coset_minimizers, vonorm_map

logger = logging.getLogger(__name__)


def _pm(vectors):
    out = []
    for v in vectors:
        out.append(tuple(v))
        out.append(tuple(-x for x in v))
    return tuple(out)


PSI_1 = _pm([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
             (1, 0, -1), (1, 1, 1), (1, -1, -1)])
PSI_3 = PSI_1 + _pm([(1, -1, 0)])
PSI_2D = _pm([(1, 0), (0, 1), (1, 1)])


def psi_sets() -> PsiSets:
    return PsiSets(PSI_1, PSI_1, PSI_3)


def first_minimum(gram):
    """lambda_1: the smallest nonzero value of the form"""
    require_positive_definite(gram)
    return min(vonorm_map(gram, 2).values())


def stably_less(gram, v1, v2, lambda1=None) -> bool:
    """v1 << v2: the gap v2 S v2 - v1 S v1 is at least lambda_1"""
    lam = first_minimum(gram) if lambda1 is None else lambda1
    return get_numeric().le(lam, gram.quad(v2) - gram.quad(v1))


def _unit(i, n):
    return tuple(int(i == k) for k in range(n))


# ---------------------------------------------------------------------------
# Candidate enumeration
# ---------------------------------------------------------------------------

def _reduced_input(gram, auto_reduce):
    require_positive_definite(gram)
    if gram.n == 2:
        if is_reduced_2d(gram):
            return ReductionResult(gram, UnimodularMat.identity(2))
        if not auto_reduce:
            raise NotReduced(f"{gram.entries()} is not reduced")
        return reduce_2d(gram)
    if is_minkowski_reduced(gram):
        return ReductionResult(gram, UnimodularMat.identity(3))
    if not auto_reduce:
        raise NotReduced(f"{gram.entries()} is not Minkowski-reduced")
    return minkowski_reduce(gram)


def _below(value, bound, inclusive):
    num = get_numeric()
    return num.le(value, bound) if inclusive else num.lt(value, bound)


def admissible_rows(reduced, inclusive=False):
    """Per row j: mod-3 Voronoi vectors (and negatives) with norm below lambda_j + lambda_1"""
    minima = coset_minimizers(reduced, 3)
    witnesses = sorted({w for _, found in minima.values() for x in found for w in (x, linalg.neg(x))})
    lam = reduced.diagonal()
    return [[w for w in witnesses if _below(reduced.quad(w), lam[j] + lam[0], inclusive)] for j in range(3)]


def candidate_isometries(gram, auto_reduce=True, inclusive=False) -> list:
    """
    All g in GL_3(Z) whose rows are admissible short vectors and whose inverse
    has every row in PSI_3. For a non-reduced input the candidates are composed
    with the reducing transform, so they still act on the form as given.
    """
    reduction = _reduced_input(gram, auto_reduce)
    rows = admissible_rows(reduction.reduced, inclusive)
    psi3 = frozenset(PSI_3)
    found = []
    for g_rows in product(*rows):
        if linalg.det(g_rows) not in (1, -1):
            continue
        inverse = linalg.inverse(g_rows)
        if all(tuple(row) in psi3 for row in inverse):
            found.append(UnimodularMat(g_rows) @ reduction.transform)
    found.sort(key=UnimodularMat.flattened)
    logger.debug(f"{len(found)} candidates from row pools of sizes {[len(r) for r in rows]}")
    return found


def candidate_isometries_2d(gram, auto_reduce=True, inclusive=False) -> list:
    """Rank-2 candidates: rows in {+-e1, +-e2, +-(e1+e2)} below lambda_j + lambda_1"""
    reduction = _reduced_input(gram, auto_reduce)
    reduced = reduction.reduced
    lam = reduced.diagonal()
    pool = [v for _, v in short_vectors(reduced, lam[1] + lam[0]) if v in PSI_2D]
    rows = [[v for v in pool if _below(reduced.quad(v), lam[j] + lam[0], inclusive)] for j in range(2)]
    found = [UnimodularMat(g_rows) @ reduction.transform
             for g_rows in product(*rows) if linalg.det(g_rows) in (1, -1)]
    found.sort(key=UnimodularMat.flattened)
    return found


# ---------------------------------------------------------------------------
# Exact search
# ---------------------------------------------------------------------------

def exact_isometries(gram1, gram2) -> list:
    """All g with g S1 g^T = S2, by backtracking over vectors of matching norms and inner products"""
    if gram1.n != gram2.n:
        return []
    num = get_numeric()
    first = _reduced_input(gram1, True)
    second = _reduced_input(gram2, True)
    r1, r2 = first.reduced, second.reduced
    if not num.eq(r1.det(), r2.det()):
        return []
    n = r1.n
    target = r2.diagonal()
    vectors = short_vectors(r1, max(target))
    pools = [[v for value, v in vectors if num.eq(value, target[i])] for i in range(n)]

    results = []
    chosen = []

    def extend(i):
        if i == n:
            if linalg.det(chosen) in (1, -1):
                results.append(tuple(chosen))
            return
        for v in pools[i]:
            if all(num.eq(r1.inner(v, chosen[j]), r2.entry(j, i)) for j in range(i)):
                chosen.append(v)
                extend(i + 1)
                chosen.pop()

    extend(0)
    back = second.transform.inverse()
    found = sorted((back @ UnimodularMat(rows) @ first.transform for rows in results), key=UnimodularMat.flattened)
    logger.debug(f"Exact search found {len(found)} isometries")
    return found


# ---------------------------------------------------------------------------
# Matching observed forms
# ---------------------------------------------------------------------------

def satisfies_near_equivalence(g, reduced1, reduced2) -> bool:
    """Neither e_i << g_i under S1 nor e_i << (g^-1)_i under S2, for every i"""
    inverse = g.inverse()
    lam1, lam2 = reduced1.s11, reduced2.s11
    for i in range(g.n):
        e = _unit(i, g.n)
        if stably_less(reduced1, e, g.rows[i], lam1) or stably_less(reduced2, e, inverse.rows[i], lam2):
            return False
    return True


def rank_isometries(t1obs, t2obs, tol=None, inclusive=False) -> list:
    """Candidates passing the near-equivalence filter, sorted by residual ||g T1 g^T - T2||_inf"""
    num = get_numeric()
    first = minkowski_reduce(t1obs)
    second = minkowski_reduce(t2obs)
    back = second.transform.inverse()
    ranked = []
    for g in candidate_isometries(first.reduced, auto_reduce=False, inclusive=inclusive):
        if not satisfies_near_equivalence(g, first.reduced, second.reduced):
            continue
        full = back @ g @ first.transform
        residual = (apply_unimodular(full, t1obs) - t2obs).max_abs()
        if tol is not None and not num.le(residual, tol):
            continue
        ranked.append(IsometryCandidate(full, residual, num.is_zero(residual)))
    ranked.sort(key=lambda c: (c.residual, c.g.flattened()))
    return ranked


def match_isometry(t1obs, t2obs, tol, inclusive=False):
    """Best candidate within tol, or None"""
    ranked = rank_isometries(t1obs, t2obs, tol=tol, inclusive=inclusive)
    if not ranked:
        logger.info(f"⚠️ No isometry within tolerance {tol}")
        return None
    return ranked[0]


# ---------------------------------------------------------------------------
# Growth of the stable order
# ---------------------------------------------------------------------------

def multiple_growth_failures(gram, vectors, multipliers=(2, 3, -2)) -> list:
    """Pairs (v, m) where v << m v fails for a nonzero v"""
    lam = first_minimum(gram)
    return [(v, m) for v in vectors if any(v) for m in multipliers
            if not stably_less(gram, v, linalg.scale(m, v), lam)]


def _box(n, radius):
    return [v for v in product(range(-radius, radius + 1), repeat=n) if any(v)]


def stable_growth_failures_2d(gram, radius=5) -> list:
    """For a reduced binary form: v outside the lines of e1, e2 (and not +-(e1+e2)) must satisfy e_i << v"""
    lam = first_minimum(gram)
    failures = []
    for v in _box(2, radius):
        if v[0] == 0 or v[1] == 0 or v in ((1, 1), (-1, -1)):
            continue
        for i in range(2):
            if not stably_less(gram, _unit(i, 2), v, lam):
                failures.append((i, v))
    return failures


def stable_growth_failures_3d(gram, radius=4) -> list:
    """
    For a Selling-reduced ternary form and v outside every plane spanned by two
    superbase vectors: e_i << v for all four superbase vectors, and
    e_i + e_j << v for at least two of the pairs (1,2), (1,3), (2,3).
    """
    lam = first_minimum(gram)
    superbase = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    pairs = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    failures = []
    for v in _box(3, radius):
        if len({v[0], v[1], v[2], 0}) < 4:
            continue
        for e in superbase:
            if not stably_less(gram, e, v, lam):
                failures.append(('superbase', e, v))
        if sum(1 for p in pairs if stably_less(gram, p, v, lam)) < 2:
            failures.append(('pairs', None, v))
    return failures
