"""
Vonorm maps modulo r, conorms and Voronoi vectors modulo r.

All coset minimisations run in a Selling-reduced frame: a coset u + rZ^n of
the input corresponds to the coset u g^-1 + rZ^n of the reduced form, and the
centred representative of that coset bounds the enumeration.
"""
import logging
from fractions import Fraction
from itertools import product

from modules.core.lattice import require_positive_definite
from modules.core.numeric import get_numeric, is_exact
from modules.reduction.selling import selling_reduce
from modules.shared.errors import InternalAssertion
from modules.vonorm.enumeration import short_vectors
from modules.vonorm.models import CosetClass, PhiSet, VonormEntry, VonormTable, coset_classes

logger = logging.getLogger(__name__)


def _centered(v, r):
    out = []
    for x in v:
        c = x % r
        if 2 * c > r:
            c -= r
        out.append(c)
    return tuple(out)


def _reduced_frame(gram):
    result = selling_reduce(gram)
    return result.reduced, result.transform, result.transform.inverse()


def _canonical_witness(vectors):
    """Lexicographically smallest minimiser whose first nonzero coordinate is positive"""
    return min(v for v in vectors if next(x for x in v if x) > 0)


def coset_minimizers(gram, r, classes=None):
    """{CosetClass: (minimum, [all minimisers])} for the requested classes"""
    require_positive_definite(gram)
    num = get_numeric()
    classes = list(classes) if classes is not None else coset_classes(gram.n, r)
    wanted = set(classes)
    reduced, g, g_inv = _reduced_frame(gram)
    bound = max(reduced.quad(_centered(g_inv.act(c.representative), r)) for c in classes)
    minima = {}
    for value, w_reduced in short_vectors(reduced, bound):
        w = g.act(w_reduced)
        if all(x % r == 0 for x in w):
            continue
        cls = CosetClass.of(w, r)
        if cls not in wanted:
            continue
        current = minima.get(cls)
        if current is None or num.lt(value, current[0]):
            minima[cls] = [value, [w]]
        elif num.eq(value, current[0]):
            current[1].append(w)
    missing = wanted - set(minima)
    if missing:
        raise InternalAssertion(f"enumeration bound {bound} missed cosets {sorted(missing)}")
    return {cls: (minima[cls][0], sorted(minima[cls][1])) for cls in classes}


def shortest_in_coset(gram, u, r):
    """Minimum of w S w^T over w in u + rZ^n (no sign identification) and the smallest minimiser"""
    require_positive_definite(gram)
    if all(x % r == 0 for x in u):
        raise ValueError(f"{tuple(u)} lies in {r}Z^n")
    num = get_numeric()
    target = CosetClass.of(u, r, identified_with_negation=False)
    reduced, g, g_inv = _reduced_frame(gram)
    bound = reduced.quad(_centered(g_inv.act(u), r))
    best_value, best = None, []
    for value, w_reduced in short_vectors(reduced, bound):
        w = g.act(w_reduced)
        if all(x % r == 0 for x in w) or CosetClass.of(w, r, identified_with_negation=False) != target:
            continue
        if best_value is None or num.lt(value, best_value):
            best_value, best = value, [w]
        elif num.eq(value, best_value):
            best.append(w)
    return best_value, min(best)


def vonorm_map(gram, r) -> VonormTable:
    if r < 2:
        raise ValueError("modulus must be at least 2")
    minima = coset_minimizers(gram, r)
    entries = {cls: VonormEntry(value, _canonical_witness(vectors)) for cls, (value, vectors) in minima.items()}
    return VonormTable(r, gram.n, entries)


def conorm_map(gram):
    """co(a) = -1/2^(n-1) sum_v vo(v) (-1)^(a.v) over the characters a of (Z/2Z)^n"""
    table = vonorm_map(gram, 2)
    n = gram.n
    factor = Fraction(-1, 2 ** (n - 1)) if is_exact() else -1.0 / 2 ** (n - 1)
    cosets = [v for v in product((0, 1), repeat=n) if any(v)]
    conorms = {}
    for a in product((0, 1), repeat=n):
        total = sum(table.value_of(v) * (-1) ** sum(x * y for x, y in zip(a, v)) for v in cosets)
        conorms[a] = factor * total
    return conorms


def nontrivial_characters(n):
    """Characters not constant on the basis; n = 3 gives the six conorm positions"""
    return [a for a in product((0, 1), repeat=n) if len(set(a)) > 1 or (n == 2 and any(a))]


def voronoi_vectors(gram, r) -> PhiSet:
    minima = coset_minimizers(gram, r)
    vectors = {v for _, found in minima.values() for v in found}
    return PhiSet(frozenset(vectors), r)


def general_position_count(n, r):
    return r ** n + 2 ** n - 2 if r % 2 == 0 else r ** n - 1


def is_general_position(gram, r) -> bool:
    return len(voronoi_vectors(gram, r)) == general_position_count(gram.n, r)


def selling_conorms(gram):
    """Conorms at the nontrivial characters; for a Selling-reduced form these are the -tilde_s_ij"""
    conorms = conorm_map(gram)
    return [conorms[a] for a in nontrivial_characters(gram.n)]
