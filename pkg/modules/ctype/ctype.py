"""
Primitive C-type domains modulo r: candidate inequalities, exact facets,
neighbouring Voronoi vector sets, GL_n(Z)-equivalence and the breadth-first
enumeration of representatives.
"""
import logging
from collections import deque
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations, product
from math import gcd, lcm

import cdd
import numpy as np

from modules.core import linalg
from modules.core.lattice import is_positive_definite
from modules.core.models import SymMat2, SymMat3, UnimodularMat, sym_from_entries
from modules.core.numeric import EXACT, numeric_mode
from modules.ctype.models import ConeInequality, CTypeDomain
from modules.shared.errors import DegenerateCone, InternalAssertion, RetryExhausted, UnsupportedParameters
from modules.vonorm.models import PhiSet
from modules.vonorm.vonorm import coset_minimizers, general_position_count, voronoi_vectors

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (2, 3)
SUPPORTED_MODULI = (2, 3, 4)
MAX_PERTURBATION_RETRIES = 50


# ---------------------------------------------------------------------------
# Initial domain
# ---------------------------------------------------------------------------

def _identity_phi(n, r):
    """Phi_{I_n, r}: nonzero vectors with |x_i| <= r/2"""
    half = r // 2
    return [v for v in product(range(-half, half + 1), repeat=n) if any(v)]


def _colliding_pairs(n, r):
    """Pairs u != +-v of Phi_{I,r} lying in the same class of Z^n / rZ^n up to sign"""
    vectors = _identity_phi(n, r)
    pairs = []
    for u, v in combinations(vectors, 2):
        if u == tuple(-x for x in v):
            continue
        if all((a - b) % r == 0 for a, b in zip(u, v)) or all((a + b) % r == 0 for a, b in zip(u, v)):
            pairs.append((u, v))
    return pairs


def _separates(t, pairs):
    """trace((u^T u - v^T v) T) != 0 on every colliding pair"""
    return all(linalg.dot(u, linalg.vec_mat(u, t)) != linalg.dot(v, linalg.vec_mat(v, t)) for u, v in pairs)


def _perturbed_identity(t, n, r):
    t_max = max(abs(x) for row in t for x in row) or 1
    eps = Fraction(1, 4 * t_max * n * (n * r * r + 4))
    rows = [[(1 if i == j else 0) + eps * t[i][j] for j in range(n)] for i in range(n)]
    return (SymMat2 if n == 2 else SymMat3).from_matrix(rows)


def _perturbation_directions(n, seed):
    yield tuple(tuple(0 if i == j else -1 for j in range(n)) for i in range(n))
    rng = np.random.default_rng(seed)
    while True:
        m = rng.integers(-3, 4, size=(n, n))
        m = m + m.T
        yield tuple(tuple(int(x) for x in row) for row in m)


def initial_phi(n, r, seed=0) -> PhiSet:
    """A Voronoi vector set in general position next to the identity form"""
    _check_supported(n, r, moduli=None)
    if r % 2:
        return PhiSet(frozenset(_identity_phi(n, r)), r)
    pairs = _colliding_pairs(n, r)
    target = general_position_count(n, r)
    with numeric_mode(EXACT):
        for attempt, t in enumerate(_perturbation_directions(n, seed)):
            if attempt >= MAX_PERTURBATION_RETRIES:
                break
            if not _separates(t, pairs):
                continue
            phi = voronoi_vectors(_perturbed_identity(t, n, r), r)
            if len(phi) == target:
                logger.debug(f"Initial domain for n={n}, r={r} found on attempt {attempt + 1}")
                return phi
    raise RetryExhausted(f"no general-position perturbation found for n={n}, r={r}")


# ---------------------------------------------------------------------------
# Inequalities and facets
# ---------------------------------------------------------------------------

def ctype_inequalities(phi: PhiSet, r) -> list:
    """Candidate half-spaces v S v^T >= u S u^T with v = u + r w"""
    vectors = phi.sorted_vectors()
    members = phi.vectors
    out, seen = [], set()
    for u in vectors:
        for w in vectors:
            if linalg.rank((u, w)) < 2:
                continue
            v = linalg.add(u, linalg.scale(r, w))
            s = linalg.add(u, v)
            if r % 2 == 0:
                s = tuple(x // 2 for x in s)
            if not linalg.is_primitive(s):
                continue
            needed = [linalg.scale(k, w) for k in range(1, r // 2 + 1)]
            needed += [linalg.add(u, linalg.scale(k, w)) for k in range(1, r)]
            if not all(x in members for x in needed):
                continue
            ineq = ConeInequality.from_pair(u, v)
            if ineq.coeff in seen:
                continue
            seen.add(ineq.coeff)
            out.append(ineq)
    logger.debug(f"{len(out)} candidate inequalities for a {len(phi)}-vector set mod {r}")
    return out


def merge_parallel(ineqs):
    """Drop zero rows and positive multiples, keeping the first occurrence"""
    merged = {}
    for ineq in ineqs:
        if ineq.is_zero():
            continue
        merged.setdefault(ineq.direction(), ineq)
    return list(merged.values())


def _integral_direction(x):
    den = reduce(lcm, (Fraction(c).denominator for c in x), 1)
    ints = [int(c * den) for c in x]
    g = reduce(gcd, (abs(c) for c in ints), 0) or 1
    return tuple(c // g for c in ints)


def _cone_matrix(ineqs, equalities=()):
    """cdd H-representation [0 | f] of the cone f(x) >= 0, rows in `equalities` held at 0"""
    mat = cdd.Matrix([[0] + list(ineq.functional()) for ineq in ineqs], number_type='fraction')
    if equalities:
        mat.lin_set = frozenset(equalities)
    mat.rep_type = cdd.RepType.INEQUALITY
    return mat


def _canonical_rows(ineqs):
    """(implicit equalities, redundant rows) of the cone, as indices into ineqs"""
    linearities, redundant = _cone_matrix(ineqs).canonicalize()
    return set(linearities), set(redundant)


def _ray_sum(mat):
    """Sum of the extreme rays of a cone, or None when it has none; lineality lines are skipped"""
    generators = cdd.Polyhedron(mat).get_generators()
    total = None
    for i in range(generators.row_size):
        row = generators[i]
        if row[0] != 0 or i in generators.lin_set:
            continue
        ray = [Fraction(x) for x in row[1:]]
        total = ray if total is None else [a + b for a, b in zip(total, ray)]
    return total


def _positive_definite_witness(x, what):
    with numeric_mode(EXACT):
        gram = sym_from_entries(_integral_direction(x))
        if not is_positive_definite(gram):
            raise DegenerateCone(f"{what} {gram.entries()} is not positive-definite")
    return gram


def is_facet(ineq, others):
    rows = [ineq] + merge_parallel(o for o in others if o.direction() != ineq.direction())
    linearities, redundant = _canonical_rows(rows)
    return not linearities and 0 not in redundant


def facets(ineqs) -> list:
    """Irredundant inequalities of the cone; exact"""
    candidates = merge_parallel(ineqs)
    if len(candidates) <= 1:
        return candidates
    linearities, redundant = _canonical_rows(candidates)
    if linearities:
        raise DegenerateCone("cone is not full-dimensional")
    result = [ineq for k, ineq in enumerate(candidates) if k not in redundant]
    logger.debug(f"{len(result)} facets out of {len(candidates)} merged inequalities")
    return result


def interior_point(ineqs):
    """Positive-definite Gram matrix strictly inside every inequality: the sum of the extreme rays"""
    candidates = merge_parallel(ineqs)
    if not candidates:
        raise DegenerateCone("no inequalities to bound the cone")
    linearities, _ = _canonical_rows(candidates)
    if linearities:
        raise DegenerateCone("cone is not full-dimensional")
    x = _ray_sum(_cone_matrix(candidates))
    if x is None:
        raise DegenerateCone("cone has no extreme rays")
    return _positive_definite_witness(x, 'interior witness')


def facet_point(facet, ineqs):
    """Positive-definite form on the facet, strictly inside every other inequality"""
    others = [c for c in merge_parallel(ineqs) if c.direction() != facet.direction()]
    x = _ray_sum(_cone_matrix([facet] + others, equalities=(0,)))
    if x is None:
        raise DegenerateCone(f"facet {facet.u} -> {facet.v} has no extreme rays")
    return _positive_definite_witness(x, 'facet witness')


# ---------------------------------------------------------------------------
# Neighbours
# ---------------------------------------------------------------------------

def neighbor_across(phi: PhiSet, facet, ineqs, r) -> PhiSet:
    """
    Set of the domain on the other side of facet. On the facet every coset whose
    minimum changes has exactly two tied minimisers (up to sign); moving off the
    facet against its inequality keeps the one with the larger trace(C w^T w).
    """
    point = facet_point(facet, ineqs)
    with numeric_mode(EXACT):
        minima = coset_minimizers(point, r)
    kept = []
    for _, tied in minima.values():
        best = max(facet.pairing(w) for w in tied)
        kept.extend(w for w in tied if facet.pairing(w) == best)
    neighbor = PhiSet.from_pairs(kept, r)
    if len(neighbor) != len(phi):
        raise InternalAssertion(f"crossing {facet.u} -> {facet.v} gave {len(neighbor)} vectors, expected {len(phi)}")
    return neighbor


def neighbor_phi(phi: PhiSet, u, v, r) -> PhiSet:
    """Set across the facet (u, v) by the swap rule"""
    if len(u) <= 3:
        return phi.swapped([u], [v])
    return replacement_neighbor_phi(phi, u, v, r)


def _coordinates(x, p, q):
    """(a, b) with x = a p + b q, or None when x is outside the span"""
    n = len(x)
    for i, j in combinations(range(n), 2):
        d = p[i] * q[j] - p[j] * q[i]
        if d:
            a = (x[i] * q[j] - x[j] * q[i]) / d
            b = (p[i] * x[j] - p[j] * x[i]) / d
            if all(a * p[k] + b * q[k] == x[k] for k in range(n)):
                return a, b
            return None
    return None


def _replace(x, p, q, r):
    coords = _coordinates(x, p, q)
    if coords is None:
        return x
    a, b = coords
    flipped = tuple(int(c) for c in (linalg.sub(linalg.scale(a, p), linalg.scale(b, q))))
    # k p + q -> k p - q (and the negative)
    if abs(b) == 1 and a * b > 0 and (a * b).denominator == 1:
        return flipped
    second = Fraction(r, 2) if r % 2 == 0 else Fraction(r)
    # (2k/r) q + (r/2) p -> (2k/r) q - (r/2) p for even r; (k/r) q + r p -> (k/r) q - r p for odd r
    if abs(a) == second and a * b > 0:
        k = abs(b) * r / (2 if r % 2 == 0 else 1)
        if k.denominator == 1:
            return tuple(int(c) for c in linalg.add(linalg.scale(-a, p), linalg.scale(b, q)))
    return x


def replacement_neighbor_phi(phi: PhiSet, u, v, r) -> PhiSet:
    """Neighbour built from the general replacement rules; valid in any dimension"""
    p = tuple(Fraction(a + b, 2) for a, b in zip(u, v))
    q = tuple(Fraction(a - b, 2) for a, b in zip(u, v))
    return PhiSet(frozenset(_replace(x, p, q, r) for x in phi.vectors), phi.modulus)


# ---------------------------------------------------------------------------
# Equivalence
# ---------------------------------------------------------------------------

def canonical_form(phi: PhiSet):
    """Lexicographically smallest sorted vector list over signed permutations"""
    n = phi.n
    best = None
    for g in UnimodularMat.signed_permutations(n):
        image = tuple(sorted(g.act(v) for v in phi.vectors))
        if best is None or image < best:
            best = image
    return best


def additive_signature(phi: PhiSet):
    """GL_n(Z)-invariant: size and number of ordered pairs whose sum stays in the set"""
    members = phi.vectors
    return len(members), sum(1 for x in members for y in members if linalg.add(x, y) in members)


def phi_equivalent(phi1: PhiSet, phi2: PhiSet):
    """h in GL_n(Z) with {v h : v in phi1} = phi2, or None"""
    if len(phi1) != len(phi2) or phi1.n != phi2.n:
        return None
    n = phi1.n
    source = phi1.sorted_vectors()
    basis = next((c for c in combinations(source, n) if abs(linalg.det(c)) == 1), None)
    if basis is None:
        basis = next((c for c in combinations(source, n) if linalg.det(c) != 0), None)
        if basis is None:
            return None
    d = abs(linalg.det(basis))
    basis_inv = linalg.inverse(basis)
    members = phi2.vectors
    for image in permutations(phi2.sorted_vectors(), n):
        if abs(linalg.det(image)) != d:
            continue
        h = linalg.mat_mul(basis_inv, image)
        if not all(linalg.is_integral(row) for row in h):
            continue
        h = tuple(tuple(int(x) for x in row) for row in h)
        if linalg.det(h) not in (1, -1):
            continue
        if all(linalg.vec_mat(v, h) in members for v in source):
            return UnimodularMat(h)
    return None


# ---------------------------------------------------------------------------
# Facet properties
# ---------------------------------------------------------------------------

def _pm(vectors):
    out = set()
    for v in vectors:
        v = tuple(int(x) for x in v)
        out.add(v)
        out.add(tuple(-x for x in v))
    return out


def facet_property_failures(phi: PhiSet, neighbor: PhiSet, u, v, r) -> list:
    """Violations of the facet/parallelogram-law properties for the crossing (u, v)"""
    failures = []
    diff = linalg.sub(u, v)
    if any(x % r for x in diff):
        failures.append(f"(u-v)/r not integral for u={u}, v={v}")
        return failures
    d = tuple(x // r for x in diff)
    if not linalg.is_primitive(d):
        failures.append(f"(u-v)/r = {d} not primitive")

    expected = [linalg.scale(c, d) for c in range(1, r // 2 + 1)]
    for c in range(1, r):
        w = linalg.add(linalg.scale(c, u), linalg.scale(r - c, v))
        if any(x % r for x in w):
            failures.append(f"({c}u + {r - c}v)/r not integral")
            continue
        expected.append(tuple(x // r for x in w))
    union = phi.vectors | neighbor.vectors
    missing = sorted(x for x in _pm(expected) if x not in union)
    if missing:
        failures.append(f"vectors {missing} missing from both sets")

    if r in (2, 3):
        if phi.vectors - neighbor.vectors != _pm([u]):
            failures.append(f"removed vectors differ from +-{u}")
        if neighbor.vectors - phi.vectors != _pm([v]):
            failures.append(f"added vectors differ from +-{v}")
        common = {x for x in phi.vectors & neighbor.vectors if linalg.rank((u, v, x)) <= 2}
        if r == 2:
            pattern = _pm([[(a + b) // 2 for a, b in zip(u, v)], [(a - b) // 2 for a, b in zip(u, v)]])
        else:
            pattern = _pm([d, [(2 * a + b) // 3 for a, b in zip(u, v)], [(a + 2 * b) // 3 for a, b in zip(u, v)]])
        if common != pattern:
            failures.append(f"span intersection {sorted(common)} differs from {sorted(pattern)}")
    return failures


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _check_supported(n, r, moduli=SUPPORTED_MODULI):
    if n not in SUPPORTED_DIMENSIONS:
        raise UnsupportedParameters(f"dimension {n} is not supported (use 2 or 3)")
    if r < 2 or (moduli is not None and r not in moduli):
        raise UnsupportedParameters(f"modulus {r} is not supported (use one of {SUPPORTED_MODULI})")


class _ClassIndex:
    """Known classes with cheap invariants in front of the full equivalence search"""

    def __init__(self):
        self.phis, self.keys, self.signatures = [], [], []

    def __len__(self):
        return len(self.phis)

    def find(self, phi):
        key = canonical_form(phi)
        for idx, known in enumerate(self.keys):
            if known == key:
                return idx, key
        signature = additive_signature(phi)
        for idx, known in enumerate(self.phis):
            if self.signatures[idx] == signature and phi_equivalent(known, phi) is not None:
                return idx, key
        return None, key

    def add(self, phi, key):
        self.phis.append(phi)
        self.keys.append(key)
        self.signatures.append(additive_signature(phi))
        return len(self.phis) - 1


def enumerate_ctype_reps(n, r, progress=None) -> list:
    """Representatives of primitive C-type domains modulo r, in canonical order"""
    _check_supported(n, r)
    index = _ClassIndex()
    start = initial_phi(n, r)
    index.add(start, canonical_form(start))
    queue = deque([0])
    found = {}
    while queue:
        idx = queue.popleft()
        phi = index.phis[idx]
        ineqs = ctype_inequalities(phi, r)
        interior = interior_point(ineqs)
        facet_list = facets(ineqs)
        neighbors = []
        for facet in facet_list:
            neighbor = neighbor_across(phi, facet, ineqs, r)
            j, key = index.find(neighbor)
            if j is None:
                j = index.add(neighbor, key)
                queue.append(j)
                logger.info(f"✅ New class #{j} ({len(neighbor)} vectors) found across facet {facet.u} -> {facet.v}")
            neighbors.append(j)
        found[idx] = (tuple(facet_list), interior, tuple(neighbors))
        if progress is not None:
            progress(len(found), len(index))
    order = sorted(range(len(index)), key=lambda i: (len(index.phis[i]), index.keys[i]))
    position = {old: new for new, old in enumerate(order)}
    domains = []
    for old in order:
        facet_list, interior, neighbors = found[old]
        domains.append(CTypeDomain(index.phis[old], r, facet_list, interior,
                                   tuple(position[j] for j in neighbors)))
    logger.info(f"✅ {len(domains)} primitive class(es) for n={n}, r={r}")
    return domains

