"""
Property suites run by `lattice13 verify`.

Each suite draws its samples from a seeded numpy Generator, checks one family
of properties and returns a SuiteResult; nothing here raises on a failed check.
"""
import logging
import time
from fractions import Fraction

from modules.core.lattice import apply_unimodular, is_positive_definite
from modules.core.models import SymMat3
from modules.core.numeric import EXACT, FLOAT, numeric_mode
from modules.ctype.ctype import (ctype_inequalities, enumerate_ctype_reps, facet_property_failures,
                                 is_facet, merge_parallel, neighbor_across, neighbor_phi, phi_equivalent)
from modules.ctype.representatives import KNOWN_CLASSES, minkowski_cover_index, representative
from modules.embedding.distance import gl_mod2, vonorm_distance_generic, vector_distance
from modules.embedding.embedding import iota_m, iota_s
from modules.embedding.models import MetricKind
from modules.isometry.isometry import (exact_isometries, match_isometry, multiple_growth_failures,
                                       stable_growth_failures_2d, stable_growth_failures_3d)
from modules.reduction.minkowski import is_minkowski_reduced
from modules.reduction.selling import is_selling_reduced
from modules.verify.models import SuiteResult
from modules.verify.sampling import (equal_vonorm_pair, family_determinant, make_rng, random_equivalent_pair,
                                     random_minkowski, random_reduced_2d, random_selling, reduced_isometry)
from modules.vonorm.vonorm import vonorm_map, voronoi_vectors

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240917

DEFAULT_SAMPLES = {
    'equivalence': 1000,
    'invariance': 1000,
    'gl2': 100,
    'lipschitz': 1000,
    'stable-growth': 100,
    'cover': 2000,
    'isometry': 200,
}

FAMILY_VONORMS_AT_ONE = [6, 12, 12, 14, 14, 16, 18]
EXPECTED_CLASS_COUNTS = {(3, 2): 1, (3, 3): 4, (2, 3): 1, (2, 4): 1}
GATED_PERTURBATIONS = ('1e-6', '1e-4')
REPORTED_PERTURBATIONS = ('1e-3',)


def _sample_count(name, samples):
    return DEFAULT_SAMPLES[name] if samples is None else samples


def _random_symmetric(rng, size, denominator=100):
    values = rng.integers(-size, size + 1, size=6)
    return SymMat3(*(Fraction(int(x), denominator) for x in values))


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def suite_equivalence(result, rng, samples):
    """Sorted vonorms mod 3 from coset minimisation equal iota_m on Minkowski-reduced forms"""
    with numeric_mode(EXACT):
        for _ in range(_sample_count('equivalence', samples)):
            gram = random_minkowski(rng, max_denominator=3)
            oracle = vonorm_map(gram, 3).sorted_values()
            result.check(oracle == list(iota_m(gram).values), f"{gram.entries()}: {oracle} vs iota_m")


def suite_invariance(result, rng, samples):
    with numeric_mode(EXACT):
        for _ in range(_sample_count('invariance', samples)):
            gram, image, g = random_equivalent_pair(rng)
            result.check(iota_s(gram) == iota_s(image), f"iota_s differs under {g.rows}")
            result.check(iota_m(gram) == iota_m(image), f"iota_m differs under {g.rows}")


def suite_separation(result, rng, samples):
    with numeric_mode(EXACT):
        for t in (1, 2):
            s1, s2 = equal_vonorm_pair(t)
            v1, v2 = vonorm_map(s1, 2).sorted_values(), vonorm_map(s2, 2).sorted_values()
            result.check(v1 == v2, f"t={t}: vonorms {v1} vs {v2}")
            result.check(s1.det() == s2.det() == family_determinant(t), f"t={t}: determinants differ")
            if t == 1:
                result.check(v1 == FAMILY_VONORMS_AT_ONE, f"t=1: vonorms {v1}")
                result.check(s1.det() == 690, f"t=1: determinant {s1.det()}")
            result.check(iota_s(s1) != iota_s(s2), f"t={t}: iota_s does not separate")
            result.check(iota_m(s1) != iota_m(s2), f"t={t}: iota_m does not separate")
            result.check(not exact_isometries(s1, s2), f"t={t}: an isometry was found")


def suite_gl2(result, rng, samples):
    result.check(len(gl_mod2(3)) == 168, f"|GL_3(Z/2Z)| = {len(gl_mod2(3))}")
    result.check(len(gl_mod2(2)) == 6, f"|GL_2(Z/2Z)| = {len(gl_mod2(2))}")
    with numeric_mode(EXACT):
        for _ in range(_sample_count('gl2', samples)):
            gram, image, g = random_equivalent_pair(rng)
            d = vonorm_distance_generic(gram, image)
            result.check(d == 0, f"distance {d} under {g.rows}")


def _perturbed(rng, gram, accept, attempts=20):
    for _ in range(attempts):
        e = _random_symmetric(rng, 2)
        candidate = gram + e
        if is_positive_definite(candidate) and accept(candidate):
            return candidate, e
    return None, None


def suite_lipschitz(result, rng, samples):
    """||iota(S+E) - iota(S)||_inf <= 16 ||E||_inf (iota_m) and 9 ||E||_inf (iota_s) when E keeps S reduced"""
    skipped = 0
    with numeric_mode(EXACT):
        for _ in range(_sample_count('lipschitz', samples)):
            gram = random_minkowski(rng)
            moved, e = _perturbed(rng, gram, is_minkowski_reduced)
            if moved is None:
                skipped += 1
            else:
                d = vector_distance(iota_m(moved).values, iota_m(gram).values, MetricKind.LINF)
                result.check(d <= 16 * e.max_abs(), f"iota_m moved {d} for ||E|| = {e.max_abs()}")
            gram = random_selling(rng)
            moved, e = _perturbed(rng, gram, is_selling_reduced)
            if moved is None:
                skipped += 1
            else:
                d = vector_distance(iota_s(moved).values, iota_s(gram).values, MetricKind.LINF)
                result.check(d <= 9 * e.max_abs(), f"iota_s moved {d} for ||E|| = {e.max_abs()}")
    result.notes['skipped'] = skipped


def suite_stable_growth(result, rng, samples):
    """Stable growth away from the superbase planes, and v << m v"""
    count = _sample_count('stable-growth', samples)
    small = [(1, 0, 0), (1, 1, 0), (1, -1, 2), (2, 1, -1)]
    with numeric_mode(EXACT):
        for _ in range(count * 5 // 2):
            gram = random_reduced_2d(rng)
            failures = stable_growth_failures_2d(gram, radius=5)
            result.check(not failures, f"2D {gram.entries()}: {failures[:3]}")
        for _ in range(count):
            gram = random_selling(rng)
            failures = stable_growth_failures_3d(gram, radius=4)
            result.check(not failures, f"3D {gram.entries()}: {failures[:3]}")
            multiples = multiple_growth_failures(gram, small)
            result.check(not multiples, f"3D {gram.entries()}: multiples {multiples[:3]}")


def _check_domain(result, domain, r):
    phi = domain.phi
    result.check(voronoi_vectors(domain.interior, r) == phi,
                 f"interior {domain.interior.entries()} does not realise its set")
    result.check(all(f.evaluate(domain.interior) > 0 for f in domain.facet_inequalities),
                 f"interior {domain.interior.entries()} touches a facet")
    ineqs = ctype_inequalities(phi, r)
    for facet in domain.facet_inequalities:
        neighbor = neighbor_across(phi, facet, ineqs, r)
        failures = facet_property_failures(phi, neighbor, facet.u, facet.v, r)
        if r in (2, 3) and neighbor != neighbor_phi(phi, facet.u, facet.v, r):
            failures.append("swap rule disagrees with the crossing")
        result.check(not failures, f"facet {facet.u}->{facet.v}: {failures}")
        opposite = tuple(-x for x in facet.direction())
        candidates = merge_parallel(ctype_inequalities(neighbor, r))
        back = [f for f in candidates if f.direction() == opposite]
        paired = bool(back) and is_facet(back[0], [f for f in candidates if f.direction() != opposite])
        result.check(paired, f"facet {facet.u}->{facet.v} is not a facet from the other side")


def suite_facets(result, rng, samples):
    """Enumeration counts, interior certificates, facet properties and facet pairing"""
    with numeric_mode(EXACT):
        for (n, r), expected in EXPECTED_CLASS_COUNTS.items():
            domains = enumerate_ctype_reps(n, r)
            result.check(len(domains) == expected, f"n={n}, r={r}: {len(domains)} classes, expected {expected}")
            result.notes[f'classes_{n}_{r}'] = len(domains)
            for domain in domains:
                _check_domain(result, domain, r)
            known = [representative(name) for name in KNOWN_CLASSES[(n, r)]]
            for phi in known:
                found = any(phi_equivalent(phi, d.phi) is not None for d in domains)
                result.check(found, f"n={n}, r={r}: a known representative is missing")


def suite_cover(result, rng, samples):
    with numeric_mode(EXACT):
        for _ in range(_sample_count('cover', samples)):
            gram = random_minkowski(rng, max_denominator=2)
            result.check(minkowski_cover_index(gram) is not None, f"{gram.entries()} is in no listed domain")


def suite_isometry(result, rng, samples):
    """Recovery of a hidden basis change from a perturbed observation"""
    count = _sample_count('isometry', samples)
    for label in GATED_PERTURBATIONS + REPORTED_PERTURBATIONS:
        delta = float(label)
        successes = 0
        for _ in range(count):
            with numeric_mode(EXACT):
                gram = random_minkowski(rng)
                h = reduced_isometry(rng, gram)
                target = apply_unimodular(h, gram)
            noise = rng.uniform(-1.0, 1.0, size=6)
            noise *= delta * float(gram.max_abs()) / max(abs(noise).max(), 1e-300)
            tol = 20 * delta * float(gram.max_abs())
            with numeric_mode(FLOAT):
                observed1 = SymMat3(*(float(x) for x in gram.entries()))
                observed2 = SymMat3(*(float(x) + float(e) for x, e in zip(target.entries(), noise)))
                match = match_isometry(observed1, observed2, tol)
            ok = match is not None and match.residual <= tol
            successes += ok
            if label in GATED_PERTURBATIONS:
                result.check(ok, f"delta={label}: no match for h={h.rows}")
        result.notes[f'success_rate_{label}'] = successes / count if count else None


SUITES = {
    'equivalence': suite_equivalence,
    'invariance': suite_invariance,
    'separation': suite_separation,
    'gl2': suite_gl2,
    'lipschitz': suite_lipschitz,
    'stable-growth': suite_stable_growth,
    'facets': suite_facets,
    'cover': suite_cover,
    'isometry': suite_isometry,
}
# older suite names, still accepted on the command line
SUITE_ALIASES = {'theorem1': 'equivalence', 'lemma6': 'stable-growth', 'prop1': 'facets'}
SUITE_NAMES = tuple(SUITES) + tuple(SUITE_ALIASES) + ('all',)


def run_suite(name, samples=None, seed=DEFAULT_SEED) -> SuiteResult:
    name = SUITE_ALIASES.get(name, name)
    result = SuiteResult(name)
    rng = make_rng(seed)
    started = time.perf_counter()
    SUITES[name](result, rng, samples)
    result.seconds = time.perf_counter() - started
    status = '✅' if result.passed else '❌'
    logger.info(f"{status} Suite {name}: {result.checked} checks, {len(result.failures)} failure(s) "
                f"in {result.seconds:.1f}s")
    return result


def run_suites(name, samples=None, seed=DEFAULT_SEED) -> list:
    names = list(SUITES) if name == 'all' else [name]
    return [run_suite(n, samples, seed) for n in names]
