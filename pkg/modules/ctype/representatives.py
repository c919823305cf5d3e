"""
Literal Voronoi vector sets of the known primitive domains, and the
Minkowski-cover lookup for ternary forms modulo 3.
"""
from itertools import product

from modules.vonorm.models import PhiSet
from modules.vonorm.vonorm import voronoi_vectors


def _cube(n):
    return PhiSet(frozenset(v for v in product((-1, 0, 1), repeat=n) if any(v)), 3)


def selling_phi(n):
    """Phi_0^n: +-(sum of a nonempty subset of e_1..e_n)"""
    vectors = set()
    for bits in product((0, 1), repeat=n):
        if any(bits):
            vectors.add(bits)
            vectors.add(tuple(-x for x in bits))
    return PhiSet(frozenset(vectors), 2)


PHI_2_3 = _cube(2)
PHI_2_4 = PhiSet.from_pairs(list(PHI_2_3.positive_halves()) + [(2, 0), (0, 2), (2, 1), (1, 2), (2, 2)], 4)

PHI_1 = _cube(3)
PHI_2 = PHI_1.swapped([(1, -1, 1)], [(1, 2, 1)])
PHI_3 = PHI_2.swapped([(1, 1, -1)], [(1, 1, 2)])
PHI_4 = PHI_3.swapped([(-1, 1, 1)], [(2, 1, 1)])
PHI_5 = PHI_1.swapped([(-1, 1, 1)], [(2, 1, 1)])
PHI_6 = PHI_1.swapped([(1, 1, -1)], [(1, 1, 2)])
PHI_7 = PHI_1.swapped([(1, -1, 1)], [(-2, -1, 1)])
PHI_8 = PHI_1.swapped([(1, -1, 1)], [(1, -1, -2)])
PHI_9 = PHI_1.swapped([(-1, 1, 1), (1, -1, 1)], [(2, 1, 1), (1, 2, 1)])
PHI_10 = PHI_1.swapped([(-1, 1, 1), (1, 1, -1)], [(2, 1, 1), (1, 1, 2)])

MINKOWSKI_COVER = (PHI_1, PHI_2, PHI_3, PHI_4, PHI_5, PHI_6, PHI_7, PHI_8, PHI_9, PHI_10)

REPRESENTATIVES = {
    'phi_0_2': selling_phi(2),
    'phi_0_3': selling_phi(3),
    'phi_2_3': PHI_2_3,
    'phi_2_4': PHI_2_4,
    **{f'phi_{j}': phi for j, phi in enumerate(MINKOWSKI_COVER, start=1)},
}

# primitive classes known for each (n, r)
KNOWN_CLASSES = {
    (2, 2): ('phi_0_2',),
    (3, 2): ('phi_0_3',),
    (2, 3): ('phi_2_3',),
    (2, 4): ('phi_2_4',),
    (3, 3): ('phi_1', 'phi_2', 'phi_3', 'phi_4'),
}


def representative(name) -> PhiSet:
    try:
        return REPRESENTATIVES[name]
    except KeyError:
        raise KeyError(f"unknown representative {name!r}; known: {sorted(REPRESENTATIVES)}") from None


def minkowski_cover_index(gram):
    """1-based j with gram in D_3(Phi_j), i.e. Phi_j contained in Phi_{S,3}; None if no j fits"""
    phi = voronoi_vectors(gram, 3)
    for j, candidate in enumerate(MINKOWSKI_COVER, start=1):
        if candidate.issubset(phi):
            return j
    return None
