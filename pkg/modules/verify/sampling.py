"""
Random forms and basis changes for the property suites, all drawn from a numpy Generator
"""
from fractions import Fraction

import numpy as np

from modules.core import linalg
from modules.core.lattice import apply_unimodular
from modules.core.models import SymMat2, SymMat3, UnimodularMat
from modules.reduction.minkowski import minkowski_reduce
from modules.reduction.selling import reduce_2d, selling_reduce

_FAMILY_BASE = {
    1: ((4, -1, -1), (-1, 6, -1), (-1, -1, 6)),
    2: ((4, -2, -1), (-2, 6, -2), (-1, -2, 8)),
}
_FAMILY_LINEAR = {
    1: ((2, -1, -1), (-1, 2, 0), (-1, 0, 2)),
    2: ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
}
_FAMILY_INVERSE = ((0, 0, 0), (0, 4, -2), (0, -2, 4))


def make_rng(seed):
    return np.random.default_rng(seed)


def random_pd(rng, n=3, max_entry=4, max_denominator=1):
    """B B^T for a random nonsingular integer B, divided by a random denominator"""
    while True:
        b = rng.integers(-max_entry, max_entry + 1, size=(n, n))
        rows = tuple(tuple(int(x) for x in row) for row in b)
        if linalg.det(rows) == 0:
            continue
        gram = linalg.mat_mul(rows, linalg.transpose(rows))
        d = int(rng.integers(1, max_denominator + 1))
        gram = [[Fraction(x, d) for x in row] for row in gram]
        return (SymMat2 if n == 2 else SymMat3).from_matrix(gram)


def random_unimodular(rng, n=3, max_entry=5, steps=6):
    """Product of random elementary moves, kept only while ||g||_inf <= max_entry"""
    rows = [list(r) for r in linalg.identity(n)]
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        move = int(rng.integers(0, 3))
        trial = [r[:] for r in rows]
        if move == 0:
            c = int(rng.choice((-1, 1)))
            trial[i] = [a + c * b for a, b in zip(trial[i], trial[j])]
        elif move == 1:
            trial[i], trial[j] = trial[j], trial[i]
        else:
            trial[i] = [-a for a in trial[i]]
        if max(abs(x) for r in trial for x in r) <= max_entry:
            rows = trial
    return UnimodularMat(tuple(tuple(r) for r in rows))


def random_minkowski(rng, max_entry=4, max_denominator=1):
    return minkowski_reduce(random_pd(rng, 3, max_entry, max_denominator)).reduced


def random_selling(rng, n=3, max_entry=4):
    return selling_reduce(random_pd(rng, n, max_entry)).reduced


def random_reduced_2d(rng, max_entry=4):
    return reduce_2d(random_pd(rng, 2, max_entry)).reduced


def random_equivalent_pair(rng, max_entry=5):
    """(S, g S g^T, g) for a random form and a random basis change"""
    gram = random_pd(rng, 3)
    g = random_unimodular(rng, 3, max_entry)
    return gram, apply_unimodular(g, gram), g


def reduced_isometry(rng, gram):
    """h with gram and h gram h^T both Minkowski-reduced, reached through a random basis change"""
    g = random_unimodular(rng, 3)
    result = minkowski_reduce(apply_unimodular(g, gram))
    return result.transform @ g


def _family_member(which, t):
    t = Fraction(t)
    if t == 0:
        raise ValueError("the family is defined for t != 0")
    base, lin = _FAMILY_BASE[which], _FAMILY_LINEAR[which]
    rows = [[base[i][j] + t * lin[i][j] + _FAMILY_INVERSE[i][j] / t for j in range(3)] for i in range(3)]
    return SymMat3.from_matrix(rows)


def equal_vonorm_pair(t=1):
    """Two inequivalent ternary forms with equal vonorms and equal determinant for every t != 0"""
    return _family_member(1, t), _family_member(2, t)


def family_determinant(t):
    t = Fraction(t)
    return 48 / t ** 2 + 188 / t + 254 + 154 * t + 42 * t ** 2 + 4 * t ** 3
