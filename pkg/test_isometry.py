#!/usr/bin/env python3
"""
Candidate, exact and matched isometries; the stable order on lattice vectors
"""
import sys

import pytest

from modules.core.lattice import apply_unimodular
from modules.core.models import SymMat2, SymMat3, UnimodularMat
from modules.core.numeric import FLOAT, numeric_mode
from modules.isometry.isometry import (PSI_1, PSI_3, admissible_rows, candidate_isometries, candidate_isometries_2d,
                                       exact_isometries, first_minimum, match_isometry, multiple_growth_failures,
                                       psi_sets, rank_isometries, satisfies_near_equivalence, stable_growth_failures_2d,
                                       stable_growth_failures_3d, stably_less)
from modules.shared.errors import NotReduced
from modules.verify.sampling import equal_vonorm_pair, make_rng, random_reduced_2d, random_selling

IDENTITY = SymMat3.identity()
DIAGONAL = SymMat3(1, 2, 3, 0, 0, 0)
H = UnimodularMat(((1, 1, 0), (0, 1, -1), (1, 1, -1)))


def test_psi_sets():
    assert len(PSI_1) == 18
    assert len(PSI_3) == 20
    sets = psi_sets()
    assert sets.for_row(2) == PSI_3
    assert (1, -1, 0) in sets.union()


def test_stable_order():
    assert first_minimum(DIAGONAL) == 1
    assert stably_less(DIAGONAL, (1, 0, 0), (0, 1, 0))
    assert not stably_less(IDENTITY, (1, 0, 0), (0, 1, 0))
    assert stably_less(IDENTITY, (1, 0, 0), (2, 0, 0))


def test_identity_candidates_are_signed_permutations():
    candidates = candidate_isometries(IDENTITY)
    assert len(candidates) == 48
    assert set(candidates) == set(UnimodularMat.signed_permutations(3))
    assert all(len(rows) == 6 for rows in admissible_rows(IDENTITY))


def test_inclusive_bound_admits_more_rows():
    strict = candidate_isometries(IDENTITY)
    inclusive = candidate_isometries(IDENTITY, inclusive=True)
    assert set(strict) <= set(inclusive)
    assert len(inclusive) > len(strict)


def test_candidates_require_reduced_input_when_asked():
    skew = apply_unimodular(H, DIAGONAL)
    with pytest.raises(NotReduced):
        candidate_isometries(skew, auto_reduce=False)
    assert candidate_isometries(skew)


def test_rank2_candidates():
    candidates = candidate_isometries_2d(SymMat2(1, 1, 0))
    assert UnimodularMat.identity(2) in candidates
    assert len(candidates) == 8


def test_exact_isometries():
    image = apply_unimodular(H, DIAGONAL)
    found = exact_isometries(DIAGONAL, image)
    assert H in found
    assert all(apply_unimodular(g, DIAGONAL) == image for g in found)
    assert len(found) == 8
    assert len(exact_isometries(IDENTITY, IDENTITY)) == 48
    assert exact_isometries(*equal_vonorm_pair(1)) == []


def test_rank_identity_pair():
    ranked = rank_isometries(IDENTITY, IDENTITY, tol=0)
    assert len(ranked) == 48
    assert all(c.residual == 0 and c.exact for c in ranked)
    assert ranked[0].to_dict()['residual'] == 0


def test_match_recovers_basis_change():
    image = apply_unimodular(H, DIAGONAL)
    match = match_isometry(DIAGONAL, image, tol=0)
    assert match is not None
    assert apply_unimodular(match.g, DIAGONAL) == image


def test_match_under_float_noise():
    image = apply_unimodular(H, DIAGONAL)
    with numeric_mode(FLOAT):
        t1 = SymMat3(*(float(x) for x in DIAGONAL.entries()))
        t2 = SymMat3(*(float(x) + 1e-7 for x in image.entries()))
        match = match_isometry(t1, t2, tol=1e-5)
        assert match is not None
        assert match.residual <= 1e-5
        assert not match.exact


def test_incompatible_pair_has_no_match():
    assert match_isometry(IDENTITY, SymMat3(1, 5, 9, 0, 0, 0), tol=1) is None


def test_near_equivalence_filter():
    assert satisfies_near_equivalence(UnimodularMat.identity(3), DIAGONAL, DIAGONAL)
    shear = UnimodularMat(((1, 0, 0), (1, 1, 0), (0, 0, 1)))
    assert not satisfies_near_equivalence(shear, DIAGONAL, DIAGONAL)


def test_stable_growth():
    rng = make_rng(5)
    for _ in range(10):
        assert stable_growth_failures_2d(random_reduced_2d(rng), radius=4) == []
    for _ in range(5):
        gram = random_selling(rng)
        assert stable_growth_failures_3d(gram, radius=3) == []
        assert multiple_growth_failures(gram, [(1, 0, 0), (1, -1, 2)]) == []


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in sorted(globals().items()) if name.startswith('test_') and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {e}")
    sys.exit(1 if failed else 0)
