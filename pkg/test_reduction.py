#!/usr/bin/env python3
"""
Selling, Gauss, greedy and Minkowski reduction
"""
import sys

from modules.core.lattice import apply_unimodular
from modules.core.models import SymMat2, SymMat3, UnimodularMat
from modules.reduction.greedy import greedy_reduce
from modules.reduction.minkowski import balashov_ursell_case, is_minkowski_reduced, minkowski_reduce
from modules.reduction.selling import is_reduced_2d, is_selling_reduced, reduce_2d, selling_reduce, superbase_of
from modules.verify.sampling import make_rng, random_pd, random_unimodular

SKEWED = SymMat3(1, 10001, 3, 100, 0, 0)


def _witnessed(gram, result):
    return apply_unimodular(result.transform, gram) == result.reduced


def test_superbase_of_identity():
    superbase = superbase_of(SymMat3.identity())
    assert superbase.vectors[3] == (-1, -1, -1)
    assert superbase.off_diagonal() == (0, 0, -1, 0, -1, -1)
    assert superbase.norms() == (1, 1, 1, 3)


def test_selling_reduction_random_forms():
    rng = make_rng(7)
    for _ in range(40):
        gram = random_pd(rng, 3, max_denominator=3)
        result = selling_reduce(gram)
        assert is_selling_reduced(result.reduced)
        assert _witnessed(gram, result)


def test_selling_reduction_is_idempotent():
    rng = make_rng(21)
    for _ in range(25):
        reduced = selling_reduce(random_pd(rng, 3, max_denominator=2)).reduced
        again = selling_reduce(reduced, precondition=False)
        assert again.reduced == reduced
        assert again.transform == UnimodularMat.identity(3)
        assert is_selling_reduced(selling_reduce(reduced).reduced)


def test_superbase_vectors_sum_to_zero():
    rng = make_rng(13)
    for _ in range(25):
        gram = random_pd(rng, 3, max_denominator=2)
        for basis in (random_unimodular(rng).rows, selling_reduce(gram).transform.rows):
            superbase = superbase_of(gram, basis)
            assert tuple(sum(col) for col in zip(*superbase.vectors)) == (0, 0, 0)
            assert all(sum(row) == 0 for row in superbase.tilde)
        plane = superbase_of(random_pd(rng, 2))
        assert tuple(sum(col) for col in zip(*plane.vectors)) == (0, 0)
        assert all(sum(row) == 0 for row in plane.tilde)


def test_selling_reduction_without_preconditioning():
    result = selling_reduce(SymMat3(2, 3, 4, 1, 1, 1), precondition=False)
    assert is_selling_reduced(result.reduced)
    assert _witnessed(SymMat3(2, 3, 4, 1, 1, 1), result)


def test_selling_reduction_skewed_input():
    result = selling_reduce(SKEWED)
    assert is_selling_reduced(result.reduced)
    assert _witnessed(SKEWED, result)


def test_reduce_2d():
    gram = SymMat2(5, 3, 2)
    result = reduce_2d(gram)
    assert is_reduced_2d(result.reduced)
    assert _witnessed(gram, result)
    assert result.reduced.det() == gram.det()


def test_minkowski_keeps_reduced_input():
    gram = SymMat3(1, 2, 3, 0, 0, 0)
    result = minkowski_reduce(gram)
    assert result.reduced == gram
    assert result.transform == UnimodularMat.identity(3)


def test_minkowski_reduction_random_forms():
    rng = make_rng(11)
    for _ in range(60):
        gram = random_pd(rng, 3, max_entry=5)
        result = minkowski_reduce(gram)
        assert is_minkowski_reduced(result.reduced)
        assert _witnessed(gram, result)


def test_minkowski_reduction_is_canonical_on_equivalent_forms():
    gram = SymMat3(2, 3, 5, -1, 1, -1)
    g = UnimodularMat(((1, 2, -1), (0, 1, 3), (0, 0, 1)))
    assert minkowski_reduce(gram).reduced.diagonal() == minkowski_reduce(apply_unimodular(g, gram)).reduced.diagonal()


def test_greedy_reduction_is_witnessed():
    result = greedy_reduce(SKEWED)
    assert _witnessed(SKEWED, result)
    assert result.reduced.trace() <= SKEWED.trace()


def test_balashov_ursell_cases_are_exclusive():
    rng = make_rng(3)
    for _ in range(30):
        reduced = selling_reduce(random_pd(rng)).reduced
        superbase = superbase_of(reduced)
        order = sorted(range(4), key=lambda k: superbase.tilde[k][k])
        tilde = tuple(tuple(superbase.tilde[a][b] for b in order) for a in order)
        assert balashov_ursell_case(tilde) in (1, 2, 3, 4)


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
