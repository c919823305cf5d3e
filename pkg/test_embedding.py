#!/usr/bin/env python3
"""
Fingerprints iota_s / iota_m and lattice distances
"""
import sys

import pytest

from modules.core.lattice import apply_unimodular
from modules.core.models import SymMat2, SymMat3, UnimodularMat
from modules.core.numeric import FLOAT, numeric_mode
from modules.embedding.distance import (embed_distance, gl_mod2, lattice_distance, rank2_distance, rank2_values,
                                        vector_distance, vonorm_distance_generic)
from modules.embedding.embedding import iota, iota_m, iota_s, normalize_scale
from modules.embedding.models import Embedding13, EmbeddingKind, MetricKind
from modules.shared.errors import KindMismatch, NonPositiveDefinite
from modules.verify.sampling import equal_vonorm_pair, family_determinant
from modules.vonorm.vonorm import vonorm_map

IDENTITY = SymMat3.identity()


def test_identity_fingerprints():
    assert list(iota_m(IDENTITY).values) == [1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3]
    assert list(iota_s(IDENTITY).values) == [1, 1, 1, 2, 2, 2, 3, 0, 0, 0, 1, 1, 1]


def test_diagonal_fingerprint():
    assert list(iota_m(SymMat3(1, 2, 3, 0, 0, 0)).values) == [1, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 6, 6]


def test_fingerprints_are_invariant():
    gram = SymMat3(2, 3, 5, -1, 1, -1)
    g = UnimodularMat(((1, 2, -1), (0, 1, 3), (0, 0, 1)))
    image = apply_unimodular(g, gram)
    assert iota_s(gram) == iota_s(image)
    assert iota_m(gram) == iota_m(image)


def test_selling_parts():
    embedding = iota_s(IDENTITY)
    assert embedding.vonorm_part() == (1, 1, 1, 2, 2, 2, 3)
    assert embedding.conorm_part() == (0, 0, 0, 1, 1, 1)
    assert iota_m(IDENTITY).conorm_part() == ()


def test_equal_vonorm_family_is_separated():
    s1, s2 = equal_vonorm_pair(1)
    assert s1 == SymMat3.from_matrix([[6, -2, -2], [-2, 12, -3], [-2, -3, 12]])
    assert s2 == SymMat3.from_matrix([[6, -3, -1], [-3, 12, -5], [-1, -5, 14]])
    assert s1.det() == s2.det() == family_determinant(1) == 690
    assert vonorm_map(s1, 2).sorted_values() == vonorm_map(s2, 2).sorted_values() == [6, 12, 12, 14, 14, 16, 18]
    assert iota_s(s1) != iota_s(s2)
    assert iota_m(s1) != iota_m(s2)
    assert lattice_distance(s1, s2) > 0


def test_metrics():
    assert vector_distance([0, 0], [3, 4], MetricKind.L1) == 7
    assert vector_distance([0, 0], [3, 4], MetricKind.L2) == 5
    assert vector_distance([0, 0], [3, 4], 'linf') == 4
    assert lattice_distance(IDENTITY, SymMat3(4, 4, 4, 0, 0, 0)) == 9
    assert lattice_distance(IDENTITY, IDENTITY, kind=EmbeddingKind.SELLING) == 0


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        embed_distance(iota_s(IDENTITY), iota_m(IDENTITY))
    with pytest.raises(ValueError):
        Embedding13(EmbeddingKind.MINKOWSKI, (1, 2, 3))


def test_kind_parsing():
    assert EmbeddingKind.parse('selling') is EmbeddingKind.SELLING
    assert EmbeddingKind.parse('M') is EmbeddingKind.MINKOWSKI
    assert EmbeddingKind.parse(EmbeddingKind.SELLING) is EmbeddingKind.SELLING
    assert MetricKind.parse(MetricKind.L1) is MetricKind.L1
    assert MetricKind.parse(' Linf ') is MetricKind.LINF
    with pytest.raises(ValueError):
        EmbeddingKind.parse('x')
    assert iota(IDENTITY, 's') == iota_s(IDENTITY)


def test_non_positive_definite_input():
    with pytest.raises(NonPositiveDefinite):
        iota_m(SymMat3(1, 1, 1, 1, 0, 0))


def test_generic_vonorm_distance():
    assert len(gl_mod2(3)) == 168
    assert len(gl_mod2(2)) == 6
    gram = SymMat3(3, 4, 6, 1, -1, 2)
    g = UnimodularMat(((1, 1, 0), (0, 1, -1), (1, 1, -1)))
    assert vonorm_distance_generic(gram, apply_unimodular(g, gram)) == 0
    assert vonorm_distance_generic(IDENTITY, SymMat3(2, 2, 2, 0, 0, 0)) == 3


def test_rank2_distance():
    assert rank2_values(SymMat2(1, 1, 0)) == (1, 1, 2)
    assert rank2_distance(SymMat2(1, 1, 0), SymMat2(2, 3, 1)) > 0
    assert rank2_distance(SymMat2(2, 3, 1), SymMat2(2, 7, 3)) == 0


def test_scale_normalization():
    with pytest.raises(ValueError):
        normalize_scale(IDENTITY)
    with numeric_mode(FLOAT):
        normalized = normalize_scale(SymMat3(8, 8, 8, 0, 0, 0))
        assert float(normalized.det()) == pytest.approx(1.0)
        assert iota_m(normalized).values == pytest.approx(iota_m(SymMat3(1, 1, 1, 0, 0, 0)).values)


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
