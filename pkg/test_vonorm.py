#!/usr/bin/env python3
"""
Short vectors, vonorm and conorm maps, Voronoi vector sets
"""
import sys

import pytest

from modules.core.lattice import apply_unimodular
from modules.core.models import SymMat2, SymMat3, UnimodularMat
from modules.ctype.representatives import PHI_1, PHI_2_3
from modules.vonorm.enumeration import short_vectors
from modules.vonorm.models import CosetClass, PhiSet, coset_classes
from modules.vonorm.vonorm import (conorm_map, general_position_count, is_general_position, selling_conorms,
                                   shortest_in_coset, vonorm_map, voronoi_vectors)

IDENTITY = SymMat3.identity()


def test_coset_classes_identify_negatives():
    assert len(coset_classes(3, 2)) == 7
    assert len(coset_classes(3, 3)) == 13
    assert len(coset_classes(2, 4)) == 9
    assert CosetClass.of((2, 1, 0), 3) == CosetClass.of((1, 2, 0), 3)
    signed = CosetClass.of((2, 1, 0), 3, identified_with_negation=False)
    assert signed != CosetClass.of((1, 2, 0), 3, identified_with_negation=False)
    assert signed.representative == (2, 1, 0) and not signed.identified_with_negation
    with pytest.raises(ValueError):
        CosetClass.of((3, 0, 0), 3)


def test_short_vectors():
    assert len(short_vectors(IDENTITY, 1)) == 6
    assert len(short_vectors(IDENTITY, 1, include_zero=True)) == 7
    assert len(short_vectors(IDENTITY, 2)) == 18
    values = sorted(value for value, _ in short_vectors(SymMat3(1, 2, 3, 0, 0, 0), 3))
    assert values == [1, 1, 2, 2, 3, 3, 3, 3, 3, 3]


def test_vonorms_of_identity():
    table = vonorm_map(IDENTITY, 2)
    assert len(table) == 7
    assert table.sorted_values() == [1, 1, 1, 2, 2, 2, 3]
    assert table.value_of((2, 0, 0)) == 0
    assert table.lookup((1, 1, 1)).value == 3
    assert vonorm_map(IDENTITY, 3).sorted_values() == [1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3]


def test_vonorms_are_invariant():
    gram = SymMat3(3, 4, 6, 1, -1, 2)
    g = UnimodularMat(((1, 1, 0), (0, 1, -1), (1, 1, -1)))
    image = apply_unimodular(g, gram)
    for r in (2, 3):
        assert vonorm_map(gram, r).sorted_values() == vonorm_map(image, r).sorted_values()


def test_shortest_in_coset():
    value, witness = shortest_in_coset(IDENTITY, (1, 1, 0), 2)
    assert value == 2
    assert witness == (-1, -1, 0)
    assert shortest_in_coset(IDENTITY, (1, 0, 0), 3) == (1, (1, 0, 0))
    assert shortest_in_coset(IDENTITY, (2, 0, 0), 3) == (1, (-1, 0, 0))
    with pytest.raises(ValueError):
        shortest_in_coset(IDENTITY, (2, 0, 0), 2)


def test_conorms_of_identity():
    conorms = conorm_map(IDENTITY)
    assert conorms[(1, 0, 0)] == 1
    assert conorms[(1, 1, 0)] == 0
    assert sorted(selling_conorms(IDENTITY)) == [0, 0, 0, 1, 1, 1]


def test_voronoi_vectors_mod_3():
    phi = voronoi_vectors(IDENTITY, 3)
    assert phi == PHI_1
    assert len(phi) == general_position_count(3, 3) == 26
    assert is_general_position(IDENTITY, 3)
    assert voronoi_vectors(SymMat2(1, 1, 0), 3) == PHI_2_3


def test_identity_is_not_general_mod_2():
    assert general_position_count(3, 2) == 14
    assert len(voronoi_vectors(IDENTITY, 2)) == 26
    assert not is_general_position(IDENTITY, 2)


def test_phi_set_rules():
    with pytest.raises(ValueError):
        PhiSet(frozenset({(1, 0, 0)}), 3)
    phi = PhiSet.from_pairs([(1, 0), (0, 1)], 3)
    assert len(phi) == 4
    assert phi.positive_halves() == [(0, 1), (1, 0)]
    swapped = phi.swapped([(1, 0)], [(1, 1)])
    assert (1, 1) in swapped and (-1, 0) not in swapped


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
