#!/usr/bin/env python3
"""
Seeded samplers and the property suites behind `lattice13 verify`
"""
import sys

import pytest

from modules.core import linalg
from modules.core.lattice import apply_unimodular, is_positive_definite
from modules.reduction.minkowski import is_minkowski_reduced
from modules.verify.models import MAX_REPORTED_EXAMPLES, SuiteResult
from modules.verify.sampling import (equal_vonorm_pair, family_determinant, make_rng, random_minkowski, random_pd,
                                     random_unimodular, reduced_isometry)
from modules.verify.suites import DEFAULT_SAMPLES, SUITE_NAMES, SUITES, run_suite, run_suites


def test_suite_result_bookkeeping():
    result = SuiteResult('demo')
    assert result.check(True, 'fine')
    for k in range(MAX_REPORTED_EXAMPLES + 2):
        assert not result.check(False, f"case {k}")
    data = result.to_dict()
    assert not result.passed
    assert data['checked'] == MAX_REPORTED_EXAMPLES + 3
    assert data['failures'] == MAX_REPORTED_EXAMPLES + 2
    assert len(data['examples']) == MAX_REPORTED_EXAMPLES
    assert SuiteResult('empty').passed


def test_samplers_are_seeded():
    first = [random_pd(make_rng(3)) for _ in range(2)]
    second = [random_pd(make_rng(3)) for _ in range(2)]
    assert first == second


def test_random_forms_and_basis_changes():
    rng = make_rng(11)
    for _ in range(10):
        assert is_positive_definite(random_pd(rng, 3, max_denominator=4))
        g = random_unimodular(rng)
        assert linalg.det(g.rows) in (1, -1)
        assert max(abs(x) for row in g.rows for x in row) <= 5


def test_reduced_isometry_keeps_form_reduced():
    rng = make_rng(2)
    for _ in range(5):
        gram = random_minkowski(rng)
        h = reduced_isometry(rng, gram)
        assert is_minkowski_reduced(apply_unimodular(h, gram))


def test_equal_vonorm_family():
    assert family_determinant(1) == 690
    for t in (1, 2, -3):
        s1, s2 = equal_vonorm_pair(t)
        assert s1.det() == s2.det() == family_determinant(t)
    with pytest.raises(ValueError):
        equal_vonorm_pair(0)


@pytest.mark.parametrize('name, samples', [
    ('equivalence', 5),
    ('invariance', 5),
    ('separation', None),
    ('gl2', 3),
    ('lipschitz', 5),
    ('stable-growth', 2),
    ('cover', 10),
    ('isometry', 3),
    ('facets', None),
])
def test_suite_passes(name, samples):
    result = run_suite(name, samples, seed=7)
    assert result.passed, result.failures[:3]
    assert result.checked > 0


def test_stable_growth_default_sample_count():
    assert DEFAULT_SAMPLES['stable-growth'] == 100
    assert DEFAULT_SAMPLES['stable-growth'] <= min(DEFAULT_SAMPLES.values())


def test_suite_aliases():
    assert 'theorem1' in SUITE_NAMES and 'all' in SUITE_NAMES
    assert run_suite('theorem1', 2).suite == 'equivalence'
    assert [r.suite for r in run_suites('gl2', 1)] == ['gl2']
    assert set(SUITES) <= set(SUITE_NAMES)


def test_suites_are_reproducible():
    first = run_suite('invariance', 4, seed=99).to_dict()
    second = run_suite('invariance', 4, seed=99).to_dict()
    first.pop('seconds')
    second.pop('seconds')
    assert first == second


def test_isometry_suite_reports_success_rates():
    notes = run_suite('isometry', 2, seed=1).notes
    assert notes['success_rate_1e-6'] == 1.0
    assert 'success_rate_1e-3' in notes


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, '-q']))
