"""
test_extremal.py (10/2026)
Verify the feasible parameterization, the compass search and the multi-start
extremal searches against the proved constants
"""
import math
import pytest
import numpy as np
import hypothesis.strategies as st
import hypothesis.extra.numpy as hnp
from hypothesis import given
import inequality_toolkit.extremal as extremal
import inequality_toolkit.ratios as ratios
from inequality_toolkit.extremal import SearchConfig
from inequality_toolkit.seqcore import validate_monotone

# small budgets for the non-slow tests
QUICK = dict(restarts=4, max_evals=400)

def test_param_to_seq_constant():
    s = extremal.param_to_seq(np.zeros((5)), 5, 0.0, 1.0)
    np.testing.assert_array_equal(s.values, np.full((5), 0.5))

@given(hnp.arrays(np.float64, st.integers(1, 20),
    elements=st.floats(-100.0, 100.0, allow_nan=False)))
def test_param_to_seq_feasible(raw):
    s = extremal.param_to_seq(raw, raw.size, 0.1, 1.0)
    assert validate_monotone(s, tol_mono=0.0)
    assert np.all((s.values >= 0.1) & (s.values <= 1.0))

def test_param_to_seq_clamp():
    s = extremal.param_to_seq([0.5, 0.6, 0.6, 0.6], 4, 0.0, 1.0)
    np.testing.assert_array_equal(s.values, [1.0, 0.4, 0.0, 0.0])
    s = extremal.param_to_seq([-4.0, 0.0], 2, 0.5, 2.0)
    np.testing.assert_array_equal(s.values, [0.5, 0.5])
    with pytest.raises(ValueError):
        extremal.param_to_seq([0.0, 0.0], 3, 0.0, 1.0)

def test_seq_to_param_inverse():
    for values, lo, hi in [([1.0, 0.4, 0.0, 0.0], 0.0, 1.0),
        ([2.0, 1.5, 1.5, 0.5], 0.5, 2.0), ([0.3, 0.3], 0.3, 0.3)]:
        raw = extremal.seq_to_param(values, lo, hi)
        s = extremal.param_to_seq(raw, len(values), lo, hi)
        np.testing.assert_allclose(s.values, values, rtol=0, atol=1e-15)
    with pytest.raises(ValueError):
        extremal.seq_to_param([0.5, 0.7], 0.0, 1.0)
    with pytest.raises(ValueError):
        extremal.seq_to_param([1.5, 0.7], 0.0, 1.0)

def test_family_starts():
    config = SearchConfig('minkowski_alt', p=2.0, n=6)
    starts = extremal.family_starts(config)
    assert len(starts) == 3
    trace = ratios.minkowski_sharpness_trace(2.0, [10.0, 100.0, 1000.0])
    values = [extremal.objective(config, x0) for x0 in starts]
    np.testing.assert_allclose(values, trace.ratios, rtol=1e-8)
    config = SearchConfig('reverse_minkowski', p=2.0, n=16)
    x0, = extremal.family_starts(config)
    assert extremal.objective(config, x0) == \
        pytest.approx(2.0/math.sqrt(2.5), rel=1e-12)
    # zero terms leave boxes with positive lower bounds
    assert extremal.family_starts(SearchConfig('minkowski_alt',
        a_box=(0.1, 1.0))) == []
    assert extremal.family_starts(SearchConfig('minkowski_alt',
        direction='minimize')) == []
    assert extremal.family_starts(SearchConfig('holder')) == []

def test_minkowski_search_reaches_family():
    config = SearchConfig('minkowski_alt', p=2.0, n=6, seed=7, **QUICK)
    result = extremal.search(config, threads=1)
    trace = ratios.minkowski_sharpness_trace(2.0, [10.0, 100.0])
    record = extremal.sharpness_report(config, trace, result=result)
    assert not record['regression']
    assert record['difference'] > 0
    assert not result.violates

@pytest.mark.parametrize("maximize, sign", [(True, -1.0), (False, 1.0)])
def test_compass_search(maximize, sign):
    f = lambda x: sign*((x[0] - 1.0)**2 + (x[1] + 2.0)**2)
    x, fx, evals, history = extremal.compass_search(f, [0.0, 0.0],
        maximize=maximize)
    np.testing.assert_allclose(x, [1.0, -2.0], atol=1e-6)
    assert abs(fx) < 1e-10
    assert evals <= 5000
    delta = np.diff(history) if maximize else -np.diff(history)
    assert np.all(delta > 0)

def test_compass_budget():
    calls = []
    def f(x):
        calls.append(1)
        return -np.sum(x**2)
    *_, evals, _ = extremal.compass_search(f, np.ones((4)), max_evals=25)
    assert evals == len(calls) == 25

@pytest.mark.parametrize("kwargs", [
    dict(functional='unknown'),
    dict(functional='holder', direction='sideways'),
    dict(functional='holder', restarts=0),
    dict(functional='holder', step_init=1e-9),
    dict(functional='holder', p=1.0),
    dict(functional='holder', a_box=(0.0, 1.0)),
    dict(functional='holder', b_box=(1.0, 0.5)),
    dict(functional='reverse_minkowski', p=0.5),
    dict(functional='power_ratio', n=4),
    dict(functional='power_ratio', n=5, r=3, R=2),
])
def test_config_errors(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)

def test_config_bounds():
    config = SearchConfig('cauchy', a_box=(1.0, 2.0), b_box=(0.5, 2.0))
    assert config.bounds_box == ratios.BoundsBox(1.0, 2.0, 0.5, 4.0)
    assert config.dimension == 12
    config = SearchConfig('minkowski_alt', p=0.5)
    assert config.bound() == 2.0
    config = SearchConfig('reverse_minkowski', direction='minimize')
    assert config.bound() == 1.0
    assert SearchConfig('power_ratio', n=5).dimension == 5

def test_degenerate_objective():
    config = SearchConfig('minkowski_alt', p=2.0, n=6)
    # equal constant sequences of even length have a vanishing denominator
    assert extremal.objective(config, np.zeros((12))) == -np.inf

@given(hnp.arrays(np.float64, 10,
    elements=st.floats(-10.0, 10.0, allow_nan=False)))
def test_cauchy_decode(raw):
    config = SearchConfig('cauchy', n=5)
    a, b = extremal.decode(config, raw)
    quotient = a.values/b.values
    assert validate_monotone(b, tol_mono=0.0)
    assert validate_monotone(quotient, 'non-decreasing',
        tol_mono=1e-12*quotient.max())

def test_cauchy_point_box():
    config = SearchConfig('cauchy', n=3, a_box=(1.0, 1.0), b_box=(1.0, 1.0),
        **QUICK)
    result = extremal.search(config, threads=1)
    assert result.best_value == 1.0
    assert result.gap == 0.0

def test_cauchy_single_term():
    config = SearchConfig('cauchy', n=1, **QUICK)
    result = extremal.search(config, threads=1)
    assert result.best_value == pytest.approx(1.0, abs=1e-15)

@pytest.mark.parametrize("kwargs", [
    dict(functional='holder', p=2.0, n=4),
    dict(functional='holder', p=3.0, n=5),
    dict(functional='cauchy', n=4),
    dict(functional='minkowski_alt', p=2.0, n=6),
    dict(functional='minkowski_alt', p=0.5, n=6),
    dict(functional='reverse_minkowski', p=2.0, n=6),
    dict(functional='reverse_minkowski', p=2.0, n=6, direction='minimize'),
    dict(functional='power_ratio', n=5, r=1, R=2),
])
def test_search_respects_bound(kwargs):
    config = SearchConfig(**kwargs, **QUICK)
    result = extremal.search(config, threads=1)
    assert not result.violates
    a, b = result.witness
    # witnesses satisfy the hypotheses exactly and reproduce their value
    assert validate_monotone(a, tol_mono=0.0)
    assert validate_monotone(b, tol_mono=0.0)
    assert config.bounds_box.contains(a.values, b.values)
    assert extremal.evaluate(config, a, b) == result.best_value
    delta = np.diff(result.history)
    assert np.all(delta > 0) if config.maximize else np.all(delta < 0)

def test_search_determinism():
    config = SearchConfig('minkowski_alt', p=2.0, n=4, seed=7, **QUICK)
    first = extremal.search(config, threads=1)
    second = extremal.search(config, threads=1)
    assert first.to_dict() == second.to_dict()
    parallel = extremal.search(config, threads=2)
    assert parallel.to_dict() == first.to_dict()

def test_result_schema():
    config = SearchConfig('reverse_minkowski', n=3, **QUICK)
    record = extremal.search(config, threads=1).to_dict()
    assert set(record) == {'functional', 'p', 'n', 'direction', 'best_value',
        'bound', 'gap', 'witness', 'restarts', 'restart_index',
        'evaluations', 'seed'}
    assert len(record['witness']['a']) == 3

def test_sharpness_mismatch():
    trace = ratios.minkowski_sharpness_trace(2.0, [10.0, 100.0])
    with pytest.raises(ValueError):
        extremal.sharpness_report(SearchConfig('holder'), trace)
    with pytest.raises(ValueError):
        extremal.sharpness_report(SearchConfig('minkowski_alt', p=3.0), trace)
    with pytest.raises(ValueError):
        extremal.holder_growth_trend(SearchConfig('cauchy'), [0.1, 0.01])

@pytest.mark.slow
def test_minkowski_search():
    config = SearchConfig('minkowski_alt', p=2.0, n=6, restarts=64, seed=7)
    result = extremal.search(config)
    assert result.best_value >= 1.40
    assert result.gap <= 0.02
    assert not result.violates
    trace = ratios.minkowski_sharpness_trace(2.0, [10.0, 100.0])
    record = extremal.sharpness_report(config, trace, result=result)
    assert not record['regression']
    assert record['family_param'] == 100.0

@pytest.mark.slow
def test_reverse_minkowski_search():
    config = SearchConfig('reverse_minkowski', p=2.0, n=16, restarts=64)
    result = extremal.search(config)
    assert result.best_value >= 2.0/math.sqrt(2.5) - 1e-3
    assert result.best_value <= math.sqrt(2.0) + 1e-9

@pytest.mark.slow
def test_holder_growth_trend():
    config = SearchConfig('holder', p=2.0, n=3, restarts=8)
    results = extremal.holder_growth_trend(config, [0.1, 0.01, 0.001])
    values = [result.best_value for result in results]
    assert values[-1] > values[0]
    assert not any(result.violates for result in results)
