"""
test_series.py (10/2026)
Verify the accelerated eta series, zeta recovery and the harmonic and
geometric series inequalities
"""
import math
import pytest
import numpy as np
import scipy.special
import inequality_toolkit.series as series
from inequality_toolkit.classical import ConjugateExponents

@pytest.mark.parametrize("s, expected", [
    (1.0, math.log(2.0)),
    (2.0, math.pi**2/12.0),
    (4.0, 7.0*math.pi**4/720.0),
])
def test_eta_values(s, expected):
    result = series.eta(s, tol=1e-12)
    assert abs(result.value - expected) <= 1e-12
    assert result.est_error <= 1e-12
    assert result.terms_used == series.eta_terms(1e-12)

def test_eta_terms():
    assert series.eta_terms(1e-12) == 17
    assert series.eta_terms(1e-6) < series.eta_terms(1e-12)

@pytest.mark.parametrize("s", [1.5, 2.0, 3.0, 5.0])
def test_eta_scipy(s):
    expected = -math.expm1((1.0 - s)*math.log(2.0))*scipy.special.zeta(s)
    assert abs(series.eta(s).value - expected) <= 1e-12

def test_eta_increasing():
    grid = np.arange(0.1, 5.05, 0.1)
    values = [series.eta(s).value for s in grid]
    assert np.all(np.diff(values) > 0)

@pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 2.5, 5.0])
def test_eta_partial(s):
    partial = series.eta_partial(s, 10001)
    assert partial.terms_used == 10002
    accelerated = series.eta(s)
    assert abs(accelerated.value - partial.value) <= \
        partial.est_error + accelerated.est_error

def test_eta_partial_chunks():
    partial = series.eta_partial(0.5, 10**7)
    accelerated = series.eta(0.5)
    assert abs(accelerated.value - partial.value) <= partial.est_error
    # the paired partial sum of an even count undershoots the limit
    assert partial.value < accelerated.value

def test_eta_errors():
    with pytest.raises(ValueError):
        series.eta(0.0)
    with pytest.raises(ValueError):
        series.eta(-1.0)
    with pytest.raises(ValueError):
        series.eta(2.0, tol=1e-15)
    with pytest.raises(ValueError):
        series.eta_partial(1.0, 0)

@pytest.mark.parametrize("s, expected", [
    (2.0, math.pi**2/6.0),
    (4.0, math.pi**4/90.0),
])
def test_zeta(s, expected):
    assert abs(series.zeta_from_eta(s) - expected) <= 1e-10

def test_zeta_brute_force():
    N = 10**6
    k = np.arange(1, N + 1, dtype=np.float64)
    # integral estimate of the tail
    brute = math.fsum(k**-3) + 0.5/(N + 0.5)**2
    assert abs(series.zeta_from_eta(3.0) - brute) <= 1e-12

def test_zeta_pole():
    with pytest.raises(ValueError):
        series.zeta_from_eta(1.0)
    with pytest.raises(ValueError):
        series.zeta_from_eta(1.0 + 1e-7)
    assert np.isfinite(series.zeta_from_eta(1.0 + 1e-3))

def test_F_func():
    pq = ConjugateExponents(2.0)
    for alpha in (0.3, 1.0, 2.5):
        assert abs(series.F_func(alpha, alpha, pq) - 1.0) <= 2e-12
    assert series.F_func(1.0, 2.0, pq) < 1.0
    pq = ConjugateExponents(3.0)
    # q alpha = p beta
    assert abs(series.F_func(2.0, 1.0, pq) - 1.0) <= 2e-12
    with pytest.raises(ValueError):
        series.F_func(0.0, 1.0, pq)

def test_harmonic_check():
    pq = ConjugateExponents(2.0)
    report = series.harmonic_ineq_check(1.0, 1.0, pq)
    assert report.holds and report.equality
    report = series.harmonic_ineq_check(0.3, 1.7, pq)
    assert report.holds and not report.equality
    assert report.extra == dict(alpha=0.3, beta=1.7)

def test_F_scan():
    grid = np.arange(1, 13)*0.25
    rows, summary = series.F_scan(grid, grid, [1.5, 2.0, 3.0])
    assert len(rows) == 3*12*12
    assert summary['violations'] == 0
    assert summary['max_F'] <= 1.0 + 2e-12
    assert summary['locus_points'] > 0
    assert summary['locus_equalities'] == summary['locus_points']
    assert summary['equality_points'] == summary['locus_points']

def test_geometric_examples():
    pq = ConjugateExponents(2.0)
    report = series.geometric_ineq_check(2.0, 2.0, pq)
    np.testing.assert_allclose([report.numerator, report.denominator], 0.2)
    assert report.equality
    report = series.geometric_ineq_check(2.0, 3.0, pq)
    np.testing.assert_allclose(report.numerator, 1.0/math.sqrt(50.0))
    np.testing.assert_allclose(report.denominator, 1.0/7.0)
    assert report.holds and not report.equality
    with pytest.raises(ValueError):
        series.geometric_ineq_check(1.0, 2.0, pq)

@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_geometric_grid(p):
    pq = ConjugateExponents(p)
    grid = (1.1, 2.0, 5.0, 10.0)
    for a in grid:
        for b in grid:
            report = series.geometric_ineq_check(a, b, pq)
            assert report.holds
            assert report.extra['series_delta'] <= 1e-12

def test_geometric_series():
    for x in (1.1, 2.0, 10.0):
        assert abs(series.geometric_series(x) - 1.0/(1.0 + x)) <= 1e-14

def test_geometric_series_mismatch(monkeypatch):
    pq = ConjugateExponents(2.0)
    report = series.geometric_ineq_check(2.0, 3.0, pq)
    assert report.extra['series_consistent']
    # a series that drifts from the closed form is flagged
    monkeypatch.setattr(series, 'geometric_series',
        lambda x, terms=200: 1.0/(1.0 + x) + 1e-6)
    report = series.geometric_ineq_check(2.0, 3.0, pq)
    assert report.holds
    assert not report.extra['series_consistent']
    assert report.extra['series_delta'] > 1e-12
