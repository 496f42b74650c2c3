"""
test_altineq.py (10/2026)
Verify the altineq subcommands end to end with their exit statuses and reports
"""
import json
import math
import pytest
import inequality_toolkit.altineq as altineq
import inequality_toolkit.campaigns as campaigns
import inequality_toolkit.series as series
from inequality_toolkit.utilities import default

def _run(capsys, *argv):
    """Run altineq and parse the JSON report written to stdout
    """
    status = altineq.main(list(argv))
    out = capsys.readouterr().out
    return status, (json.loads(out) if out.strip() else None)

def test_verify_vacuous(capsys):
    status, report = _run(capsys, 'verify', '--functional', 'holder',
        '--trials', '0')
    assert status == campaigns.EXIT_PASS
    summary, = report['results']
    assert summary['trials'] == summary['holds'] == summary['errors'] == 0
    assert summary['worst_slack'] is None
    assert report['manifest']['command'] == 'verify'
    assert report['manifest']['schema_version'] == report['schema_version']

def test_verify_minkowski(capsys):
    status, report = _run(capsys, 'verify', '--functional', 'minkowski_alt',
        '--trials', '2000', '--p', '2', '--seed', '11')
    assert status == campaigns.EXIT_PASS
    summary, = report['results']
    assert summary['holds'] + summary['errors'] == 2000
    assert summary['violations'] == 0
    assert summary['offending'] == []

@pytest.mark.slow
def test_verify_minkowski_full(capsys):
    status, report = _run(capsys, 'verify', '--functional', 'minkowski_alt',
        '--trials', '100000', '--p', '2')
    summary, = report['results']
    assert status == campaigns.EXIT_PASS
    assert summary['holds'] + summary['errors'] == 100000
    assert summary['violations'] == 0

def test_verify_all_functionals(capsys):
    functionals = sorted(campaigns.CAMPAIGNS.keys())
    status, report = _run(capsys, 'verify', '--functional', *functionals,
        '--trials', '200', '--n-range', '1,16')
    assert status == campaigns.EXIT_PASS
    assert report['violations'] == 0
    for summary in report['results']:
        assert summary['holds'] + summary['errors'] == 200

def test_verify_unstructured_cauchy(capsys):
    status, report = _run(capsys, 'verify', '--functional', 'cauchy',
        '--trials', '500', '--unstructured')
    summary, = report['results']
    assert status == campaigns.EXIT_PASS
    assert summary['violations'] == 0
    assert summary['errors'] > 0
    assert summary['error_types'].get('QuotientNotMonotone', 0) > 0

def test_verify_rational_exponents(capsys):
    status, report = _run(capsys, 'verify', '--functional', 'holder',
        '--trials', '50', '--p', '3/2,3')
    assert status == campaigns.EXIT_PASS
    assert report['manifest']['parameters']['p_list'] == [1.5, 3.0]

def test_verify_csv(capsys):
    status = altineq.main(['verify', '--functional', 'lemma', '--trials',
        '5', '--format', 'csv'])
    lines = capsys.readouterr().out.splitlines()
    assert status == campaigns.EXIT_PASS
    assert lines[0] == ','.join(campaigns.VERIFY_HEADER)
    assert len(lines) == 6

def test_verify_determinism(capsys):
    argv = ('verify', '--functional', 'cauchy', '--trials', '100',
        '--seed', '3')
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv)
    first['manifest'].pop('timestamp')
    second['manifest'].pop('timestamp')
    assert first == second

def test_constants_box(capsys):
    status, report = _run(capsys, 'constants', '--box', '1,2,1,2', '--p', '2')
    constants = report['constants']
    assert status == campaigns.EXIT_PASS
    assert constants['holder_C'] == 4.0
    assert constants['cauchy_c'] == 1.25
    assert constants['zhuang_varsigma'] == 1.25
    assert constants['minkowski'] == pytest.approx(math.sqrt(2.0))
    status, report = _run(capsys, 'constants', '--box', '1,1,1,1', '--p', '2')
    assert report['constants']['cauchy_c'] == 1.0
    assert report['constants']['zhuang_varsigma'] == 1.0

def test_constants_quotient(capsys):
    status, report = _run(capsys, 'constants', '--quotient', '1,3')
    assert report['constants']['bougoffa_C'] == 1.25
    assert report['constants']['crossover_p'] == pytest.approx(1.475, abs=1e-3)

@pytest.mark.parametrize("argv", [
    ('constants',),
    ('constants', '--box', '1,2,1,2', '--quotient', '1,3'),
    ('constants', '--box', '1,2,1'),
    ('constants', '--quotient', '0,3'),
    ('sharpness', 'minkowski_eps_b', '--grid', '1,10'),
    ('sharpness', 'holder_zero', '--n', '3'),
    ('series', 'eta', '--s', '0'),
    ('series', 'zeta', '--s', '1'),
    ('series', 'harmonic', '--alpha', '1'),
    ('search', '--functional', 'power_ratio', '--n', '4'),
])
def test_usage_errors(capsys, argv):
    assert altineq.main(list(argv)) == campaigns.EXIT_USAGE
    assert 'altineq: error' in capsys.readouterr().err

@pytest.mark.parametrize("argv", [
    ('unknown',),
    ('verify', '--functional', 'unknown'),
    ('verify', '--n-range', '1,2,3'),
    ('search',),
])
def test_parser_errors(argv):
    with pytest.raises(SystemExit) as exc:
        altineq.main(list(argv))
    assert exc.value.code == campaigns.EXIT_USAGE

def test_sharpness_files(capsys, tmp_path):
    out = tmp_path.joinpath('eps_b')
    status = altineq.main(['sharpness', 'minkowski_eps_b', '--p', '2',
        '--grid', '10,100,1000', '--out', str(out)])
    assert status == campaigns.EXIT_PASS
    lines = out.with_suffix('.csv').read_text(encoding='utf8').splitlines()
    assert lines[0] == 'param,ratio,bound,gap'
    assert len(lines) == 4
    report = json.loads(out.with_suffix('.json').read_text(encoding='utf8'))
    assert report['passed']
    gaps = [pt['gap'] for pt in report['trace']['points']]
    assert gaps[-1] < 1e-3
    assert all(x > y for x, y in zip(gaps[:-1], gaps[1:]))
    assert report['manifest']['outputs'] == [str(out.with_suffix('.csv')),
        str(out.with_suffix('.json'))]
    # floats are written with round-trip precision
    assert float(lines[1].split(',')[1]) == report['trace']['points'][0]['ratio']

def test_sharpness_families(capsys):
    status, report = _run(capsys, 'sharpness', 'holder_zero', '--n', '4')
    assert status == campaigns.EXIT_PASS
    assert report['report']['ratio'] == 0.0
    assert len(report['witness']['a']) == 4
    status, report = _run(capsys, 'sharpness', 'reverse_minkowski_eps_n',
        '--p', '1')
    assert status == campaigns.EXIT_PASS
    assert all(pt['gap'] == 0.0 for pt in report['trace']['points'])
    status, report = _run(capsys, 'sharpness', 'reverse_minkowski_eps_n',
        '--p', '2', '--grid', '10,100,1000')
    assert status == campaigns.EXIT_PASS
    assert max(report['cross_check']) < 1e-12
    status, report = _run(capsys, 'sharpness', 'holder_blowup', '--p', '2')
    assert status == campaigns.EXIT_PASS
    status, report = _run(capsys, 'sharpness', 'quasi_triangle_eps_b',
        '--p', '1/2')
    assert status == campaigns.EXIT_PASS

def test_search_single_term(capsys):
    status, report = _run(capsys, 'search', '--functional', 'cauchy',
        '--n', '1', '--restarts', '4', '--max-evals', '200')
    assert status == campaigns.EXIT_PASS
    assert report['result']['best_value'] == pytest.approx(1.0, abs=1e-15)
    assert not report['violation']

def test_search_determinism(capsys, tmp_path):
    argv = ['search', '--functional', 'minkowski_alt', '--p', '2', '--n',
        '4', '--restarts', '4', '--max-evals', '300', '--seed', '7']
    payloads = []
    for name in ('first.json', 'second.json'):
        out = tmp_path.joinpath(name)
        assert altineq.main(argv + ['--out', str(out)]) == campaigns.EXIT_PASS
        report = json.loads(out.read_text(encoding='utf8'))
        report['manifest'].pop('timestamp')
        report['manifest'].pop('outputs')
        payloads.append(report)
    assert payloads[0] == payloads[1]
    assert payloads[0]['result']['seed'] == 7

@pytest.mark.slow
def test_search_minkowski(capsys):
    status, report = _run(capsys, 'search', '--functional', 'minkowski_alt',
        '--p', '2', '--n', '6', '--restarts', '64', '--seed', '7')
    assert status == campaigns.EXIT_PASS
    assert report['result']['gap'] <= 0.02

def test_series_eta(capsys):
    status, report = _run(capsys, 'series', 'eta', '--s', '2')
    assert status == campaigns.EXIT_PASS
    assert abs(report['eta']['value'] - math.pi**2/12.0) <= 1e-12
    status, report = _run(capsys, 'series', 'zeta', '--s', '2')
    assert abs(report['zeta']['value'] - math.pi**2/6.0) <= 1e-10

def test_series_F_scan(capsys):
    status, report = _run(capsys, 'series', 'F_scan', '--p', '2', '--grid',
        '0.25:3:0.25')
    summary = report['summary']
    assert status == campaigns.EXIT_PASS
    assert summary['violations'] == 0
    assert summary['max_F'] == pytest.approx(1.0, abs=2e-12)
    assert summary['argmax']['alpha'] == summary['argmax']['beta']
    assert summary['locus_equalities'] == summary['locus_points'] == 12

def test_series_checks(capsys):
    status, report = _run(capsys, 'series', 'geometric', '--a', '2',
        '--b', '2', '--p', '2')
    assert status == campaigns.EXIT_PASS
    assert report['equality'] and report['violations'] == 0
    status, report = _run(capsys, 'series', 'harmonic', '--alpha', '0.3',
        '--beta', '1.7', '--p', '2')
    assert status == campaigns.EXIT_PASS
    assert not report['equality']

def test_series_geometric_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(series, 'geometric_series',
        lambda x, terms=200: 1.0/(1.0 + x) + 1e-6)
    status, report = _run(capsys, 'series', 'geometric', '--a', '2',
        '--b', '3', '--p', '2')
    assert status == campaigns.EXIT_VIOLATION
    assert report['violations'] == 0
    assert not report['report']['extra']['series_consistent']

def test_tolerance_override(capsys, tmp_path):
    config = tmp_path.joinpath('altineqrc')
    config.write_text('tol_cmp: 1e-6\n', encoding='utf8')
    status, _ = _run(capsys, 'constants', '--box', '1,2,1,2',
        '--config', str(config))
    assert default('tol_cmp') == 1e-6
    status, _ = _run(capsys, 'constants', '--box', '1,2,1,2', '--tol', '1e-4')
    assert default('tol_cmp') == 1e-4

def test_text_format(capsys):
    status = altineq.main(['constants', '--quotient', '1,3', '--format',
        'text'])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'bougoffa_C 1.25'

def test_output_directory(capsys, tmp_path):
    config = tmp_path.joinpath('altineqrc')
    config.write_text(f'outdir: {tmp_path}\n', encoding='utf8')
    status = altineq.main(['series', 'zeta', '--s', '4', '--config',
        str(config), '--out', 'zeta.json'])
    assert status == campaigns.EXIT_PASS
    report = json.loads(tmp_path.joinpath('zeta.json').read_text(encoding='utf8'))
    assert abs(report['zeta']['value'] - math.pi**4/90.0) <= 1e-10
    assert report['manifest']['outputs'] == [str(tmp_path.joinpath('zeta.json'))]
