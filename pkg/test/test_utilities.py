"""
test_utilities.py (10/2026)
Verify the run parameter layering and the report writers
"""
import json
import pytest
import numpy as np
import hypothesis.strategies as st
from hypothesis import given
import inequality_toolkit.utilities as utilities

@pytest.fixture
def threads_config(tmp_path):
    config = tmp_path.joinpath('altineqrc')
    config.write_text('# user parameters\nthreads: 4\n', encoding='utf8')
    return config

def test_config_threads(threads_config):
    parameters = utilities.get_parameters(threads_config)
    assert parameters['threads'] == 4
    assert parameters['tol_cmp'] == 1e-9

@pytest.mark.parametrize("environ, expected", [('1', 1), ('2', 2), ('8', 4)])
def test_environment_caps_threads(threads_config, monkeypatch,
    environ, expected):
    monkeypatch.setenv('ALTINEQ_THREADS', environ)
    assert utilities.get_parameters(threads_config)['threads'] == expected
    # explicit overrides are capped as well
    assert utilities.get_parameters(threads=16)['threads'] == \
        min(16, int(environ))

def test_environment_never_raises_threads(monkeypatch):
    monkeypatch.setenv('ALTINEQ_THREADS', '8')
    assert utilities.get_parameters()['threads'] == 1

def test_unknown_parameter(tmp_path):
    config = tmp_path.joinpath('altineqrc')
    config.write_text('workers: 4\n', encoding='utf8')
    with pytest.raises(ValueError):
        utilities.get_parameters(config)

@given(st.floats(allow_nan=False, allow_infinity=False))
def test_dumps_exact(value):
    # shortest repr floats read back to the identical double
    record = json.loads(utilities.dumps(dict(x=value, y=np.float64(value))))
    assert record['x'] == value
    assert record['y'] == value

def test_dumps_non_finite():
    record = json.loads(utilities.dumps(dict(x=np.inf, y=[np.nan, 0.1+0.2])))
    assert record == dict(x='inf', y=['nan', 0.30000000000000004])

def test_write_csv(tmp_path):
    filename = utilities.write_csv(tmp_path.joinpath('trace.csv'),
        ['b', 'ratio'], [[10.0, 0.1+0.2], [100.0, np.float64(1.0)/3.0]])
    lines = filename.read_text(encoding='utf8').split('\n')
    assert lines[0] == 'b,ratio'
    assert lines[1] == '10,0.30000000000000004'
    assert float(lines[2].split(',')[1]) == 1.0/3.0
    assert lines[-1] == ''
