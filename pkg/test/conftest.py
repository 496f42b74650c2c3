import pytest
import hypothesis
import inequality_toolkit.utilities

# property tests replay the same examples on every run
hypothesis.settings.register_profile('altineq', max_examples=100,
    deadline=None, derandomize=True)
hypothesis.settings.load_profile('altineq')

def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
        help="run full-size verification campaigns and searches")

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size campaign or search")

def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)

@pytest.fixture(autouse=True)
def packaged_defaults(monkeypatch):
    """Restore the packaged altineqrc defaults around every test
    """
    monkeypatch.delenv('ALTINEQ_THREADS', raising=False)
    inequality_toolkit.utilities.configure()
    yield
    inequality_toolkit.utilities.configure()
