import pytest

from aqpnn import experiments
from aqpnn.encoding import builtin_dataset

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def trained():
    """Trained models for the built-in experiments, keyed by name."""
    cache = {}

    def get(name, seed=0):
        key = (name, seed)
        if key not in cache:
            cache[key] = experiments.repro(name, seed=seed)[0]
        return cache[key]

    return get


@pytest.fixture
def xor_dataset():
    return builtin_dataset("xor")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
