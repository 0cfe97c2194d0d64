import functools

import pytest

from hocat.instances import all_instances, model_instances, plain_instances
from hocat.io import data_dir

ACCEPTANCE_LINES = []      # (criterion number, line)


@functools.lru_cache(maxsize=None)
def _models():
    return model_instances()


@functools.lru_cache(maxsize=None)
def _plain():
    return plain_instances()


@pytest.fixture(scope="session")
def models():
    return _models()


@pytest.fixture(scope="session")
def plain():
    return _plain()


@pytest.fixture(scope="session")
def instances():
    return all_instances()


@pytest.fixture(scope="session")
def data():
    return data_dir()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
