import pytest

from dbtorus.gf import make_field
from dbtorus.torus import build_torus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 4)


@pytest.fixture(scope="session")
def torus35(f16):
    return build_torus(f16, 3, 5)


@pytest.fixture(scope="session")
def f64():
    return make_field(2, 6)


@pytest.fixture(scope="session")
def torus79(f64):
    return build_torus(f64, 7, 9)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
