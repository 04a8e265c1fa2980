import pytest

from hpseudo.algebra import battery
from hpseudo.hopf import EnvelopingAlgebra

BATTERY = battery()


@pytest.fixture(params=sorted(BATTERY))
def any_spec(request):
    return BATTERY[request.param]


@pytest.fixture
def A2():
    return BATTERY["A2"]


@pytest.fixture
def F2():
    return BATTERY["F2"]


@pytest.fixture
def X2():
    return BATTERY["X2"]


@pytest.fixture
def A4():
    return BATTERY["A4"]


def H_of(name):
    return EnvelopingAlgebra(BATTERY[name])


def pytest_terminal_summary(terminalreporter):
    # test_acceptance records one line per criterion
    from tests_support import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
