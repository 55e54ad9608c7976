import sys

import pytest

from gamma2.kernels import available_backends
from gamma2.rep import RepConfig


@pytest.fixture
def cfg_a():
    """eps0 = -7."""
    return RepConfig([(2, 1), (-1, 1)])


@pytest.fixture
def cfg_b():
    """eps0 = 1, so X1 X2 has order 6."""
    return RepConfig([(2, 1), (3, 1)])


@pytest.fixture
def cfg_c():
    """eps0 = 2; strongly distinct."""
    return RepConfig([(2, 1), (3, 2)], strict=True)


@pytest.fixture(params=sorted(available_backends()))
def kernel(request):
    return available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
