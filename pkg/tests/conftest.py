import pytest

from pisano_legendre import kernels

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
