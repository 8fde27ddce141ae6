import pytest

from tricensus import kernels


@pytest.fixture(params=sorted(kernels.implementations()))
def impl(request):
    """Each available kernel backend in turn."""
    return kernels.implementations()[request.param]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
