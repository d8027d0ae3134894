import pytest

from diophcount import CountParams

ACCEPTANCE_LINES = []


@pytest.fixture
def P():
    return CountParams


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
