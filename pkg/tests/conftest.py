import pathlib

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"

ACCEPTANCE_LINES = []


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
