"""Shared fixtures and the acceptance-summary reporter.

The acceptance tests record one (number, name, passed) triple each; after
the run, a terminal-summary section prints one line per criterion so the
overall verdict is readable without scrolling through tracebacks.
"""

import pytest

from blochsums import ScanGrid

_ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def acceptance_recorder():
    def record(number: int, name: str, passed: bool) -> None:
        _ACCEPTANCE_RESULTS.append((number, name, passed))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance summary")
    for number, name, passed in sorted(_ACCEPTANCE_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number:02d} [{name}]: {verdict}")


@pytest.fixture(scope="session")
def default_grid():
    return ScanGrid()


@pytest.fixture(scope="session")
def light_grid():
    """Smaller sample counts and truncation for fast structural tests."""
    return ScanGrid(sample_count=10, truncation=128)
