"""Shared fixtures and the acceptance-summary reporter."""
from __future__ import annotations

import pytest

# acceptance tests append "criterion NN [PASS|FAIL] ..." lines here so the
# terminal summary shows one line per criterion even without -s
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus():
    """Connected-graph representatives by order, shared across test files."""
    from starcut.corpus import enumerate_connected

    return enumerate_connected
