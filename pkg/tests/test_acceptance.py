"""The twelve reproduction criteria, each at its own time limit.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion as it finishes; the lines are also repeated in the terminal summary.
"""

import pytest

from resicode.checks import CHECKS, Workspace, run_one

RESULTS: list[str] = []


@pytest.fixture(scope="module")
def workspace():
    return Workspace()


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, workspace):
    result = run_one(name, workspace)
    line = result.line()
    RESULTS.append(line)
    print(line)
    assert result.ok, line
