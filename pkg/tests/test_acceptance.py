"""Acceptance suite: runs every bundled verification check at its stated
budget and prints one pass/fail line per criterion.

The same checks back the CLI's ``verify-paper`` subcommand.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the lines as they
complete.
"""

import pytest

from cordial.verify import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=[c.name for c in ALL_CHECKS])
def test_acceptance_criterion(check):
    result = check.run()
    status = "PASS" if result.passed else "FAIL"
    line = f"{status}  {result.name}  ({result.elapsed:.2f}s)  {result.details}"
    print(line)
    assert result.passed, line
