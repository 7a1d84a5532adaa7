"""The acceptance criteria, one test each, at their stated limits.

A pass/fail line per criterion is printed as it runs and again in the
terminal summary.
"""

import pytest

from mecard import acceptance

RESULTS: list = []


@pytest.mark.parametrize("number", [c[0] for c in acceptance.CRITERIA], ids=lambda n: f"criterion_{n}")
def test_criterion(number):
    res = acceptance.run_criterion(number, acceptance.DEFAULT_SEED)
    RESULTS.append(res)
    print(res.line)
    assert res.passed, "\n".join(res.failures)
