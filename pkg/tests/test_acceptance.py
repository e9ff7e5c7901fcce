"""Exit criteria.  Each test prints its own [PASS]/[FAIL] line; the summary repeats them."""

import pytest

from polybn.acceptance import CRITERIA

RESULTS = []


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number]()
    RESULTS.append(result)
    print(result.line())
    assert result.passed, result.line()
