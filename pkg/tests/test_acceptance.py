"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from blowup_calc.acceptance import CRITERIA
from blowup_calc.chow import epsilon_override


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"{i:02d}_{c.__name__}" for i, c in enumerate(CRITERIA, 1)])
def test_criterion(criterion, capsys):
    with epsilon_override(1):
        result = criterion()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
