"""One test per acceptance criterion; each prints a PASS/FAIL line (visible with -s or in the report)."""

import pytest

from orbihrr.acceptance import CRITERIA, AcceptanceConfig

CONFIG = AcceptanceConfig()


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    result = criterion(CONFIG)
    print(result.line())
    for failure in result.failures:
        print("  ", failure)
    assert result.passed, result.line()
