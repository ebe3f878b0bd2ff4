"""One test per acceptance criterion; each prints its pass/fail line."""

import pytest

from lcaduality import checks


@pytest.mark.parametrize("number", range(1, len(checks.CRITERIA) + 1))
def test_criterion(number):
    r = checks.run_criterion(number)
    print(r.line())
    assert r.ok, r.line()
