"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary."""
import pytest

from symscheme.acceptance import CHECKS, run_check


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number, request):
    res = run_check(number)
    request.config.stash.setdefault(ACCEPTANCE_KEY, []).append(res)
    print(res.line())
    assert res.passed, "\n".join(str(d) for d in res.details)


ACCEPTANCE_KEY = pytest.StashKey[list]()
