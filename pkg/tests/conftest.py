import pytest
from hypothesis import HealthCheck, settings

from symscheme.acceptance import constructed

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def y0333():
    return constructed(1, 0, 3, 3)


@pytest.fixture(scope="session")
def y1143():
    return constructed(1, 1, 4, 3)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import ACCEPTANCE_KEY

    results = config.stash.get(ACCEPTANCE_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for res in sorted(results, key=lambda r: r.number):
        terminalreporter.write_line(res.line())
        for d in res.details:
            terminalreporter.write_line("      " + str(d))
