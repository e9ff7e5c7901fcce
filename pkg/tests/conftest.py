from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

import pytest

from polybn.enumeration import enumerate_by_interior_points


@pytest.fixture(scope="session")
def interior_corpus():
    """Representatives of every polygon class with 1..9 interior points."""
    return [c.representative for g in range(1, 10) for c in enumerate_by_interior_points(g)]


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())
