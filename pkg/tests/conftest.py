import pytest

from wtslab.fixtures import SYSTEMS, pointed_fixtures, sample_cofibrations

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def systems():
    return SYSTEMS


@pytest.fixture(scope="session")
def pointed():
    return pointed_fixtures()


@pytest.fixture(scope="session")
def cofibs():
    return sample_cofibrations()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key:>2}: {title}")
