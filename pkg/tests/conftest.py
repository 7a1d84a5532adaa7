import pytest

from mecard import groups


@pytest.fixture(scope="session")
def D4():
    return groups.dihedral(4)


@pytest.fixture(scope="session")
def Q8():
    return groups.quaternion()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for res in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(res.line)
