import pytest

from polyshell import ideal_from_generators

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def sigma():
    """Maximal elements xy and z^2: M-shellable, not a discrete polymatroid."""
    return ideal_from_generators(3, [(1, 1, 0), (0, 0, 2)])


@pytest.fixture
def path_ideal():
    """Maximal elements xy and yz."""
    return ideal_from_generators(3, [(1, 1, 0), (0, 1, 1)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
