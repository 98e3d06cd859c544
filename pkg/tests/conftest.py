import pytest

from baxter import field

# One line per acceptance criterion, printed after the run so the gate is
# visible even under captured output.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance gate")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def f2():
    return field(2)


@pytest.fixture(scope="session")
def f4():
    return field(2, 2, 0b111)


@pytest.fixture(scope="session")
def f8():
    return field(2, 3, 0b1011)


@pytest.fixture(scope="session")
def f3():
    return field(3)
