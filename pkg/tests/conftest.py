import pytest

from zeta_audit import StripPoint, find_zeros


@pytest.fixture(scope="session")
def first_zeros():
    return find_zeros(0.0, 30.0)


@pytest.fixture(scope="session")
def first_zero(first_zeros):
    return StripPoint(0.5, first_zeros[0].b)


@pytest.fixture(scope="session")
def control_point():
    return StripPoint(0.5, 10.0)


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record and print one pass/fail line for an acceptance criterion."""

    def report(number: int, passed: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
