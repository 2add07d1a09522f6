import pytest

from invmod import modforms

PREC = 25


@pytest.fixture(scope="session")
def e2():
    return modforms.eisenstein(2, PREC)


@pytest.fixture(scope="session")
def e4():
    return modforms.eisenstein(4, PREC)


@pytest.fixture(scope="session")
def e6():
    return modforms.eisenstein(6, PREC)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Call with (number, ok, detail); prints and records one PASS/FAIL line."""

    def report(number, ok, detail=""):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
