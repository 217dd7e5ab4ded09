import pytest

from cosetposet import BinaryMatrix, build_code

EXAMPLE1 = ["11110", "00111"]
EXAMPLE2 = ["111100", "001111"]
MATRIX_M = ["100011", "010101", "001110"]
MATRIX_N = ["10000110", "01000101", "00100010", "00010001", "00001111"]
HAMMING = ["1000011", "0100101", "0010110", "0001111"]

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def code_from(rows):
    return build_code(BinaryMatrix.from_strings(rows))


def parity_code(n):
    """The [n, n-1] even-weight code."""
    rows = ["0" * i + "1" + "0" * (n - 2 - i) + "1" for i in range(n - 1)]
    return code_from(rows)


@pytest.fixture
def ex1():
    return code_from(EXAMPLE1)


@pytest.fixture
def ex2():
    return code_from(EXAMPLE2)


@pytest.fixture
def code_m():
    return code_from(MATRIX_M)


@pytest.fixture
def code_n():
    return code_from(MATRIX_N)


@pytest.fixture
def hamming():
    return code_from(HAMMING)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
