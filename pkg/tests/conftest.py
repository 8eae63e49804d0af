"""Independent reference computations (sympy) shared by the tests."""
import pytest
import sympy as sp

X = sp.symbols("x")


def sympy_det(A):
    return int(sp.Matrix(A).det(method="bareiss")) if A else 1


def sympy_rank(A):
    return sp.Matrix(A).rank()


def sympy_char_coeffs(A):
    """Coefficients of det(xI - A), constant term first."""
    return [int(c) for c in reversed(sp.Matrix(A).charpoly(X).all_coeffs())]


@pytest.fixture
def four_cycle():
    return [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]


ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
