import pytest
from hypothesis import settings, strategies as st

from tropcommute.matrix import TropMatrix, TropVector, parse_matrix
from tropcommute.semiring import BOTTOM

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

EXAMPLE_A = "0.166 0.861; -0.62 -0.76"

_acceptance_lines: list[str] = []


@pytest.fixture
def example_a() -> TropMatrix:
    return parse_matrix(EXAMPLE_A)


@pytest.fixture
def criterion():
    """Record a one-line acceptance verdict, echoed in the terminal summary."""

    def record(number: int, title: str, passed: bool, detail: str = ""):
        line = f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {title}"
        if detail:
            line += f" -- {detail}"
        _acceptance_lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)


# --- shared hypothesis strategies -----------------------------------------

int_scalars = st.one_of(st.just(BOTTOM), st.integers(-50, 50).map(float))
small_scalars = st.one_of(st.just(BOTTOM), st.integers(-5, 5).map(float))
real_scalars = st.one_of(
    st.just(BOTTOM), st.floats(-100, 100, allow_nan=False, allow_infinity=False)
)


def vectors(dim: int, elements=int_scalars):
    return st.lists(elements, min_size=dim, max_size=dim).map(TropVector)


def matrices(rows: int, cols: int, elements=int_scalars):
    return st.lists(elements, min_size=rows * cols, max_size=rows * cols).map(
        lambda e: TropMatrix(rows, cols, tuple(e))
    )


finite_2x2 = st.lists(
    st.floats(-10, 10, allow_nan=False, allow_infinity=False), min_size=4, max_size=4
).map(lambda e: TropMatrix(2, 2, tuple(e)))
