from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pfaffkit import Params

# Numerators and denominators in [-9, 9], matching the randomized trials of the CLI.
small_rationals = st.builds(
    Fraction,
    st.integers(-9, 9),
    st.integers(-9, 9).filter(lambda d: d != 0),
)
params_strategy = st.builds(Params, small_rationals, small_rationals)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
