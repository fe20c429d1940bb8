import numpy as np
import pytest

GRID = (-0.9, -0.5, -0.1, 0.1, 0.5, 0.9, -2.0, 2.0, -5.0, 5.0)
INSIDE = tuple(a for a in GRID if abs(a) < 1)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
