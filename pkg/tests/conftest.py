import pytest

from fracft import build_basis, gaussian_signal, make_grid

# verdict lines appended by the acceptance tests, echoed after the run
_criterion_lines = []


@pytest.fixture(scope="session")
def grid():
    """Default desk-scale grid shared across the suite."""
    return make_grid(10.0, 1024)


@pytest.fixture(scope="session")
def basis(grid):
    # order 45 covers the m <= 40 spectral tests and the m <= 30 scans
    return build_basis(grid, 45)


@pytest.fixture(scope="session")
def unit_gaussian(grid):
    return gaussian_signal(grid)


@pytest.fixture(scope="session")
def shifted_gaussian(grid):
    return gaussian_signal(grid, center=1.0)


@pytest.fixture(scope="session")
def criterion_log():
    return _criterion_lines


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
