import warnings

import pytest
from hypothesis import settings

from cauchy_gabor import GaborLattice
from cauchy_gabor.oracle import TruncationWarning

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# (alpha, beta, w) sweep covering bands n = 1..4
SWEEP = [(1.0, 0.9, 0.1), (1.0, 0.7, 0.2), (1.0, 0.45, 0.1), (1.0, 0.3, 0.1), (1.0, 0.22, 0.15)]

ACCEPTANCE_LINES: dict[int, list[str]] = {}


def record(criterion: int, passed: bool, message: str) -> None:
    flag = "PASS" if passed else "FAIL"
    ACCEPTANCE_LINES.setdefault(criterion, []).append(f"{flag}  {message}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        lines = ACCEPTANCE_LINES[k]
        overall = "PASS" if all(line.startswith("PASS") for line in lines) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {overall}")
        for line in lines:
            terminalreporter.write_line(f"    {line}")


@pytest.fixture(params=SWEEP, ids=lambda p: "a{}-b{}-w{}".format(*p))
def sweep_lattice(request):
    return GaborLattice(*request.param)


@pytest.fixture
def quiet_truncation():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        yield
