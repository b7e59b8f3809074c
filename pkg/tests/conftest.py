import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402
from sweeps import run_sweep  # noqa: E402


@pytest.fixture(scope="session")
def sweep():
    """All polynomials with degree 1..4, coefficients in [-3, 3], a_0 > 0."""
    return run_sweep(4, -3, 3)


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance_log.RESULTS):
        title, passed, detail = acceptance_log.RESULTS[number]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number}. {title}" + (f" -- {detail}" if detail else ""))
