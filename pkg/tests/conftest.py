import numpy as np
import pytest

from pnc4.hypercube import build_codebook
from pnc4.selection import MapSelector


@pytest.fixture(scope="session")
def codebook():
    return build_codebook(workers=1)


@pytest.fixture(scope="session")
def selector(codebook):
    return MapSelector(codebook)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


GENERIC_H = np.array([1, 3, 9, 27], dtype=complex)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES = {}


def record(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {name}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
