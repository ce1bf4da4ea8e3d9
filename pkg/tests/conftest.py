import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rgcages.atlas import figures  # noqa: E402
from rgcages.constructions import projective_incidence_graph  # noqa: E402


@pytest.fixture(scope="session")
def petersen():
    return figures.petersen()


@pytest.fixture(scope="session")
def heawood():
    return figures.heawood()


@pytest.fixture(scope="session")
def mcgee():
    return figures.mcgee()


@pytest.fixture(scope="session")
def robertson():
    return figures.robertson()


@pytest.fixture(scope="session")
def pg3():
    return projective_incidence_graph(3)


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, secs, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {desc}")
