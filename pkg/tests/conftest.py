import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from verschiebung.kummer import KummerCoeffs  # noqa: E402
from verschiebung.reconstruct import build_and_solve  # noqa: E402


@lru_cache(maxsize=None)
def symbolic_map(p: int):
    k = KummerCoeffs.symbolic(p)
    return k, build_and_solve(p, k)


@pytest.fixture(scope="session")
def derived():
    return symbolic_map


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
