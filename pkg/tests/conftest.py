import sys
from pathlib import Path as FsPath

import pytest

sys.path.insert(0, str(FsPath(__file__).parent))

from uniserial import AlgebraPresentation, Arrow, Quiver, load_example  # noqa: E402

MAST_2 = "a5*a4*a3*a1*a2*a1"
SEQ_2 = "1 2 1 2 3 2 4"


@pytest.fixture
def ex2a():
    return load_example("ex2a")


@pytest.fixture
def ex2b():
    return load_example("ex2b")


@pytest.fixture
def quiver2(ex2a):
    return ex2a.quiver


def two_loops(l: int) -> AlgebraPresentation:
    """One vertex, loops a and b, every path of length l+1 vanishes."""
    q = Quiver(["1"], [Arrow("a", "1", "1"), Arrow("b", "1", "1")])
    return AlgebraPresentation(q, [], l + 1)


@pytest.fixture
def data_dir():
    return FsPath(__file__).parent.parent / "src" / "uniserial" / "data"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
