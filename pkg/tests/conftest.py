from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from sympladder.core import Line, Multisegment, Segment

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

RHO = Line("rho", 1, False, True)
CHI = Line("chi", 1, False, False)
RHO2 = Line("rho2", 2, False, False)
SC = Line("sigma", 1, True, False)


@st.composite
def segments(draw, line=RHO, lo=-2, hi=4, max_len=4, half=None):
    if half is None:
        half = draw(st.booleans())
    off = Fraction(1, 2) if half else Fraction(0)
    a = draw(st.integers(lo, hi))
    length = draw(st.integers(1, max_len))
    return Segment(line, a + off, a + off + length - 1)


@st.composite
def multisegments(draw, line=RHO, max_segs=4, lo=-2, hi=4, max_len=4):
    half = draw(st.booleans())
    segs = draw(st.lists(segments(line, lo, hi, max_len, half), max_size=max_segs))
    return Multisegment(line, segs)


@pytest.fixture
def rho():
    return RHO


@pytest.fixture
def chi():
    return CHI


@pytest.fixture
def rho2():
    return RHO2


@pytest.fixture
def sc():
    return SC


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
