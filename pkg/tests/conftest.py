import random
import sys

import pytest
from hypothesis import strategies as st

words = st.text(alphabet="xD", max_size=10)


@st.composite
def dyck_words(draw, max_pairs=6):
    n = draw(st.integers(0, max_pairs))
    out, opened, closed = [], 0, 0
    while closed < n:
        can_open = opened < n
        can_close = closed < opened
        if can_open and (not can_close or draw(st.booleans())):
            out.append("x")
            opened += 1
        else:
            out.append("D")
            closed += 1
    return "".join(out)


@pytest.fixture
def rng():
    return random.Random(12345)


WORKED_WORD = "xxDxxDxDDD"


def pytest_terminal_summary(terminalreporter):
    test_acceptance = sys.modules.get("tests.test_acceptance")
    if test_acceptance is not None and test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
