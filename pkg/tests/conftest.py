import random

import pytest
from hypothesis import strategies as st

from nadslab.shift import Point

bits = st.text(alphabet="01", max_size=32)
nonempty_bits = st.text(alphabet="01", min_size=1, max_size=32)


@st.composite
def points(draw, max_len=32):
    pre = draw(st.text(alphabet="01", max_size=max_len))
    per = draw(st.text(alphabet="01", min_size=1, max_size=max_len))
    return Point(pre, per)


def random_point(rng: random.Random, max_len: int = 32) -> Point:
    pre = "".join(rng.choice("01") for _ in range(rng.randint(0, max_len)))
    per = "".join(rng.choice("01") for _ in range(rng.randint(1, max_len)))
    return Point(pre, per)


_acceptance_lines: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail summary for an acceptance criterion."""
    lines = {}

    def record(label):
        lines["label"] = label

    yield record
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    _acceptance_lines.append(f"{status}  {lines.get('label', request.node.name)}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
