from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from fcgames.arena import Arena

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ALPHABETS = {
    "priority": st.integers(0, 4),
    "weight": st.integers(-3, 3),
    "payoff": st.fractions(Fraction(-3), Fraction(3), max_denominator=3).map(
        lambda f: int(f) if f.denominator == 1 else f),
    "pair": st.tuples(st.integers(0, 3), st.integers(-2, 2)),
}


@st.composite
def arenas(draw, kind=None, min_n=1, max_n=5, owner=None, max_outdeg=3):
    kind = kind or draw(st.sampled_from(sorted(ALPHABETS)))
    n = draw(st.integers(min_n, max_n))
    names = [f"v{i + 1}" for i in range(n)]
    owners = {v: owner if owner is not None else draw(st.integers(0, 1)) for v in names}
    label = {}
    for v in names:
        succ = draw(st.lists(st.sampled_from(names), min_size=1,
                             max_size=min(max_outdeg, n), unique=True))
        for w in succ:
            label[v, w] = draw(ALPHABETS[kind])
    return Arena(kind, owners, label)


# --- acceptance reporting ----------------------------------------------------

ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        ACCEPTANCE[num] = (item.name, "PASS" if rep.passed else "FAIL")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, verdict = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  ({name})")
