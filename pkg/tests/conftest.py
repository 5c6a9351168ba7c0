import numpy as np
import pytest
from hypothesis import strategies as st

from neutrosophic import make_triple

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)


@st.composite
def triples(draw):
    return make_triple(draw(unit), draw(unit), draw(unit))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# acceptance criteria report one line each at the end of the run
_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; passes unless the test body raises.

    Calling it again with the same name updates the detail."""
    records: dict[str, str] = {}

    def record(name, detail=""):
        records[name] = detail

    yield record
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    for name, detail in records.items():
        _criteria.append((name, ok, detail))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
