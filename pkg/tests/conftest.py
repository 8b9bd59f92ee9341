from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from recongraph.catalog import catalog
from recongraph.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def small_catalog() -> list[Graph]:
    return catalog(4)


@pytest.fixture(scope="session")
def catalog5() -> list[Graph]:
    return catalog(5)


@pytest.fixture(scope="session")
def catalog6() -> list[Graph]:
    return catalog(6)


_CRITERIA: list[tuple[int, str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    detail = dict(item.user_properties).get("detail", "")
    number, title = marker.args
    _CRITERIA.append((number, title, "PASS" if report.passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, verdict, detail in sorted(_CRITERIA):
        line = f"{verdict} criterion {number:>2}: {title}"
        terminalreporter.write_line(line + (f" [{detail}]" if detail else ""))
