"""Acceptance bookkeeping: tests tagged ``@pytest.mark.criterion(n)`` roll up into one line per criterion."""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "family conformance of cyclic actions",
    2: "cyclic edge-action sweep (|V|<=7, |E|<=10)",
    3: "edge actions on K2^(lambda), lambda<=6",
    4: "symmetrical Euler cycle existence boundaries",
    5: "extender lifts of dihedral elements",
    6: "bi-coset group/graph equivalences",
    7: "automorphism group orders",
}

_outcomes: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test belongs to")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    _outcomes[marker.args[0]].append((item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n}: NOT RUN  {title}")
            continue
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        tail = f"  (failing: {', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {n}: {status}  {title} [{len(results)} checks]{tail}")


@pytest.fixture
def cap_env(monkeypatch):
    monkeypatch.delenv("EULERSYM_CAP", raising=False)
    return monkeypatch
