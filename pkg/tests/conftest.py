from __future__ import annotations

import pytest

from boxclique import pipeline

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def mc12():
    return pipeline.build_Mc(12)


@pytest.fixture(scope="session")
def flat12(mc12):
    return pipeline.build_Flat(12, mc=mc12)


@pytest.fixture(scope="session")
def flat13():
    return pipeline.build_Flat(13)


@pytest.fixture(scope="session")
def marozw(flat12):
    return pipeline.check_marozw(flat12)


@pytest.fixture
def accept():
    """Record one acceptance line: accept(n, ok, text)."""
    def rec(n: int, ok: bool | str, text: str) -> None:
        status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
        ACCEPTANCE[n] = (status, text)
    return rec


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in range(1, 13):
        status, text = ACCEPTANCE.get(n, ("NOT RUN", ""))
        tr.write_line(f"criterion {n:>2}: {status}  {text}")
