import pytest
from hypothesis import strategies as st

from specialcover.core import BlockPair, Decomposition

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one pass/fail line for the acceptance summary."""

    def record(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def decompositions(draw, max_n=6, max_m=6):
    """Valid decompositions over {1..m}: every slot is absent, first or second."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    slots = draw(st.lists(st.lists(st.sampled_from([None, 1, 0]), min_size=m, max_size=m), min_size=n, max_size=n))
    pairs = []
    for row in slots:
        if all(v is None for v in row):
            row = [1] + row[1:]
        first = frozenset(e + 1 for e, v in enumerate(row) if v == 1)
        second = frozenset(e + 1 for e, v in enumerate(row) if v == 0)
        pairs.append(BlockPair(first, second))
    return Decomposition.from_pairs(pairs)
