from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from chromabound.chrompoly import chromatic_polynomial
from chromabound.graph import Graph, read_graph6_lines
from chromabound.lab import DATA_DIR, GraphFacts

_CRITERIA: dict[int, tuple[str, str]] = {}


def load_corpus(name: str) -> list[tuple[str, Graph]]:
    with open(DATA_DIR / f"{name}.g6") as fh:
        return [(gid, g) for _, gid, g in read_graph6_lines(fh)]


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
    if connected:
        # a random spanning tree keeps the draw connected
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))


class Corpus:
    """Every graph up to order 8, with chromatic polynomials computed once per session."""

    def __init__(self):
        self._facts: dict[str, list[GraphFacts]] = {}

    def facts(self, name: str) -> list[GraphFacts]:
        if name not in self._facts:
            self._facts[name] = [
                GraphFacts(g, gid, chromatic_polynomial(g)) for gid, g in load_corpus(name)
            ]
        return self._facts[name]

    def connected_upto(self, n: int) -> list[GraphFacts]:
        return [f for i in range(1, n + 1) for f in self.facts(f"connected{i}")]

    def all_upto(self, n: int) -> list[GraphFacts]:
        return [f for i in range(1, n + 1) for f in self.facts(f"graphs{i}")]

    def connected(self, n: int) -> list[GraphFacts]:
        # share polynomial work with the all-graphs corpus
        by_id = {f.id: f for f in self.facts(f"graphs{n}")}
        return [by_id[gid] for gid, _ in load_corpus(f"connected{n}")]


@pytest.fixture(scope="session")
def corpus() -> Corpus:
    return Corpus()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    if call.excinfo is not None:
        _CRITERIA[number] = (title, "FAIL")
    elif call.when == "call" and number not in _CRITERIA:
        _CRITERIA[number] = (title, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title}")
