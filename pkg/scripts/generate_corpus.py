#!/usr/bin/env python3
"""Generate the checked-in graph6 corpora (all graphs up to isomorphism, n <= 8).

n <= 7 comes from the networkx graph atlas.  n = 8 is built by adding one
vertex to every 7-vertex graph in all 128 ways and keeping one representative
per isomorphism class (WL-hash buckets, then exact VF2 checks).

Writes graphs{n}.g6 (all graphs) and connected{n}.g6 (connected ones) into
src/chromabound/data/.  Expected counts (OEIS A000088 / A001349):
all 1,2,4,11,34,156,1044,12346; connected 1,1,2,6,21,112,853,11117.

Usage:
    python scripts/generate_corpus.py [--max-n 8] [--out DIR]
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chromabound.graph import Graph, is_connected, write_graph6  # noqa: E402

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def to_graph(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def atlas_by_order(max_n: int) -> dict[int, list[nx.Graph]]:
    out: dict[int, list[nx.Graph]] = defaultdict(list)
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n:
            out[n].append(h)
    return out


def extend(prev: list[nx.Graph]) -> list[nx.Graph]:
    n = prev[0].number_of_nodes()
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    reps: list[nx.Graph] = []
    for h in prev:
        for mask in range(1 << n):
            g = h.copy()
            g.add_node(n)
            g.add_edges_from((n, v) for v in range(n) if mask >> v & 1)
            key = (
                g.number_of_edges(),
                tuple(sorted(d for _, d in g.degree())),
                nx.weisfeiler_lehman_graph_hash(g, iterations=3),
            )
            bucket = buckets[key]
            if any(nx.is_isomorphic(g, other) for other in bucket):
                continue
            bucket.append(g)
            reps.append(g)
    return reps


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "src" / "chromabound" / "data",
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    by_order = atlas_by_order(min(args.max_n, 7))
    for n in range(8, args.max_n + 1):
        t0 = time.time()
        by_order[n] = extend(by_order[n - 1])
        print(f"n={n}: extended in {time.time() - t0:.1f}s", file=sys.stderr)

    for n in range(1, args.max_n + 1):
        graphs = [to_graph(h) for h in by_order[n]]
        graphs.sort(key=lambda g: (g.m, write_graph6(g)))
        conn = [g for g in graphs if is_connected(g)]
        if n in ALL_COUNTS and (len(graphs), len(conn)) != (ALL_COUNTS[n], CONNECTED_COUNTS[n]):
            print(f"n={n}: got {len(graphs)}/{len(conn)} graphs, expected "
                  f"{ALL_COUNTS[n]}/{CONNECTED_COUNTS[n]}", file=sys.stderr)
            return 1
        (args.out / f"graphs{n}.g6").write_text("".join(write_graph6(g) + "\n" for g in graphs))
        (args.out / f"connected{n}.g6").write_text("".join(write_graph6(g) + "\n" for g in conn))
        print(f"n={n}: {len(graphs)} graphs, {len(conn)} connected")
    return 0


if __name__ == "__main__":
    sys.exit(main())
