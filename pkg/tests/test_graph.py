from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromabound.graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    attach_ear,
    attach_leaf,
    biconnected_blocks,
    clique_number,
    complement,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_clique_plus_leaves,
    is_connected,
    is_k_connected,
    max_degree,
    parse_adjlist,
    parse_graph6,
    path_graph,
    petersen_graph,
    read_graph6_lines,
    star_graph,
    write_adjlist,
    write_graph6,
)

from .conftest import graphs


def reference_graph6(n, edges):
    """Encoder written straight from the format description (n <= 62)."""
    edge_set = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in edge_set else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(63 + int(bits[p:p + 6], 2)) for p in range(0, len(bits), 6))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# ---------------------------------------------------------------- graph6

def test_parse_star_round_trip():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert write_graph6(g) == "D?{" == reference_graph6(5, g.edges())


def test_single_vertex():
    g = parse_graph6("@")
    assert (g.n, g.m) == (1, 0)
    assert write_graph6(empty_graph(1)) == "@"


def test_k4():
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)
    assert g == complete_graph(4)
    assert write_graph6(complete_graph(4)) == "C~" == reference_graph6(4, combinations(range(4), 2))


def test_header_is_skipped():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)
    lines = [">>graph6<<C~\n", "\n", "@\n"]
    assert [gid for _, gid, _ in read_graph6_lines(lines)] == ["C~", "@"]


@pytest.mark.parametrize("bad, offset", [("C~~", 2), ("C", 1), ("C\x7f", 1), ("", 0), ("D?@", 2)])
def test_malformed_graph6_reports_offset(bad, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(bad)
    assert info.value.offset == offset


def test_line_numbers_in_stream_errors():
    with pytest.raises(Graph6Error, match="line 3"):
        list(read_graph6_lines(["C~", "@", "C~~"]))


def test_long_form_length():
    g = path_graph(70)
    s = write_graph6(g)
    assert s.startswith("~")
    assert s.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert parse_graph6(s) == g


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_graph6_round_trip(g):
    s = write_graph6(g)
    assert parse_graph6(s) == g
    assert s == reference_graph6(g.n, g.edges())


def test_adjlist_round_trip():
    g = petersen_graph()
    assert parse_adjlist(write_adjlist(g)) == g
    with pytest.raises(GraphError):
        parse_adjlist("3 2\n0 1\n")


# ---------------------------------------------------------------- construction

def test_invalid_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])


# ---------------------------------------------------------------- edits

def test_add_edge():
    assert add_edge(empty_graph(2), 0, 1) == complete_graph(2)
    p3 = path_graph(3)
    assert add_edge(p3, 0, 2) == cycle_graph(3)
    assert p3.m == 2
    with pytest.raises(GraphError):
        add_edge(p3, 0, 1)
    with pytest.raises(GraphError):
        add_edge(p3, 1, 1)


@given(graphs(min_n=2), st.data())
def test_add_edge_increments_size(g, data):
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert add_edge(g, u, v).m == g.m + 1


def test_contract_opposite_c4_vertices():
    h = contract_edge(cycle_graph(4), 0, 2)
    assert (h.n, h.m) == (3, 2)
    # merged vertex 0 is the centre of a path on 3 vertices
    assert h.degree(0) == 2 and not h.has_edge(1, 2)


def test_contract_k2():
    assert contract_edge(complete_graph(2), 0, 1) == empty_graph(1)
    with pytest.raises(GraphError):
        contract_edge(complete_graph(2), 1, 1)


@given(graphs(min_n=2), st.data())
def test_contract_size_arithmetic(g, data):
    u, v = data.draw(st.sampled_from(list(combinations(range(g.n), 2))))
    common = (g.adj[u] & g.adj[v]).bit_count()
    h = contract_edge(g, u, v)
    assert h.n == g.n - 1
    assert h.m == g.m - common - int(g.has_edge(u, v))


def test_max_degree():
    assert max_degree(complete_graph(5)) == 4
    assert max_degree(star_graph(7)) == 6
    assert max_degree(empty_graph(4)) == 0


def test_complement():
    assert complement(complete_graph(5)) == empty_graph(5)
    c5c = complement(cycle_graph(5))
    assert nx.is_isomorphic(to_nx(c5c), to_nx(cycle_graph(5)))
    # explicit adjacency: i ~ i+2 mod 5
    assert sorted(c5c.edges()) == sorted(tuple(sorted((i, (i + 2) % 5))) for i in range(5))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).m == comb(g.n, 2) - g.m


# ---------------------------------------------------------------- structure

def test_connectivity():
    assert is_connected(empty_graph(1))
    assert not is_connected(empty_graph(2))
    assert len(connected_components(empty_graph(2))) == 2
    assert is_connected(cycle_graph(5))


@given(graphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(c.degrees()) for c in connected_components(g))
    theirs = sorted(sorted(d for _, d in to_nx(g).subgraph(c).degree()) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
    assert sum(c.n for c in connected_components(g)) == g.n


def test_blocks_of_tree():
    dec = biconnected_blocks(path_graph(6))
    assert len(dec.blocks) == 5
    assert all(b.graph == complete_graph(2) for b in dec.blocks)
    assert dec.articulation_vertices == frozenset({1, 2, 3, 4})


def test_blocks_of_cycle():
    dec = biconnected_blocks(cycle_graph(5))
    assert len(dec.blocks) == 1 and dec.blocks[0].graph.m == 5
    assert not dec.articulation_vertices


def test_blocks_of_k4_with_pendant():
    dec = biconnected_blocks(attach_leaf(complete_graph(4), 0))
    sizes = sorted(b.graph.n for b in dec.blocks)
    assert sizes == [2, 4]
    assert dec.articulation_vertices == frozenset({0})


def test_blocks_require_connected():
    with pytest.raises(GraphError):
        biconnected_blocks(empty_graph(2))


@given(graphs(connected=True))
def test_block_partition_properties(g):
    dec = biconnected_blocks(g)
    t = len(dec.blocks)
    assert sum(b.graph.n for b in dec.blocks) == g.n + t - 1
    seen = []
    for b in dec.blocks:
        for u, v in b.graph.edges():
            seen.append(tuple(sorted((b.labels[u], b.labels[v]))))
    assert sorted(seen) == sorted(g.edges())
    if g.n > 1:
        h = to_nx(g)
        assert t == len(list(nx.biconnected_components(h)))
        assert dec.articulation_vertices == frozenset(nx.articulation_points(h))


def test_clique_plus_leaves_examples():
    k4 = complete_graph(4)
    assert is_clique_plus_leaves(k4, 4)
    chain = attach_leaf(attach_leaf(attach_leaf(k4, 2), 4), 5)
    assert is_clique_plus_leaves(chain, 4)
    assert not any(is_clique_plus_leaves(cycle_graph(5), k) for k in range(2, 6))
    assert is_clique_plus_leaves(path_graph(5), 2)


def test_clique_plus_leaves_matches_size_and_clique_form(corpus):
    for f in corpus.connected_upto(8):
        g = f.g
        omega = clique_number(g)
        for k in range(2, g.n + 1):
            expected = g.m == comb(k, 2) + g.n - k and omega == k
            assert is_clique_plus_leaves(g, k) == expected, f.id


def test_k_connectivity_examples():
    assert is_k_connected(cycle_graph(6), 2)
    assert not is_k_connected(cycle_graph(6), 3)
    assert is_k_connected(complete_graph(5), 4)
    k4_minus = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_k_connected(k4_minus, 2)
    assert not is_k_connected(k4_minus, 3)
    with pytest.raises(GraphError):
        is_k_connected(complete_graph(3), 3)


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=8), st.integers(1, 3))
def test_k_connectivity_matches_networkx(g, l):
    assert is_k_connected(g, l) == (nx.node_connectivity(to_nx(g)) >= l)


def test_ear_and_induced_subgraph():
    g = attach_ear(complete_graph(4), 0, 1, 2)
    assert (g.n, g.m) == (6, 9)
    sub, labels = induced_subgraph(g, [4, 5, 0])
    assert labels == (0, 4, 5) and sub.m == 2


def test_clique_number():
    assert clique_number(petersen_graph()) == 2
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(empty_graph(3)) == 1
