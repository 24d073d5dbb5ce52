"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Graphs are immutable values.  Every operation that changes the structure
returns a new :class:`Graph`; vertex labels are recompacted to ``0..n'-1``
after vertex deletion or contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised when a graph operation's precondition is violated."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} adjacent to a vertex out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                w ^= low
        object.__setattr__(self, "m", sum(r.bit_count() for r in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- families

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices (centre 0)."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def circulant_graph(n: int, jumps: Sequence[int]) -> Graph:
    edges = {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps}
    return Graph.from_edges(n, (e for e in edges if e[0] != e[1]))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two poles joined by three internally disjoint paths with a, b, c inner vertices.

    At most one of a, b, c may be zero (the paths would otherwise coincide).
    """
    if sorted((a, b, c))[:2].count(0) > 1:
        raise GraphError("at most one theta path may be a direct edge")
    n = 2 + a + b + c
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(r << g.n for r in h.adj))


def attach_leaf(g: Graph, v: int) -> Graph:
    """Add a new vertex ``g.n`` adjacent only to ``v``."""
    rows = list(g.adj) + [1 << v]
    rows[v] |= 1 << g.n
    return Graph(g.n + 1, tuple(rows))


def attach_ear(g: Graph, u: int, v: int, inner: int) -> Graph:
    """Attach a path with ``inner`` new internal vertices between ``u`` and ``v``."""
    if inner < 1 and (u == v or g.has_edge(u, v)):
        raise GraphError("an ear without inner vertices would create a loop or parallel edge")
    edges = list(g.edges())
    prev = u
    for i in range(inner):
        edges.append((prev, g.n + i))
        prev = g.n + i
    edges.append((prev, v))
    return Graph.from_edges(g.n + inner, edges)


# ---------------------------------------------------------------- graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    if g.n < 1:
        raise GraphError("graph6 output requires at least one vertex")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[p : p + 6])), 2)) for p in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte length prefix", base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte length prefix", base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing garbage after adjacency data", base + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, graph6, graph)`` for each nonblank line.

    A leading ``>>graph6<<`` header is accepted on any line.  Parse errors are
    re-raised with the 1-based line number prepended.
    """
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
            if not text:
                continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None
        yield lineno, text, g


def parse_adjlist(text: str) -> Graph:
    """Debug format: first line ``n m``, then one ``u v`` pair per line."""
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} follow")
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise GraphError("duplicate edges in adjacency list")
    return g


def write_adjlist(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------- edits

def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError("cannot add a self-loop")
    if g.has_edge(u, v):
        raise GraphError(f"{u} and {v} are already adjacent")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"{u} and {v} are not adjacent")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``; also returns the new-to-old label map."""
    labels = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        rows.append(sum(1 << index[w] for w in _bits(g.adj[v]) if w in index))
    return Graph(len(labels), tuple(rows)), labels


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (w for w in range(g.n) if w != v))[0]


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Identify ``u`` and ``v`` (adjacent or not), keeping the graph simple.

    The merged vertex keeps the smaller label's position; labels above the
    removed one shift down by one.
    """
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    keep, drop = min(u, v), max(u, v)
    rows = list(g.adj)
    merged = (rows[keep] | rows[drop]) & ~(1 << keep) & ~(1 << drop)
    for w in _bits(rows[drop]):
        rows[w] &= ~(1 << drop)
    for w in _bits(merged):
        rows[w] |= 1 << keep
    rows[keep] = merged
    rows[drop] = 0
    return induced_subgraph(Graph(g.n, tuple(rows)), (w for w in range(g.n) if w != drop))[0]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def max_degree(g: Graph) -> int:
    if g.n < 1:
        raise GraphError("max_degree of the null graph is undefined")
    return max(g.degrees())


# ---------------------------------------------------------------- structure

def _component_masks(adj: Sequence[int], verts: int) -> list[int]:
    comps = []
    rest = verts
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            reach = 0
            for w in _bits(frontier):
                reach |= adj[w]
            frontier = reach & verts & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(_component_masks(g.adj, (1 << g.n) - 1)) <= 1


def connected_components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, _bits(c))[0] for c in _component_masks(g.adj, (1 << g.n) - 1)]


@dataclass(frozen=True)
class Block:
    graph: Graph
    labels: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    articulation_vertices: frozenset[int]


def _block_vertex_masks(adj: Sequence[int], verts: int) -> tuple[list[int], int]:
    """Blocks (as vertex masks) and articulation vertices of a connected vertex set.

    Iterative Hopcroft-Tarjan on the induced subgraph.
    """
    root = (verts & -verts).bit_length() - 1
    if verts == 1 << root:
        return [verts], 0
    disc = {root: 0}
    low = {root: 0}
    counter = 1
    blocks: list[int] = []
    cut = 0
    vstack = [root]
    stack = [(root, -1, adj[root] & verts)]
    root_children = 0
    while stack:
        v, parent, todo = stack[-1]
        if todo:
            low_bit = todo & -todo
            w = low_bit.bit_length() - 1
            stack[-1] = (v, parent, todo ^ low_bit)
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                vstack.append(w)
                stack.append((w, v, adj[w] & verts))
                if v == root:
                    root_children += 1
            elif w != parent:
                low[v] = min(low[v], disc[w])
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            mask = 1 << parent
            while True:
                x = vstack.pop()
                mask |= 1 << x
                if x == v:
                    break
            blocks.append(mask)
            if parent != root:
                cut |= 1 << parent
    if root_children > 1:
        cut |= 1 << root
    return blocks, cut


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    if g.n == 0 or not is_connected(g):
        raise GraphError("block decomposition needs a connected, nonempty graph")
    masks, cut = _block_vertex_masks(g.adj, (1 << g.n) - 1)
    blocks = []
    for mask in masks:
        sub, labels = induced_subgraph(g, _bits(mask))
        blocks.append(Block(sub, labels))
    return BlockDecomposition(tuple(blocks), frozenset(_bits(cut)))


def clique_number(g: Graph) -> int:
    """Brute-force clique number; fine for the small graphs used in sweeps."""
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + cand.bit_count() <= best:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(cand & g.adj[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def is_clique_plus_leaves(g: Graph, k: int) -> bool:
    """True iff stripping pendant vertices one at a time leaves exactly ``K_k``."""
    if k < 2 or g.n < k or not is_connected(g):
        return False
    adj = list(g.adj)
    verts = (1 << g.n) - 1
    remaining = g.n
    while remaining > k:
        leaf = next((v for v in _bits(verts) if (adj[v] & verts).bit_count() == 1), None)
        if leaf is None:
            return False
        verts &= ~(1 << leaf)
        remaining -= 1
    return all((adj[v] & verts).bit_count() == k - 1 for v in _bits(verts))


def is_k_connected(g: Graph, l: int) -> bool:
    """Vertex connectivity at least ``l``, checked by removing every set of < l vertices."""
    if g.n <= l:
        raise GraphError(f"{l}-connectivity needs more than {l} vertices")
    full = (1 << g.n) - 1
    for size in range(l):
        for cut in combinations(range(g.n), size):
            rest = full
            for v in cut:
                rest &= ~(1 << v)
            if len(_component_masks(g.adj, rest)) != 1:
                return False
    return True


def non_edge_count(g: Graph) -> int:
    return comb(g.n, 2) - g.m
