"""Exact chromatic polynomials, colour-partition sequences and brute-force oracles.

The engine runs on raw adjacency bitmasks over a fixed label space; contracted
or deleted vertices simply leave the active vertex mask, so no relabelling
happens inside the recursion.
"""

from __future__ import annotations

from math import comb
from typing import Optional

from .graph import Graph, _block_vertex_masks, _component_masks
from .polynomial import (
    ASequence,
    Polynomial,
    falling_factorial,
    poly_mul,
    to_falling_factorial,
)

BRUTE_FORCE_LIMIT = 10**9


class SizeGuardError(ValueError):
    """Input too large for an exhaustive oracle."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _xpow(n: int) -> list[int]:
    return [0] * n + [1]


def _tree(n: int) -> list[int]:
    # x (x-1)^(n-1)
    out = [1]
    for _ in range(n - 1):
        out = poly_mul(out, [-1, 1])
    return [0] + out


def _cycle(n: int) -> list[int]:
    # (x-1)^n + (-1)^n (x-1)
    out = [1]
    for _ in range(n):
        out = poly_mul(out, [-1, 1])
    sign = 1 if n % 2 == 0 else -1
    out[0] += -sign
    out[1] += sign
    return out


def _restrict(adj: list[int], verts: int) -> list[int]:
    return [row & verts for row in adj]


def _key(adj: list[int], verts: int) -> tuple[int, ...]:
    labels = list(_bits(verts))
    index = {v: i for i, v in enumerate(labels)}
    return tuple(sum(1 << index[w] for w in _bits(adj[v])) for v in labels)


class _Engine:
    def __init__(self, memo: bool):
        self.memo: Optional[dict] = {} if memo else None

    def run(self, adj: list[int], verts: int) -> list[int]:
        if self.memo is not None:
            key = _key(adj, verts)
            hit = self.memo.get(key)
            if hit is None:
                hit = self.memo[key] = self._solve(adj, verts)
            return hit
        return self._solve(adj, verts)

    def _solve(self, adj: list[int], verts: int) -> list[int]:
        n = verts.bit_count()
        if n == 0:
            return [1]
        degs = {v: adj[v].bit_count() for v in _bits(verts)}
        m = sum(degs.values()) // 2
        if m == 0:
            return _xpow(n)
        if m == n * (n - 1) // 2:
            return list(falling_factorial(n).coeffs)

        comps = _component_masks(adj, verts)
        if len(comps) > 1:
            out = [1]
            for c in comps:
                out = poly_mul(out, self.run(_restrict(adj, c), c))
            return out

        if m == n - 1:
            return _tree(n)
        if m == n and all(d == 2 for d in degs.values()):
            return _cycle(n)

        blocks, _ = _block_vertex_masks(adj, verts)
        if len(blocks) > 1:
            # blocks overlap in single vertices (cliques of size 1): divide by x per join
            out = [1]
            for b in blocks:
                out = poly_mul(out, self.run(_restrict(adj, b), b))
            return out[len(blocks) - 1:]

        universal = next((v for v in degs if degs[v] == n - 1), None)
        if universal is not None:
            # a universal vertex takes a colour of its own: P(G, x) = x P(G - u, x - 1)
            rest = verts & ~(1 << universal)
            return [0] + _shift_down(self.run(_restrict(adj, rest), rest))

        split = _edge_separation(adj, verts)
        if split is not None:
            pieces = split
            out = [1]
            for piece in pieces:
                out = poly_mul(out, self.run(_restrict(adj, piece), piece))
            divisor = [1]
            for _ in range(len(pieces) - 1):
                divisor = poly_mul(divisor, [0, -1, 1])
            return list((Polynomial(out).exact_div(Polynomial(divisor))).coeffs)

        dense = 2 * m > comb(n, 2)
        if dense:
            # add a missing edge uv and contract: P(G) = P(G+uv) + P(G.uv)
            u = max((v for v in degs if degs[v] < n - 1), key=lambda v: (degs[v], -v))
            non_nbrs = verts & ~adj[u] & ~(1 << u)
            v = max(_bits(non_nbrs), key=lambda w: (degs[w], -w))
            plus = list(adj)
            plus[u] |= 1 << v
            plus[v] |= 1 << u
            first = self.run(plus, verts)
        else:
            u = max(degs, key=lambda v: (degs[v], -v))
            v = max(_bits(adj[u]), key=lambda w: (degs[w], -w))
            minus = list(adj)
            minus[u] &= ~(1 << v)
            minus[v] &= ~(1 << u)
            first = self.run(minus, verts)
        second = self.run(*_contract(adj, verts, u, v))
        if dense:
            return _add_shifted(first, second)
        return _sub_shifted(first, second)


def _contract(adj: list[int], verts: int, u: int, v: int) -> tuple[list[int], int]:
    out = list(adj)
    ub, vb = 1 << u, 1 << v
    merged = (adj[u] | adj[v]) & ~ub & ~vb
    for w in _bits(adj[v]):
        out[w] &= ~vb
    for w in _bits(merged):
        out[w] |= ub
    out[u] = merged
    out[v] = 0
    return out, verts & ~vb


def _edge_separation(adj: list[int], verts: int) -> Optional[list[int]]:
    """Pieces of a separation by an adjacent pair {u, v}, each piece including u and v."""
    for u in _bits(verts):
        for v in _bits(adj[u] >> (u + 1) << (u + 1)):
            pair = 1 << u | 1 << v
            comps = _component_masks(adj, verts & ~pair)
            if len(comps) > 1:
                return [c | pair for c in comps]
    return None


def _shift_down(c: list[int]) -> list[int]:
    """Coefficients of p(x - 1) given those of p(x)."""
    out = [0] * len(c)
    for i, ci in enumerate(c):
        if ci:
            binom = 1
            for j in range(i, -1, -1):
                # term ci * C(i, j) * x^j * (-1)^(i-j)
                out[j] += ci * binom * (-1 if (i - j) % 2 else 1)
                binom = binom * j // (i - j + 1)
    return out


def _add_shifted(a: list[int], b: list[int]) -> list[int]:
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _sub_shifted(a: list[int], b: list[int]) -> list[int]:
    out = list(a)
    for i, c in enumerate(b):
        out[i] -= c
    return out


def chromatic_polynomial(g: Graph, memo: bool = False) -> Polynomial:
    """Exact chromatic polynomial by deletion-contraction with structural shortcuts.

    Components multiply, blocks are glued across cut vertices (division by x per
    join), and edgeless graphs, complete graphs, trees and cycles use closed forms.
    Dense 2-connected pieces switch to edge addition-contraction, which heads
    toward complete graphs instead of away from them.
    """
    if g.n < 1:
        raise ValueError("chromatic polynomial requires at least one vertex")
    return Polynomial(_Engine(memo).run(list(g.adj), (1 << g.n) - 1))


def a_sequence(g: Graph, poly: Optional[Polynomial] = None) -> ASequence:
    return to_falling_factorial(poly if poly is not None else chromatic_polynomial(g))


def chromatic_number(g: Graph, poly: Optional[Polynomial] = None) -> int:
    p = poly if poly is not None else chromatic_polynomial(g)
    x = 1
    while p(x) <= 0:
        x += 1
    return x


def clique_cutset_glue(p1: Polynomial, p2: Polynomial, r: int) -> Polynomial:
    """Chromatic polynomial of two graphs glued along a common r-clique."""
    return (p1 * p2).exact_div(falling_factorial(r))


# ---------------------------------------------------------------- oracles

def brute_force_colorings(g: Graph, x: int) -> int:
    """Count proper colourings with colours ``0..x-1`` by plain backtracking.

    Only the final vertex is counted rather than enumerated.
    """
    if x < 0:
        raise ValueError("number of colours must be nonnegative")
    if g.n == 0:
        return 1
    if x ** g.n > BRUTE_FORCE_LIMIT and g.n > 16:
        raise SizeGuardError(f"{x}^{g.n} colourings is beyond the enumeration guard")
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[w] for w in g.neighbors(v) if pos[w] < i] for i, v in enumerate(order)]
    colour = [0] * g.n
    last = g.n - 1

    def go(i: int) -> int:
        if i == last:
            return x - len({colour[j] for j in earlier[i]})
        blocked = {colour[j] for j in earlier[i]}
        total = 0
        for c in range(x):
            if c not in blocked:
                colour[i] = c
                total += go(i + 1)
        return total

    return go(0)


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * g.n
    for s in sorted(range(g.n), key=lambda v: -g.degree(v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda w: -g.degree(w)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def brute_force_partitions(g: Graph, i: int) -> int:
    """Number of partitions of V(G) into exactly ``i`` nonempty independent sets."""
    if not 1 <= i <= g.n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={g.n}")
    if g.n > 12:
        raise SizeGuardError("set-partition enumeration limited to n <= 12")
    classes: list[int] = []

    def go(v: int) -> int:
        if v == g.n:
            return int(len(classes) == i)
        if len(classes) + (g.n - v) < i:
            return 0
        total = 0
        for idx, cls in enumerate(classes):
            if not cls & g.adj[v]:
                classes[idx] = cls | 1 << v
                total += go(v + 1)
                classes[idx] = cls
        if len(classes) < i:
            classes.append(1 << v)
            total += go(v + 1)
            classes.pop()
        return total

    return go(0)
