"""Corpus-scale checks of the colouring bounds and conjectures, and extremal search.

Each check returns a :class:`ScanFinding` whose witness holds decimal strings
that can be re-derived from the graph6 id alone (see :func:`reverify`).
"""

from __future__ import annotations

import json
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .bounds import (
    connected_bound_rhs,
    ear_bound_polynomial,
    improved_bound,
    tomescu_bound,
    tomescu_threshold,
)
from .chrompoly import a_sequence, chromatic_number, chromatic_polynomial
from .graph import (
    Graph,
    Graph6Error,
    biconnected_blocks,
    is_clique_plus_leaves,
    is_connected,
    is_k_connected,
    max_degree,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .polynomial import ASequence, Polynomial, falling_factorial_value

HOLDS, EQUALITY, VIOLATED, INAPPLICABLE = "holds", "equality", "violated", "inapplicable"
STATUSES = (HOLDS, EQUALITY, VIOLATED, INAPPLICABLE)
CORPUS_ENV = "CHROMABOUND_CORPUS_DIR"
DATA_DIR = Path(__file__).resolve().parent / "data"


class CorpusError(ValueError):
    pass


def _num(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def _parse_num(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class ScanFinding:
    graph_id: str
    check: str
    status: str
    witness: dict = field(default_factory=dict)
    note: str = ""

    def to_json(self) -> dict:
        out = {"id": self.graph_id, "check": self.check, "status": self.status, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class GraphFacts:
    """Lazily computed invariants shared by all checks on one graph."""

    def __init__(self, g: Graph, graph_id: Optional[str] = None, poly: Optional[Polynomial] = None):
        self.g = g
        self.id = graph_id if graph_id is not None else write_graph6(g)
        self._poly = poly
        self._k: Optional[int] = None
        self._connected: Optional[bool] = None

    @property
    def poly(self) -> Polynomial:
        if self._poly is None:
            self._poly = chromatic_polynomial(self.g)
        return self._poly

    @property
    def k(self) -> int:
        if self._k is None:
            self._k = chromatic_number(self.g, self.poly)
        return self._k

    @property
    def connected(self) -> bool:
        if self._connected is None:
            self._connected = is_connected(self.g)
        return self._connected


def _facts(g: Graph | GraphFacts) -> GraphFacts:
    return g if isinstance(g, GraphFacts) else GraphFacts(g)


def _compare(facts: GraphFacts, check: str, pairs: Sequence[tuple], equality_from: int = 0) -> ScanFinding:
    """Build a finding from (x, lhs, rhs) triples; equality counts only for x >= equality_from."""
    if not pairs:
        return ScanFinding(facts.id, check, INAPPLICABLE, note="no evaluation points")
    worst = max(pairs, key=lambda t: t[1] - t[2])
    if worst[1] > worst[2]:
        status, wit = VIOLATED, worst
    else:
        eq = [t for t in pairs if t[1] == t[2] and t[0] >= equality_from]
        status, wit = (EQUALITY, eq[0]) if eq else (HOLDS, worst)
    x, lhs, rhs = wit
    return ScanFinding(facts.id, check, status, {"x": _num(x), "lhs": _num(lhs), "rhs": _num(rhs)})


# ---------------------------------------------------------------- checks

def check_tomescu_bound(g, xs: Iterable[int]) -> ScanFinding:
    """P(G, x) <= (x)_k x^(n-k); at x >= k equality should single out K_k plus isolated vertices."""
    f = _facts(g)
    n, k = f.g.n, f.k
    pairs = [(x, f.poly(x), tomescu_bound(n, k, x)) for x in xs]
    finding = _compare(f, "tomescu", pairs, equality_from=k)
    extremal = f.g.m == comb(k, 2) and sum(1 for d in f.g.degrees() if d) == (k if k > 1 else 0)
    eq_ge_k = [x for x, lhs, rhs in pairs if x >= k and lhs == rhs]
    if finding.status != VIOLATED:
        if eq_ge_k and not extremal:
            finding.status = VIOLATED
            finding.note = "equality at x >= k on a graph other than K_k plus isolated vertices"
        elif extremal and any(x >= k for x in xs) and len(eq_ge_k) != sum(1 for x in xs if x >= k):
            finding.status = VIOLATED
            finding.note = "K_k plus isolated vertices missed equality"
    return finding


def check_improved_bound(g, xs: Iterable[int]) -> ScanFinding:
    f = _facts(g)
    n, k, delta = f.g.n, f.k, max_degree(f.g)
    pairs = [(x, f.poly(x), improved_bound(n, k, delta, x)) for x in xs]
    return _compare(f, "improved", pairs, equality_from=k)


def check_connected_conjecture(g, xs: Iterable[int]) -> ScanFinding:
    """P(G, x) <= (x)_k (x-1)^(n-k) for connected k-chromatic G with k >= 4.

    Equality at some x >= k must coincide with G being a k-clique with
    recursively attached leaves; a mismatch in either direction is reported
    as a violation of the equality characterisation.
    """
    f = _facts(g)
    if not f.connected or f.k < 4:
        return ScanFinding(f.id, "connected", INAPPLICABLE, note="needs connected graph with k >= 4")
    n, k = f.g.n, f.k
    xs = list(xs)
    pairs = [(x, f.poly(x), connected_bound_rhs(n, k, x)) for x in xs]
    finding = _compare(f, "connected", pairs, equality_from=k)
    if finding.status == VIOLATED:
        finding.note = "inequality fails: counterexample candidate"
        return finding
    member = is_clique_plus_leaves(f.g, k)
    finding.witness["clique_plus_leaves"] = member
    eq_xs = [x for x, lhs, rhs in pairs if x >= k and lhs == rhs]
    high = [x for x in xs if x >= k]
    if eq_xs and not member:
        finding.status = VIOLATED
        finding.note = "equality without clique-plus-leaves structure"
    elif member and len(eq_xs) != len(high):
        finding.status = VIOLATED
        finding.note = "clique-plus-leaves graph without equality"
    return finding


def threshold_points(graph_id: str, threshold: int, samples: int = 3) -> list[Fraction]:
    """Smallest integer above the threshold plus reproducible random rationals above it."""
    rng = random.Random(graph_id)
    points = [Fraction(threshold + 1)]
    for _ in range(samples):
        points.append(threshold + Fraction(rng.randint(1, 10**6), rng.randint(1, 10**3)))
    return points


def check_threshold_theorem(g, samples: int = 3) -> ScanFinding:
    """Strict P(G, x)/(x)_k < (x-1)^(n-k) above the large-x threshold, for G outside the extremal family."""
    f = _facts(g)
    if not f.connected or f.k < 4:
        return ScanFinding(f.id, "threshold", INAPPLICABLE, note="needs connected graph with k >= 4")
    if is_clique_plus_leaves(f.g, f.k):
        return ScanFinding(f.id, "threshold", INAPPLICABLE, note="graph is a clique with pendant trees")
    n, k = f.g.n, f.k
    t = tomescu_threshold(n, k)
    worst = None
    for x in threshold_points(f.id, t, samples):
        lhs = f.poly(x) / falling_factorial_value(x, k)
        rhs = (x - 1) ** (n - k)
        if worst is None or lhs - rhs > worst[1] - worst[2]:
            worst = (x, lhs, rhs)
    x, lhs, rhs = worst
    status = VIOLATED if lhs >= rhs else HOLDS
    return ScanFinding(
        f.id, "threshold", status,
        {"x": _num(x), "lhs": _num(lhs), "rhs": _num(rhs), "threshold": str(t)},
    )


def check_ear_conjecture(g, xs: Iterable[int]) -> ScanFinding:
    """P(G, x) <= (x)_k P(C_{n-k+2}, x) / (x (x-1)) for 2-connected G, n > k >= 4, x >= k."""
    f = _facts(g)
    if not f.connected or f.g.n < 3 or f.k < 4 or f.g.n <= f.k:
        return ScanFinding(f.id, "ear", INAPPLICABLE, note="needs 2-connected graph with n > k >= 4")
    if len(biconnected_blocks(f.g).blocks) != 1:
        return ScanFinding(f.id, "ear", INAPPLICABLE, note="not 2-connected")
    n, k = f.g.n, f.k
    rhs_poly = ear_bound_polynomial(n, k)
    pairs = [(x, f.poly(x), rhs_poly(x)) for x in xs if x >= k]
    finding = _compare(f, "ear", pairs, equality_from=k)
    if finding.status == EQUALITY:
        # heuristic only: size of K_k plus one ear, within a single block
        finding.witness["ear_structure"] = f.g.m == comb(k, 2) + n - k + 1
    if finding.status == VIOLATED:
        finding.note = "inequality fails: counterexample candidate"
    return finding


def check_block_lemma(g, x: int) -> ScanFinding:
    """P(G, x) x^(t-1) equals the product of the block polynomials at x."""
    f = _facts(g)
    if not f.connected:
        return ScanFinding(f.id, "block", INAPPLICABLE, note="needs a connected graph")
    blocks = biconnected_blocks(f.g).blocks
    lhs = f.poly(x) * x ** (len(blocks) - 1)
    rhs = 1
    for b in blocks:
        rhs *= chromatic_polynomial(b.graph)(x)
    status = HOLDS if lhs == rhs else VIOLATED
    return ScanFinding(f.id, "block", status, {"x": _num(x), "lhs": _num(lhs), "rhs": _num(rhs), "blocks": len(blocks)})


CHECKS: dict[str, Callable[[GraphFacts, Sequence[int]], ScanFinding]] = {
    "tomescu": check_tomescu_bound,
    "improved": check_improved_bound,
    "connected": check_connected_conjecture,
    "threshold": lambda f, xs: check_threshold_theorem(f),
    "ear": check_ear_conjecture,
    "block": lambda f, xs: check_block_lemma(f, max(xs) if xs else f.g.n),
}
CONJECTURE_CHECKS = ("connected", "ear")


def _witness_values(finding: ScanFinding) -> tuple[str, str]:
    f = GraphFacts(parse_graph6(finding.graph_id), finding.graph_id)
    x = _parse_num(finding.witness["x"])
    n, k = f.g.n, f.k
    if finding.check == "tomescu":
        lhs, rhs = f.poly(x), tomescu_bound(n, k, int(x))
    elif finding.check == "improved":
        lhs, rhs = f.poly(x), improved_bound(n, k, max_degree(f.g), int(x))
    elif finding.check == "connected":
        lhs, rhs = f.poly(x), connected_bound_rhs(n, k, int(x))
    elif finding.check == "threshold":
        lhs, rhs = f.poly(x) / falling_factorial_value(x, k), (x - 1) ** (n - k)
    elif finding.check == "ear":
        lhs, rhs = f.poly(x), ear_bound_polynomial(n, k)(x)
    elif finding.check == "block":
        blocks = biconnected_blocks(f.g).blocks
        lhs = f.poly(x) * x ** (len(blocks) - 1)
        rhs = 1
        for b in blocks:
            rhs *= chromatic_polynomial(b.graph)(x)
    else:
        raise ValueError(f"unknown check {finding.check!r}")
    return _num(Fraction(lhs)), _num(Fraction(rhs))


def reverify(finding: ScanFinding) -> bool:
    """Recompute lhs and rhs from the stored id and x; True iff both strings match."""
    if "x" not in finding.witness:
        return finding.status == INAPPLICABLE
    return _witness_values(finding) == (finding.witness["lhs"], finding.witness["rhs"])


# ---------------------------------------------------------------- corpus

@dataclass(frozen=True)
class GraphFilter:
    order: Optional[int] = None
    chromatic: Optional[int] = None
    connectivity: Optional[int] = None

    def describe(self) -> str:
        parts = []
        if self.order is not None:
            parts.append(f"order {self.order}")
        if self.connectivity:
            parts.append(f"{self.connectivity}-connected")
        if self.chromatic is not None:
            parts.append(f"{self.chromatic}-chromatic")
        return ", ".join(parts) or "all graphs"

    def accepts(self, facts: GraphFacts) -> bool:
        g = facts.g
        if self.order is not None and g.n != self.order:
            return False
        if self.connectivity:
            if g.n <= self.connectivity or not is_k_connected(g, self.connectivity):
                return False
        if self.chromatic is not None and facts.k != self.chromatic:
            return False
        return True


def resolve_corpus(path: str | os.PathLike) -> Path:
    """A literal path, or a bare corpus name looked up in $CHROMABOUND_CORPUS_DIR then the bundled data."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name if p.suffix else p.name + ".g6"
    for base in filter(None, (os.environ.get(CORPUS_ENV), str(DATA_DIR))):
        cand = Path(base) / name
        if cand.exists():
            return cand
    raise FileNotFoundError(f"corpus {str(path)!r} not found")


def iter_corpus(path: str | os.PathLike) -> Iterator[tuple[str, Graph]]:
    with open(resolve_corpus(path), encoding="ascii", errors="strict") as fh:
        try:
            for _, gid, g in read_graph6_lines(fh):
                yield gid, g
        except Graph6Error as exc:
            raise CorpusError(str(exc)) from None
        except UnicodeDecodeError as exc:
            raise CorpusError(f"non-ASCII byte in corpus: {exc}") from None


def _scan_one(args) -> list[ScanFinding]:
    gid, checks, xs, flt = args
    facts = GraphFacts(parse_graph6(gid), gid)
    if flt is not None and not flt.accepts(facts):
        return []
    return [CHECKS[name](facts, xs) for name in checks]


def scan_records(
    records: Iterable[tuple[str, Graph]],
    checks: Sequence[str],
    xs: Sequence[int],
    flt: Optional[GraphFilter] = None,
    jobs: int = 1,
) -> Iterator[ScanFinding]:
    """Apply the named checks to every graph passing the filter, in input order."""
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; choose from {sorted(CHECKS)}")
    tasks = ((gid, tuple(checks), tuple(xs), flt) for gid, _ in records)
    if jobs <= 1:
        for t in tasks:
            yield from _scan_one(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_scan_one, tasks, chunksize=32):
            yield from batch


def scan_corpus(path, checks, xs, flt=None, jobs: int = 1) -> Iterator[ScanFinding]:
    return scan_records(iter_corpus(path), checks, xs, flt, jobs)


def summarize(findings: Iterable[ScanFinding]) -> dict[str, dict[str, int]]:
    counts: dict[str, Counter] = {}
    for f in findings:
        counts.setdefault(f.check, Counter())[f.status] += 1
    return {c: {s: counts[c][s] for s in STATUSES} for c in sorted(counts)}


# ---------------------------------------------------------------- extremal

@dataclass
class ExtremalResult:
    constraint: str
    x: int
    considered: int
    max_count: Optional[int]
    argmax: list[str]
    a_sequences: dict[str, ASequence]

    def to_json(self) -> dict:
        return {
            "constraint": self.constraint,
            "x": self.x,
            "considered": self.considered,
            "max_count": None if self.max_count is None else str(self.max_count),
            "argmax": self.argmax,
            "a_sequences": {k: v.to_json() for k, v in self.a_sequences.items()},
        }


def filtered_facts(records: Iterable[tuple[str, Graph]], flt: GraphFilter) -> list[GraphFacts]:
    out = []
    for gid, g in records:
        facts = GraphFacts(g, gid)
        if flt.accepts(facts):
            out.append(facts)
    return out


def extremal_from_facts(pool: Sequence[GraphFacts], x: int, constraint: str) -> ExtremalResult:
    if not pool:
        return ExtremalResult(constraint, x, 0, None, [], {})
    counts = [(f.poly(x), f) for f in pool]
    best = max(c for c, _ in counts)
    winners = sorted((f for c, f in counts if c == best), key=lambda f: f.id)
    return ExtremalResult(
        constraint, x, len(pool), best,
        [f.id for f in winners],
        {f.id: a_sequence(f.g, f.poly) for f in winners},
    )


def extremal_search(records: Iterable[tuple[str, Graph]], x: int, flt: GraphFilter) -> ExtremalResult:
    """Maximum number of x-colourings over the filtered corpus, with every maximiser."""
    return extremal_from_facts(filtered_facts(records, flt), x, flt.describe())


@dataclass
class DominanceReport:
    dominant: list[str]
    incomparable: list[tuple[str, str]]

    def to_json(self) -> dict:
        return {"dominant": self.dominant, "incomparable": [list(p) for p in self.incomparable]}


def _as_tuple(a) -> tuple[int, ...]:
    return a.values if isinstance(a, ASequence) else tuple(a)


def dominance_check(results: Sequence[tuple[str, ASequence | Sequence[int]]]) -> DominanceReport:
    """Find sequences that termwise dominate all others; otherwise list incomparable pairs."""
    seqs = [(gid, _as_tuple(a)) for gid, a in results]
    lengths = {len(s) for _, s in seqs}
    if len(lengths) > 1:
        raise ValueError("all sequences must have the same length")

    def geq(a, b):
        return all(x >= y for x, y in zip(a, b))

    dominant = [gid for gid, s in seqs if all(geq(s, t) for _, t in seqs)]
    incomparable = []
    if not dominant:
        for i, (ga, sa) in enumerate(seqs):
            for gb, sb in seqs[i + 1:]:
                if not geq(sa, sb) and not geq(sb, sa):
                    incomparable.append((ga, gb))
    return DominanceReport(dominant, incomparable)


# Values stated for the 3-connected 3-chromatic order-8 class: the graph with
# most 3-colourings (G) and the one with most 4-colourings (H).
CLAIMED_ORDER8 = {
    "max_3_colourings": 66,
    "G_4_colourings": 2060,
    "H_4_colourings": 2140,
    "G_a_sequence": (11, 74, 124, 71, 15, 1),
    "H_a_sequence": (8, 82, 144, 60, 16, 1),
}


def order8_extremal_comparison(records: Iterable[tuple[str, Graph]]) -> dict:
    """Recompute the order-8, 3-connected, 3-chromatic extremal graphs and diff against the claims.

    Returns computed values, the claims, and a list of discrepancies.
    """
    flt = GraphFilter(order=8, chromatic=3, connectivity=3)
    pool = filtered_facts(records, flt)
    at3 = extremal_from_facts(pool, 3, flt.describe())
    at4 = extremal_from_facts(pool, 4, flt.describe())
    computed: dict = {"class_size": len(pool), "max_3_colourings": at3.max_count,
                      "argmax_3": at3.argmax, "argmax_4": at4.argmax}
    if at3.argmax:
        g_id = at3.argmax[0]
        g_facts = next(f for f in pool if f.id == g_id)
        computed["G_4_colourings"] = g_facts.poly(4)
        computed["G_a_sequence"] = at3.a_sequences[g_id].nonzero_tail()
        computed["G_a_sequence_value_at_4"] = at3.a_sequences[g_id].evaluate(4)
    if at4.argmax:
        h_id = at4.argmax[0]
        computed["H_4_colourings"] = at4.max_count
        computed["H_a_sequence"] = at4.a_sequences[h_id].nonzero_tail()
    claimed_g = CLAIMED_ORDER8["G_a_sequence"]
    claimed_h = CLAIMED_ORDER8["H_a_sequence"]
    computed["claimed_G_sequence_value_at_4"] = ASequence((0, 0) + claimed_g).evaluate(4)
    computed["claimed_H_sequence_value_at_4"] = ASequence((0, 0) + claimed_h).evaluate(4)
    discrepancies = [
        {"item": key, "claimed": _num(val) if isinstance(val, int) else list(val),
         "computed": _num(computed.get(key)) if isinstance(computed.get(key), int) else list(computed.get(key) or ())}
        for key, val in CLAIMED_ORDER8.items()
        if computed.get(key) != val
    ]
    if computed["claimed_G_sequence_value_at_4"] != CLAIMED_ORDER8["G_4_colourings"]:
        discrepancies.append({"item": "claimed G sequence vs claimed G count",
                              "claimed": str(CLAIMED_ORDER8["G_4_colourings"]),
                              "computed": str(computed["claimed_G_sequence_value_at_4"])})
    if computed["claimed_H_sequence_value_at_4"] != CLAIMED_ORDER8["H_4_colourings"]:
        discrepancies.append({"item": "claimed H sequence vs claimed H count",
                              "claimed": str(CLAIMED_ORDER8["H_4_colourings"]),
                              "computed": str(computed["claimed_H_sequence_value_at_4"])})
    return {
        "computed": computed,
        "claimed": CLAIMED_ORDER8,
        "unique_argmax_3": len(at3.argmax) == 1,
        "dominance": dominance_check([(i, at3.a_sequences[i]) for i in at3.argmax]
                                     + [(i, at4.a_sequences[i]) for i in at4.argmax if i not in at3.argmax]).to_json(),
        "discrepancies": discrepancies,
    }
