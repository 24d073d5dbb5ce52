"""Closed-form colouring bounds, Cauchy root bounds and chromatic-root disc sets.

Every inequality evaluated at an integer or rational point uses exact
arithmetic.  Floating point appears only for root radii and moduli, and those
values are rounded outward (upward) so containment checks cannot fail
spuriously.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chrompoly import a_sequence, chromatic_number, chromatic_polynomial
from .graph import Graph, max_degree, write_graph6
from .polynomial import ASequence, Polynomial, falling_factorial, falling_factorial_value

SOKAL_CONSTANT = 7.964
FERNANDEZ_PROCACCI_CONSTANT = 6.908
SQRT2 = math.sqrt(2.0)

CAUCHY_REL_TOL = 1e-12
CAUCHY_MAX_ITER = 200

CSV_COLUMNS = ("id", "n", "m", "k", "delta", "tomescu", "improved", "modulus", "sokal", "fp", "threshold")


class BoundError(ValueError):
    pass


class CauchyConvergenceError(RuntimeError):
    def __init__(self, lo: float, hi: float):
        super().__init__(f"Cauchy bisection did not converge: bracket [{lo!r}, {hi!r}]")
        self.bracket = (lo, hi)


def _up(x: float, ulps: int = 2) -> float:
    for _ in range(ulps):
        x = math.nextafter(x, math.inf)
    return x


def non_edges(n: int, m: int) -> int:
    return math.comb(n, 2) - m


# ---------------------------------------------------------------- counting bounds

def tomescu_bound(n: int, k: int, x: int) -> int:
    """(x)_k * x^(n-k): the maximum colouring count over all k-chromatic graphs of order n."""
    if not 1 <= k <= n:
        raise BoundError(f"need 1 <= k <= n, got k={k}, n={n}")
    return falling_factorial_value(x, k) * x ** (n - k)


def improved_bound(n: int, k: int, delta: int, x: int) -> int:
    """(x)_k (x-1)^(delta-k+1) x^(n-1-delta) for a k-chromatic graph with maximum degree delta."""
    if not 1 <= k <= n:
        raise BoundError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not k - 1 <= delta <= n - 1:
        raise BoundError(f"maximum degree {delta} outside [{k - 1}, {n - 1}]")
    return falling_factorial_value(x, k) * (x - 1) ** (delta - k + 1) * x ** (n - 1 - delta)


def partition_count_bound(n: int, m: int, i: int) -> Fraction:
    """Upper bound (C(n,2) - m)^(n-i) / (n-i)! on the number of i-colour partitions."""
    if not 1 <= i <= n - 1:
        raise BoundError(f"need 1 <= i <= n-1, got i={i}, n={n}")
    return Fraction(non_edges(n, m) ** (n - i), math.factorial(n - i))


def tomescu_threshold(n: int, k: int) -> int:
    """Point beyond which a non-extremal connected k-chromatic graph (k >= 4) has
    strictly fewer colourings than a clique with pendant trees."""
    if k < 4:
        raise BoundError("the large-x threshold needs k >= 4")
    if k > n:
        raise BoundError(f"need k <= n, got k={k}, n={n}")
    return n - 2 + (math.comb(n, 2) - math.comb(k, 2) - n + k) ** 2


def connected_bound_rhs(n: int, k: int, x: int) -> int:
    return falling_factorial_value(x, k) * (x - 1) ** (n - k)


def cycle_polynomial(length: int) -> Polynomial:
    base = Polynomial([-1, 1])
    return base ** length + base * (1 if length % 2 == 0 else -1)


def ear_bound_polynomial(n: int, k: int) -> Polynomial:
    """(x)_k * P(C_{n-k+2}, x) / (x (x-1)), divided exactly before any evaluation."""
    if not n > k >= 2:
        raise BoundError(f"ear bound needs n > k >= 2, got n={n}, k={k}")
    return (falling_factorial(k) * cycle_polynomial(n - k + 2)).exact_div(Polynomial([0, -1, 1]))


def ear_bound_rhs(n: int, k: int, x: int) -> int:
    return ear_bound_polynomial(n, k)(x)


# ---------------------------------------------------------------- Cauchy bound

def _cauchy_gap(mags: Sequence[int], x: Fraction) -> Fraction:
    d = len(mags) - 1
    lower = 0
    for c in reversed(mags[:-1]):
        lower = lower * x + c
    return mags[-1] * x ** d - lower


def cauchy_bound(coeffs: Sequence[int]) -> float:
    """Unique positive root of |c_d| x^d = sum_{i<d} |c_i| x^i; 0 for a monomial.

    Bisection with exact sign evaluation; returns the upper end of the final
    bracket, so the result never sits below the true root.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise BoundError("the zero polynomial has no Cauchy bound")
    if len(c) < 2:
        raise BoundError("Cauchy bound needs degree >= 1")
    mags = [abs(int(v)) for v in c]
    if not any(mags[:-1]):
        return 0.0
    lo, hi = 0.0, _up(1.0 + max(Fraction(v, mags[-1]) for v in mags[:-1]).__float__())
    while _cauchy_gap(mags, Fraction(hi)) < 0:
        hi *= 2
    for _ in range(CAUCHY_MAX_ITER):
        if hi - lo <= CAUCHY_REL_TOL * hi:
            return hi
        mid = lo + (hi - lo) / 2
        if mid <= lo or mid >= hi:
            return hi
        if _cauchy_gap(mags, Fraction(mid)) < 0:
            lo = mid
        else:
            hi = mid
    raise CauchyConvergenceError(lo, hi)


def cauchy_bound_estimate(coeffs: Sequence[int]) -> float:
    """2 * max_i |c_i / c_d|^(1/(d-i)), rounded up."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if len(c) < 2:
        raise BoundError("Cauchy bound estimate needs degree >= 1")
    d = len(c) - 1
    lead = abs(c[-1])
    best = 0.0
    for i, ci in enumerate(c[:-1]):
        if ci:
            best = max(best, (abs(ci) / lead) ** (1.0 / (d - i)))
    return _up(2.0 * best, 4)


# ---------------------------------------------------------------- discs

@dataclass(frozen=True)
class DiscSet:
    integer_roots: tuple[int, ...]
    centers: tuple[float, ...]
    radius: float

    def contains(self, z: complex, tol: Optional[float] = None) -> bool:
        return self.distance(z, tol) <= 0.0

    def default_tol(self) -> float:
        return 1e-9 * (1.0 + self.radius)

    def distance(self, z: complex, tol: Optional[float] = None) -> float:
        """How far ``z`` lies outside the region (<= 0 means inside, tolerance included)."""
        t = self.default_tol() if tol is None else tol
        gaps = [abs(z - j) - t for j in self.integer_roots]
        gaps += [abs(z - c) - (self.radius + t) for c in self.centers]
        return min(gaps) if gaps else math.inf

    def scaled(self, factor: float) -> "DiscSet":
        return DiscSet(self.integer_roots, self.centers, self.radius * factor)

    def to_json(self) -> dict:
        return {"integer_roots": list(self.integer_roots), "centers": list(self.centers), "radius": self.radius}


def disc_centers(n: int, m: int, k: int) -> tuple[float, ...]:
    """k, k+1, ..., n-2 and the shifted last node n-1-(C(n,2)-m); n-k centers in all."""
    if n == k:
        return ()
    return tuple(float(c) for c in range(k, n - 1)) + (float(n - 1 - non_edges(n, m)),)


def gapped_polynomial(a: ASequence) -> Polynomial:
    """a_n z^(n-k) + a_{n-2} z^(n-k-2) + ... + a_k (the z^(n-k-1) term dropped)."""
    n, k = a.n, a.chi
    coeffs = [a[k + j] for j in range(n - k + 1)]
    if len(coeffs) >= 2:
        coeffs[-2] = 0
    return Polynomial(coeffs)


def root_discs(g: Graph, k: int, a: ASequence, tight: bool = False) -> DiscSet:
    """Integer roots 0..k-1 plus n-k discs of common radius covering every other root.

    ``tight`` swaps the closed-form radius sqrt(2)(C(n,2)-m) for the Cauchy
    bound of the gapped polynomial built from this graph's colour partitions.
    """
    if a.chi != k:
        raise BoundError(f"chromatic number {k} disagrees with the a-sequence (chi={a.chi})")
    if a.n != g.n:
        raise BoundError("a-sequence length differs from graph order")
    centers = disc_centers(g.n, g.m, k)
    beta = non_edges(g.n, g.m)
    if tight:
        gp = gapped_polynomial(a)
        radius = cauchy_bound(gp.coeffs) if gp.degree >= 1 else 0.0
    else:
        radius = _up(SQRT2 * beta) if beta else 0.0
    return DiscSet(tuple(range(k)), centers, radius)


def modulus_bound(n: int, m: int) -> float:
    beta = non_edges(n, m)
    return _up((n - 1) + SQRT2 * beta) if beta else float(n - 1)


def im_re_bounds(n: int, m: int) -> tuple[float, float]:
    beta = non_edges(n, m)
    im = _up(SQRT2 * beta) if beta else 0.0
    return im, modulus_bound(n, m)


def sokal_bound(delta: int) -> float:
    return SOKAL_CONSTANT * delta


def fp_bound(delta: int) -> float:
    return FERNANDEZ_PROCACCI_CONSTANT * delta


# ---------------------------------------------------------------- report

@dataclass
class BoundReport:
    id: str
    n: int
    m: int
    k: int
    delta: int
    x: int
    count: int
    tomescu: int
    improved: int
    modulus: float
    sokal: float
    fp: float
    threshold: Optional[int]
    max_root_modulus: Optional[float] = None
    satisfied: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = asdict(self)
        for key in ("count", "tomescu", "improved", "threshold"):
            if d[key] is not None:
                d[key] = str(d[key])
        return d

    def csv_row(self) -> list[str]:
        return [
            self.id, str(self.n), str(self.m), str(self.k), str(self.delta),
            str(self.tomescu), str(self.improved), f"{self.modulus:.6f}",
            f"{self.sokal:.6f}", f"{self.fp:.6f}",
            "" if self.threshold is None else str(self.threshold),
        ]


def comparison_table(
    g: Graph,
    x: Optional[int] = None,
    graph_id: Optional[str] = None,
    poly: Optional[Polynomial] = None,
    with_roots: bool = True,
) -> BoundReport:
    """Every bound for one graph, evaluated at ``x`` (default: the order n)."""
    p = poly if poly is not None else chromatic_polynomial(g)
    k = chromatic_number(g, p)
    delta = max_degree(g)
    xv = g.n if x is None else x
    count = p(xv)
    report = BoundReport(
        id=graph_id if graph_id is not None else write_graph6(g),
        n=g.n, m=g.m, k=k, delta=delta, x=xv, count=count,
        tomescu=tomescu_bound(g.n, k, xv),
        improved=improved_bound(g.n, k, delta, xv),
        modulus=modulus_bound(g.n, g.m),
        sokal=sokal_bound(delta),
        fp=fp_bound(delta),
        threshold=tomescu_threshold(g.n, k) if k >= 4 else None,
    )
    report.satisfied = {
        "tomescu": count <= report.tomescu,
        "improved": count <= report.improved,
        "improved_le_tomescu": xv < 1 or report.improved <= report.tomescu,
    }
    if with_roots:
        from .roots import find_roots, verify_containment

        rs = find_roots(p, k)
        report.max_root_modulus = max(abs(z) for z in rs.roots)
        report.satisfied["modulus"] = report.max_root_modulus <= report.modulus + 1e-9
        report.satisfied["discs"] = verify_containment(rs, root_discs(g, k, a_sequence(g, p))).ok
    return report


def reports_to_csv(reports: Sequence[BoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def reports_to_json(reports: Sequence[BoundReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


# ---------------------------------------------------------------- dense families

def complement_family_graphs(n: int) -> dict[str, Graph]:
    """Graphs whose complements are a tree (path), a cycle, a theta graph, 3- and 4-regular circulants."""
    from .graph import circulant_graph, complement, cycle_graph, path_graph, theta_graph

    if n < 6 or n % 2:
        raise BoundError("complement families need even n >= 6 (3-regular graphs need even order)")
    inner = n - 2
    a = inner // 3
    b = (inner - a) // 2
    return {
        "tree": complement(path_graph(n)),
        "cycle": complement(cycle_graph(n)),
        "theta": complement(theta_graph(a, b, inner - a - b)),
        "3-regular": complement(circulant_graph(n, (1, n // 2))),
        "4-regular": complement(circulant_graph(n, (1, 2))),
    }


@dataclass
class TableRow:
    family: str
    n: int
    m: int
    delta: int
    sokal: float
    fp: float
    modulus: float
    delta_offset: int
    slope: float
    intercept: float

    def to_json(self) -> dict:
        return asdict(self)


def table_rows(n: int = 10) -> list[TableRow]:
    """Bounds for each complement family at order n.

    The modulus bound is linear in n within a family, so evaluating at n and
    n + 2 recovers its slope and intercept.
    """
    here = complement_family_graphs(n)
    there = complement_family_graphs(n + 2)
    rows = []
    for family, g in here.items():
        h = there[family]
        delta = max_degree(g)
        mod_n, mod_n2 = modulus_bound(g.n, g.m), modulus_bound(h.n, h.m)
        slope = (mod_n2 - mod_n) / 2
        rows.append(TableRow(
            family=family, n=n, m=g.m, delta=delta,
            sokal=sokal_bound(delta), fp=fp_bound(delta), modulus=mod_n,
            delta_offset=n - delta, slope=slope, intercept=mod_n - slope * n,
        ))
    return rows
