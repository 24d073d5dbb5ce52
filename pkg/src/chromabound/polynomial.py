"""Dense integer polynomials in the power basis and the falling-factorial basis."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    pass


class NotChromaticError(ValueError):
    """The polynomial cannot be a chromatic polynomial of a nonempty graph."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x_power(cls, d: int, c: int = 1) -> "Polynomial":
        return cls([0] * d + [c])

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial([c * other for c in self.coeffs])
        return Polynomial(poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division; raises if a quotient coefficient is not an integer."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        q = [0] * max(len(rem) - len(d) + 1, 0)
        for i in range(len(q) - 1, -1, -1):
            top = rem[i + len(d) - 1]
            if top % lead:
                raise InexactDivisionError(f"non-integer quotient coefficient {top}/{lead}")
            c = top // lead
            q[i] = c
            if c:
                for j, dj in enumerate(d):
                    rem[i + j] -= c * dj
        return Polynomial(q), Polynomial(rem)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivisionError(f"nonzero remainder {r.coeffs}")
        return q

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([int(c) for c in data["coeffs"]])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {t}" for s, t in terms[1:])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def evaluate(p: Polynomial, x: int) -> int:
    return p(int(x))


def evaluate_real(p: Polynomial, x: Number) -> Fraction:
    return Fraction(p(Fraction(x)))


# ---------------------------------------------------------------- bases

@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind: (x)_n = sum_k s(n, k) x^k."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


def falling_factorial(k: int) -> Polynomial:
    return Polynomial([stirling1(k, j) for j in range(k + 1)])


def falling_factorial_value(x: Number, k: int) -> Number:
    out: Number = 1
    for j in range(k):
        out *= x - j
    return out


@dataclass(frozen=True)
class ASequence:
    """Colour-partition counts: ``values[i-1]`` is a_i for i = 1..n."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def chi(self) -> int:
        for i, v in enumerate(self.values, 1):
            if v:
                return i
        return 0

    def __getitem__(self, i: int) -> int:
        """1-based: ``a[i]`` is the number of i-colour partitions."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"a_i defined for 1 <= i <= {len(self.values)}")
        return self.values[i - 1]

    def nonzero_tail(self) -> tuple[int, ...]:
        """Entries a_chi, ..., a_n (the form in which sequences are usually printed)."""
        return self.values[self.chi - 1:] if self.chi else ()

    def evaluate(self, x: Number) -> Number:
        return sum(a * falling_factorial_value(x, i) for i, a in enumerate(self.values, 1))

    def to_json(self) -> dict:
        return {"a": [str(v) for v in self.values], "chi": self.chi}

    @classmethod
    def from_json(cls, data: dict | str) -> "ASequence":
        if isinstance(data, str):
            data = json.loads(data)
        seq = cls(tuple(int(v) for v in data["a"]))
        if "chi" in data and int(data["chi"]) != seq.chi:
            raise ValueError(f"stored chi {data['chi']} disagrees with sequence (chi={seq.chi})")
        return seq


def to_falling_factorial(p: Polynomial) -> ASequence:
    """Rewrite ``p`` in the basis (x)_1, ..., (x)_n using x^j = sum_i S(j, i) (x)_i."""
    if p.degree < 1:
        raise NotChromaticError("chromatic polynomials of nonempty graphs have degree >= 1")
    if p.leading != 1:
        raise NotChromaticError(f"leading coefficient is {p.leading}, expected 1")
    if p[0] != 0:
        raise NotChromaticError(f"constant term is {p[0]}, expected 0")
    n = p.degree
    a = [0] * (n + 1)
    for j in range(1, n + 1):
        c = p[j]
        if c:
            for i in range(1, j + 1):
                a[i] += c * stirling2(j, i)
    bad = [i for i in range(1, n + 1) if a[i] < 0]
    if bad:
        raise NotChromaticError(f"negative colour-partition counts at i={bad}")
    return ASequence(tuple(a[1:]))


def from_falling_factorial(a: ASequence | Sequence[int]) -> Polynomial:
    values = a.values if isinstance(a, ASequence) else tuple(a)
    out = [0] * (len(values) + 1)
    for i, ai in enumerate(values, 1):
        if ai:
            for j in range(i + 1):
                out[j] += ai * stirling1(i, j)
    return Polynomial(out)
