"""Numerical chromatic roots and their containment in the disc region."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import mpmath
import numpy as np

from .bounds import DiscSet
from .polynomial import Polynomial

POLISH_STEPS = 5
POLISH_DPS = 32
RESIDUAL_LIMIT = 1e-8
MAX_DEGREE = 64


class RootFindingError(RuntimeError):
    def __init__(self, message: str, partial: "RootSet"):
        super().__init__(message)
        self.partial = partial


@dataclass
class RootSet:
    roots: list[complex]
    residuals: list[float]
    degree: int
    exact: list[int] = field(default_factory=list)

    def to_json(self) -> list[dict]:
        return [
            {"re": z.real, "im": z.imag, "residual": r}
            for z, r in zip(self.roots, self.residuals)
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def deflate_integer_roots(p: Polynomial, candidates) -> tuple[Polynomial, list[int]]:
    """Divide out (x - j) exactly, as often as it divides, for each candidate j."""
    found = []
    q = p
    for j in candidates:
        lin = Polynomial([-j, 1])
        while q.degree >= 1 and q(j) == 0:
            q = q.exact_div(lin)
            found.append(j)
    return q, found


def _horner(coeffs: list, z):
    """p(z), p'(z) and the backward-error scale sum |c_i| |z|^i in one pass."""
    val = der = mpmath.mpc(0)
    scale = mpmath.mpf(0)
    az = abs(z)
    for c in reversed(coeffs):
        der = der * z + val
        val = val * z + c
        scale = scale * az + abs(c)
    return val, der, scale


def _backward_error(val, scale) -> float:
    return float(abs(val) / scale) if scale else float(abs(val))


def find_roots(p: Polynomial, k: Optional[int] = None) -> RootSet:
    """All complex roots of ``p`` with multiplicity.

    Integer roots 0..k-1 (or every root in 0..deg when ``k`` is None) are
    removed by exact synthetic division first.  The remaining factor goes
    through numpy's companion-matrix eigenvalues and then a few Newton steps
    at 32 significant digits.
    """
    if p.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} above supported maximum {MAX_DEGREE}")
    candidates = range(k) if k is not None else range(p.degree + 1)
    q, exact = deflate_integer_roots(p, candidates)
    roots: list[complex] = [complex(j) for j in exact]
    residuals: list[float] = [0.0] * len(exact)
    if q.degree >= 1:
        coeffs = list(q.coeffs)
        top = max(abs(c) for c in coeffs)
        approx = np.roots([c / top for c in reversed(coeffs)])
        with mpmath.workdps(POLISH_DPS):
            mc = [mpmath.mpf(c) for c in coeffs]
            bad = []
            for z0 in approx:
                z = mpmath.mpc(z0.real, z0.imag)
                val, der, scale = _horner(mc, z)
                err = _backward_error(val, scale)
                for _ in range(POLISH_STEPS):
                    if der == 0 or err == 0:
                        break
                    cand = z - val / der
                    cval, cder, cscale = _horner(mc, cand)
                    cand_err = _backward_error(cval, cscale)
                    if cand_err > err:
                        break
                    z, val, der, err = cand, cval, cder, cand_err
                roots.append(complex(z))
                residuals.append(err)
                if err > RESIDUAL_LIMIT:
                    bad.append(complex(z))
        if bad:
            partial = RootSet(roots, residuals, p.degree, exact)
            raise RootFindingError(f"{len(bad)} roots did not converge: {bad}", partial)
    return RootSet(roots, residuals, p.degree, exact)


@dataclass
class Violation:
    root: complex
    distance: float

    def to_json(self) -> dict:
        return {"re": self.root.real, "im": self.root.imag, "distance": self.distance}


@dataclass
class ContainmentReport:
    checked: int
    tol: float
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "tol": self.tol,
            "contained": self.ok,
            "violations": [v.to_json() for v in self.violations],
        }


def verify_containment(rs: RootSet, ds: DiscSet, tol: Optional[float] = None) -> ContainmentReport:
    """Check every root against the integer points and closed discs of ``ds``."""
    t = ds.default_tol() if tol is None else tol
    if t < 0:
        raise ValueError("tolerance must be nonnegative")
    violations = []
    for z in rs.roots:
        d = ds.distance(z, t)
        if d > 0:
            violations.append(Violation(z, d))
    return ContainmentReport(len(rs.roots), t, violations)
