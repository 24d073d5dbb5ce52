"""Exact chromatic polynomials, colouring bounds and chromatic-root localisation."""

__version__ = "0.1.0"
