"""Exact arithmetic: rational polynomials and bounded-degree factorisation."""

from .factor import bounded_factors, factor_over_Q, is_irreducible, rational_roots
from .ops import factor_mod_p, poly_arith, squarefree_part
from .modp import BACKEND
from .poly import Poly, as_fraction, parse_poly

__all__ = [
    "BACKEND",
    "Poly",
    "as_fraction",
    "bounded_factors",
    "factor_mod_p",
    "factor_over_Q",
    "is_irreducible",
    "parse_poly",
    "poly_arith",
    "rational_roots",
    "squarefree_part",
]
