"""Operation-style entry points over Poly: ring arithmetic, squarefree part, factoring mod p."""

from __future__ import annotations

from sympy import isprime

from . import modp
from .factor import squarefree_primitive
from .poly import Poly

_BINARY = {"add", "sub", "mul", "divrem", "gcd"}
_UNARY = {"derivative", "content_and_primitive"}


def poly_arith(f: Poly, g: Poly | None, op: str):
    """Exact arithmetic on rational polynomials.

    ``gcd`` is monic; ``content_and_primitive`` returns (content, primitive)
    with integer content for integer input; ``divrem`` returns (q, r).
    """
    if op in _BINARY and g is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        return divmod(f, g)
    if op == "gcd":
        return f.gcd(g)
    if op == "derivative":
        return f.derivative()
    if op == "content_and_primitive":
        return f.content_and_primitive()
    raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_BINARY | _UNARY)}")


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f'), made monic."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree <= 0:
        return Poly.const(1)
    return Poly.from_ints(squarefree_primitive(f.int_primitive())).monic()


def factor_mod_p(f, p: int) -> list[tuple[list[int], int]]:
    """(monic irreducible factor, multiplicity) pairs of f mod p, coefficients low degree first."""
    if p == 2 or not isprime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    cs = f.int_primitive() if isinstance(f, Poly) else list(f)
    if not modp.reduce(cs, p):
        raise ValueError("polynomial vanishes mod p")
    return modp.factor(cs, p)
