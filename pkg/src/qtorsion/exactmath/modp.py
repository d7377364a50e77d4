"""Factorisation of polynomials over Z/pZ.

The inner loops (products, remainders, powering) run in a compiled kernel
when it is available; ``QTORSION_PURE_PYTHON=1`` forces the pure-Python
fallback.  ``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os
import random

from . import _modp_py

_kernel = _modp_py
BACKEND = "python"
if os.environ.get("QTORSION_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _modp_ext as _compiled  # type: ignore[attr-defined]

        _kernel = _compiled
        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on the build
        pass


def use_backend(name: str) -> None:
    """Switch kernels at runtime ('python' or 'compiled')."""
    global _kernel, BACKEND
    if name == "python":
        _kernel, BACKEND = _modp_py, "python"
    elif name == "compiled":
        from . import _modp_ext as _compiled  # type: ignore[attr-defined]

        _kernel, BACKEND = _compiled, "compiled"
    else:
        raise ValueError(f"unknown backend {name!r}")


def compiled_available() -> bool:
    try:
        from . import _modp_ext  # type: ignore[attr-defined]  # noqa: F401
    except ImportError:
        return False
    return True


def reduce(a, p):
    return _kernel.reduce(list(a), p)


def mul(a, b, p):
    return _kernel.mul(a, b, p)


def divmod_(a, b, p):
    return _kernel.divmod_(a, b, p)


def rem(a, b, p):
    return _kernel.rem(a, b, p)


def monic(a, p):
    return _kernel.monic(a, p)


def gcd(a, b, p):
    return _kernel.gcd(a, b, p)


def mulmod(a, b, m, p):
    return _kernel.mulmod(a, b, m, p)


def powmod(base, e, m, p):
    return _kernel.powmod(base, e, m, p)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def derivative(a, p):
    return reduce([i * a[i] for i in range(1, len(a))], p)


def quo(a, b, p):
    return divmod_(a, b, p)[0]


def is_squarefree(f, p) -> bool:
    f = reduce(f, p)
    if len(f) <= 2:
        return True
    return len(gcd(f, derivative(f, p), p)) == 1


def distinct_degree(f, p, max_degree: int | None = None):
    """Distinct-degree split of a monic squarefree f.

    Returns (pieces, rest): pieces is a list of (d, g) where g is the
    product of the irreducible factors of degree d, for d up to
    ``max_degree``; rest is the cofactor holding all larger factors.
    """
    f = monic(reduce(f, p), p)
    pieces = []
    xp = [0, 1]
    h = xp
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        if max_degree is not None and d > max_degree:
            return pieces, f
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, xp, p), p)
        if len(g) > 1:
            pieces.append((d, g))
            f = quo(f, g, p)
            h = rem(h, f, p)
    if len(f) > 1:
        d_rest = len(f) - 1
        if max_degree is None or d_rest <= max_degree:
            pieces.append((d_rest, f))
            f = [1]
    return pieces, f


def equal_degree(g, d, p, rng: random.Random | None = None):
    """Split a monic product of degree-d irreducibles (Cantor-Zassenhaus)."""
    n = len(g) - 1
    if n == d:
        return [g]
    if rng is None:
        rng = random.Random(0x5EED ^ p ^ n)
    if p == 2:
        # trace map instead of the (p^d-1)/2 power
        while True:
            a = [rng.randrange(2) for _ in range(n)]
            t = list(a)
            s = list(a)
            for _ in range(d - 1):
                s = mulmod(s, s, g, p)
                t = sub(t, [(-c) % 2 for c in s], p)
            h = gcd(g, t, p)
            if 1 < len(h) < len(g):
                break
    else:
        e = (p ** d - 1) // 2
        while True:
            a = reduce([rng.randrange(p) for _ in range(n)], p)
            if len(a) <= 1:
                continue
            h = gcd(g, a, p)
            if 1 < len(h) < len(g):
                break
            b = powmod(a, e, g, p)
            h = gcd(g, sub(b, [1], p), p)
            if 1 < len(h) < len(g):
                break
    return equal_degree(h, d, p, rng) + equal_degree(quo(g, h, p), d, p, rng)


def factor_squarefree(f, p, max_degree: int | None = None):
    """Irreducible factors of a squarefree f of degree <= max_degree.

    Returns (factors, rest) with factors sorted by degree then coefficients
    and ``rest`` the monic product of the remaining (larger) factors.
    """
    pieces, rest = distinct_degree(f, p, max_degree)
    out = []
    for d, g in pieces:
        out.extend(equal_degree(g, d, p))
    out.sort(key=lambda h: (len(h), h))
    return out, rest


def squarefree_decomposition(f, p):
    """List of (g, k) with f = lc * prod g^k, each g squarefree and monic."""
    f = monic(reduce(f, p), p)
    out = []
    if len(f) <= 1:
        return out
    df = derivative(f, p)
    if not df:
        # f is a p-th power
        root = [f[i] for i in range(0, len(f), p)]
        return [(g, k * p) for g, k in squarefree_decomposition(root, p)]
    c = gcd(f, df, p)
    w = quo(f, c, p)
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = quo(w, y, p)
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = quo(c, y, p)
    if len(c) > 1:
        root = [c[j] for j in range(0, len(c), p)]
        out.extend((g, k * p) for g, k in squarefree_decomposition(root, p))
    return out


def factor(f, p):
    """Complete factorisation: list of (monic irreducible, multiplicity)."""
    out = []
    for g, k in squarefree_decomposition(f, p):
        facs, _ = factor_squarefree(g, p)
        out.extend((h, k) for h in facs)
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return out
