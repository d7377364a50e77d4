"""Dense integer polynomials as plain lists, lowest degree first.

These are the workhorse routines behind division polynomials and Hensel
lifting, where coefficients run to thousands of bits.  Products switch to
Kronecker substitution once the operands are large enough for CPython's
Karatsuba multiplication to pay off.
"""

from __future__ import annotations

from math import gcd

_KRONECKER_MIN = 12


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return [c * x for x in a]


def _pack(a: list[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in a), "little")


def _pack_signed(a: list[int], nbytes: int) -> int:
    pos = [x if x > 0 else 0 for x in a]
    neg = [-x if x < 0 else 0 for x in a]
    v = _pack(pos, nbytes)
    if any(neg):
        v -= _pack(neg, nbytes)
    return v


def _unpack_signed(v: int, n: int, nbytes: int) -> list[int]:
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (v + offset).to_bytes(n * nbytes, "little")
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(n)
    ]


def _schoolbook(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return trim(_schoolbook(a, b))
    ma = max(abs(x) for x in a).bit_length()
    mb = max(abs(x) for x in b).bit_length()
    bits = ma + mb + min(len(a), len(b)).bit_length() + 2
    nbytes = (bits + 7) // 8
    n = len(a) + len(b) - 1
    v = _pack_signed(a, nbytes) * _pack_signed(b, nbytes)
    return trim(_unpack_signed(v, n, nbytes))


def sqr(a: list[int]) -> list[int]:
    return mul(a, a)


def derivative(a: list[int]) -> list[int]:
    return trim([i * a[i] for i in range(1, len(a))])


def content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: list[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    a = trim(list(a))
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def evaluate(a: list[int], x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def exact_div(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient f/g over Z, or None when g does not divide f exactly."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    f = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return [] if not f else None
    lg = g[-1]
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1 - dg, -1, -1):
        c, r = divmod(f[k + dg], lg)
        if r:
            return None
        q[k] = c
        if c:
            for j in range(dg):
                f[k + j] -= c * g[j]
    if any(f[:dg]):
        return None
    return q


def compose_scale(a: list[int], u: int) -> list[int]:
    """Coefficients of a(u*x)."""
    out = []
    p = 1
    for c in a:
        out.append(c * p)
        p *= u
    return out


def monic_divmod_mod(f: list[int], h: list[int], m: int) -> tuple[list[int], list[int]]:
    """Divide f by the monic h with coefficients reduced modulo m."""
    f = [c % m for c in f]
    dh = len(h) - 1
    if len(f) - 1 < dh:
        return [], trim(f)
    q = [0] * (len(f) - dh)
    for k in range(len(f) - 1 - dh, -1, -1):
        c = f[k + dh] % m
        q[k] = c
        if c:
            for j in range(dh):
                f[k + j] -= c * h[j]
    r = [c % m for c in f[:dh]]
    return q, trim(r)


def mulmod_monic(a: list[int], b: list[int], h: list[int], m: int) -> list[int]:
    return monic_divmod_mod(mul(a, b), h, m)[1]


def symmetric(a: list[int], m: int) -> list[int]:
    half = m // 2
    out = []
    for c in a:
        c %= m
        out.append(c - m if c > half else c)
    return trim(out)


def norm2_ceil(a: list[int]) -> int:
    from math import isqrt

    s = sum(c * c for c in a)
    r = isqrt(s)
    return r if r * r == s else r + 1
