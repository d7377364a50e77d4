"""Univariate polynomials over Q with exact Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from . import zpoly


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot interpret {v!r} as a rational number")


class Poly:
    """Immutable dense polynomial over Q, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    # construction helpers
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_ints(cls, cs: Sequence[int]) -> "Poly":
        p = cls.__new__(cls)
        cs = list(cs)
        while cs and cs[-1] == 0:
            cs.pop()
        p.coeffs = tuple(Fraction(c) for c in cs)
        p._hash = None
        return p

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        out = cls.const(1)
        for r in roots:
            out = out * cls((-as_fraction(r), 1))
        return out

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    # arithmetic
    @staticmethod
    def _coerce(v) -> "Poly":
        return v if isinstance(v, Poly) else Poly.const(v)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        # integer products through the Kronecker kernel
        da, pa = _int_scaled(self.coeffs)
        db, pb = _int_scaled(other.coeffs)
        prod = zpoly.mul(pa, pb)
        den = da * db
        return Poly([Fraction(c, den) for c in prod])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if len(r) - 1 < db:
            return Poly(), self
        q = [Fraction(0)] * (len(r) - db)
        bc = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c:
                for j in range(db):
                    r[k + j] -= c * bc[j]
        return Poly(q), Poly(r[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __truediv__(self, c) -> "Poly":
        c = as_fraction(c)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return Poly([a / c for a in self.coeffs])

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    # algebra
    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        return Poly([c / lc for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (zero only if both are zero)."""
        a, b = self, self._coerce(other)
        if a.is_zero() and b.is_zero():
            return Poly()
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        # primitive remainder sequence keeps the integers small
        pa = Poly.from_ints(a.int_primitive())
        pb = Poly.from_ints(b.int_primitive())
        while not pb.is_zero():
            r = pa % pb
            pa, pb = pb, (Poly.from_ints(r.int_primitive()) if not r.is_zero() else r)
        return pa.monic()

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, self._coerce(other)
        s0, s1 = Poly.const(1), Poly()
        t0, t1 = Poly(), Poly.const(1)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lc = r0.lc
        return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)

    def content_and_primitive(self) -> tuple[Fraction, "Poly"]:
        """Return (c, p) with self == c * p, p integral, primitive, positive lead."""
        if self.is_zero():
            return Fraction(0), self
        den, ints = _int_scaled(self.coeffs)
        g = zpoly.content(ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Poly.from_ints([c // g for c in ints])

    def int_primitive(self) -> list[int]:
        """Integer coefficient list of the primitive part (positive lead)."""
        if self.is_zero():
            return []
        _, ints = _int_scaled(self.coeffs)
        return zpoly.primitive(ints)

    def compose(self, other: "Poly") -> "Poly":
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def shift(self, a) -> "Poly":
        """self(x + a)."""
        return self.compose(Poly((a, 1)))

    # display
    def format(self, var: str = "x", style: str = "plain") -> str:
        """Render as e.g. 'x^4 - 2*x^3 + 5*x^2 - 4*x + 19'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mon = var if i == 1 else f"{var}^{i}"
                if a == 1:
                    body = mon
                else:
                    body = f"{a}*{mon}" if style == "plain" else f"{a}{mon}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _int_scaled(cs: Sequence[Fraction]) -> tuple[int, list[int]]:
    """Common denominator d and the integer list d*cs."""
    d = reduce(lcm, (c.denominator for c in cs), 1)
    if d == 1:
        return 1, [c.numerator for c in cs]
    return d, [c.numerator * (d // c.denominator) for c in cs]


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse strings such as 'x^4 - 2*x^3 + 5x^2 - 4*x + 19' or '[19,-4,5,-2,1]'."""
    s = text.replace(" ", "").replace("**", "^")
    if s.startswith("["):
        return Poly([Fraction(t) for t in s.strip("[]").split(",") if t])
    if not s:
        raise ValueError("empty polynomial")
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "^*/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs: dict[int, Fraction] = {}
    for t in terms:
        if not t:
            continue
        if var in t:
            head, _, tail = t.partition(var)
            head = head.rstrip("*")
            if head in ("", "+"):
                c = Fraction(1)
            elif head == "-":
                c = Fraction(-1)
            else:
                c = Fraction(head)
            if tail.startswith("^"):
                e = int(tail[1:])
            elif tail == "":
                e = 1
            else:
                raise ValueError(f"cannot parse term {t!r}")
        else:
            c, e = Fraction(t), 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    deg = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(deg + 1)])


def lcm_denominators(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (as_fraction(v).denominator for v in values), 1)


def gcd_many(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)
