"""Weierstrass curves over Q and over number fields, and their torsion.

Torsion over a field K is found one prime at a time: the x-coordinates of
the points killed by p^e are the roots in K of an x-only division
polynomial, each root gives at most two points, and counting the points
killed by p, p^2, ... pins down the p-primary part.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import classification as cls_
from .exactmath import zpoly
from .exactmath.factor import bounded_factors
from .exactmath.poly import Poly, as_fraction
from .numberfield import (
    NFElement,
    NumberField,
    adjoin_sqrt,
    compositum,
    describe,
    is_isomorphic,
    is_rational_square,
    quadratic_subfields,
    rational_sqrt,
    roots_in_field,
    sqrt_in_field,
)
from .structures import TorsionStructure, combine, from_counts, subgroup_of

MAX_DIVISION_INDEX = 24
# prime powers covering every rational torsion group
_RATIONAL_TARGETS = (8, 9, 5, 7)
_EXHAUSTIVE_TARGETS = (16, 9, 5, 7, 11, 13, 17, 19, 23)


class SingularCurveError(ValueError):
    pass


class SporadicTorsionError(ArithmeticError):
    """Torsion outside the structures allowed for the curve's rational torsion."""

    def __init__(self, G: TorsionStructure, H: TorsionStructure, K: NumberField):
        super().__init__(f"torsion {H.ascii()} over {K.format()} is not allowed for rational torsion {G.ascii()}")
        self.G, self.H, self.K = G, H, K


def _zero(v) -> bool:
    return v == 0


class EllipticCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q or a number field."""

    def __init__(self, ainvs: Sequence, field: NumberField | None = None, label: str | None = None):
        if len(ainvs) != 5:
            raise ValueError("need five a-invariants")
        if field is None or field.degree == 1:
            field = None
            coeffs = tuple(as_fraction(a) if not isinstance(a, NFElement) else a.rational() for a in ainvs)
        else:
            coeffs = tuple(field(a) for a in ainvs)
        self.field = field
        self.ainvs = coeffs
        self.label = label
        a1, a2, a3, a4, a6 = coeffs
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.discriminant = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if _zero(self.discriminant):
            raise SingularCurveError(f"singular curve {list(map(str, coeffs))}")
        self._xdiv: dict[int, list[int]] = {}
        self._factor_cache: dict[tuple[int, int], list[Poly]] = {}
        self._torsion_cache: dict = {}

    # basic data
    @property
    def is_rational(self) -> bool:
        return self.field is None

    @property
    def base_field(self) -> NumberField:
        return self.field if self.field is not None else NumberField.rationals()

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def j_invariant(self):
        return self.c4 ** 3 / self.discriminant

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        over = "" if self.field is None else f" over {self.field.format()}"
        return f"EllipticCurve{name}([{','.join(str(a) for a in self.ainvs)}]{over})"

    def __eq__(self, other) -> bool:
        return isinstance(other, EllipticCurve) and self.ainvs == other.ainvs and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.ainvs, self.field))

    def base_change(self, K: NumberField) -> "EllipticCurve":
        if not self.is_rational:
            raise ValueError("base change is only supported from Q")
        if K.degree == 1:
            return self
        return EllipticCurve([K.scalar(a) for a in self.ainvs], K, self.label)

    def _scalar(self, v):
        if self.field is None:
            return as_fraction(v) if not isinstance(v, NFElement) else v.rational()
        return self.field(v)

    # points
    @property
    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def contains(self, x, y) -> bool:
        a1, a2, a3, a4, a6 = self.ainvs
        return _zero(y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6))

    def point(self, x, y) -> "CurvePoint":
        x, y = self._scalar(x), self._scalar(y)
        if not self.contains(x, y):
            raise ValueError(f"({x}, {y}) is not on {self!r}")
        return CurvePoint(self, x, y)

    def two_torsion_value(self, x):
        """4x^3 + b2 x^2 + 2 b4 x + b6, the discriminant of the y-quadratic."""
        return ((4 * x + self.b2) * x + 2 * self.b4) * x + self.b6

    def lift_x(self, x) -> list["CurvePoint"]:
        """All points with the given x-coordinate over the base field."""
        x = self._scalar(x)
        a1, a3 = self.ainvs[0], self.ainvs[2]
        D = self.two_torsion_value(x)
        if self.field is None:
            if not is_rational_square(D):
                return []
            s = rational_sqrt(D)
        else:
            s = sqrt_in_field(D)
            if s is None:
                return []
        h = a1 * x + a3
        ys = {(s - h) / 2, (-s - h) / 2}
        return sorted((CurvePoint(self, x, y) for y in ys), key=CurvePoint.sort_key)

    def add(self, P: "CurvePoint", Q: "CurvePoint") -> "CurvePoint":
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.ainvs
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if _zero(y1 + y2 + a1 * x2 + a3):
                return self.infinity
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            den = x2 - x1
            lam = (y2 - y1) / den
            nu = (y1 * x2 - y2 * x1) / den
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(self, x3, y3)

    def neg(self, P: "CurvePoint") -> "CurvePoint":
        if P.is_infinity:
            return P
        a1, a3 = self.ainvs[0], self.ainvs[2]
        return CurvePoint(self, P.x, -P.y - a1 * P.x - a3)

    def mul(self, k: int, P: "CurvePoint") -> "CurvePoint":
        if k < 0:
            return self.mul(-k, self.neg(P))
        out = self.infinity
        base = P
        while k:
            if k & 1:
                out = self.add(out, base)
            k >>= 1
            if k:
                base = self.add(base, base)
        return out

    # division polynomials (Q only)
    def integral_scale(self) -> int:
        """Smallest u > 0 with u^i a_i integral for all i."""
        self._require_rational()
        u = 1
        for i, a in zip((1, 2, 3, 4, 6), self.ainvs):
            while (a * u ** i).denominator != 1:
                u *= _smallest_prime_factor((a * u ** i).denominator)
        return u

    def _require_rational(self) -> None:
        if not self.is_rational:
            raise ValueError("division polynomials are computed for curves over Q")

    def _int_b(self) -> tuple[int, int, int, int, int]:
        u = self.integral_scale()
        b2, b4, b6, b8 = (self.b2 * u ** 2, self.b4 * u ** 4, self.b6 * u ** 6, self.b8 * u ** 8)
        return u, int(b2), int(b4), int(b6), int(b8)

    def _f(self, n: int) -> list[int]:
        """x-only recurrence: psi_n for odd n, psi_n / psi_2 for even n, in the
        integral model."""
        if n in self._xdiv:
            return self._xdiv[n]
        _, b2, b4, b6, b8 = self._int_b()
        if n == 0:
            out = []
        elif n in (1, 2):
            out = [1]
        elif n == 3:
            out = [b8, 3 * b6, 3 * b4, b2, 3]
        elif n == 4:
            out = [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2]
        else:
            F = [b6, 2 * b4, b2, 4]
            F2 = zpoly.sqr(F)
            m = n // 2
            f = self._f
            if n % 2:
                t1 = zpoly.mul(f(m + 2), zpoly.mul(f(m), zpoly.sqr(f(m))))
                t2 = zpoly.mul(f(m - 1), zpoly.mul(f(m + 1), zpoly.sqr(f(m + 1))))
                if m % 2 == 0:
                    t1 = zpoly.mul(F2, t1)
                else:
                    t2 = zpoly.mul(F2, t2)
                out = zpoly.sub(t1, t2)
            else:
                inner = zpoly.sub(zpoly.mul(f(m + 2), zpoly.sqr(f(m - 1))),
                                  zpoly.mul(f(m - 2), zpoly.sqr(f(m + 1))))
                out = zpoly.mul(f(m), inner)
        self._xdiv[n] = out
        return out

    def division_polynomial(self, n: int) -> Poly:
        """Polynomial in x vanishing exactly at x-coordinates of points with nP = 0.

        For even n the factor 4x^3 + b2 x^2 + 2 b4 x + b6 is included so that
        the 2-torsion is covered.
        """
        self._require_rational()
        if not 2 <= n <= MAX_DIVISION_INDEX:
            raise ValueError(f"division index {n} out of range 2..{MAX_DIVISION_INDEX}")
        if self.integral_scale() == 1:
            return Poly.from_ints(self._int_xpoly(n))
        return self._scaled_xpoly(n)

    def _int_xpoly(self, n: int) -> list[int]:
        u, b2, b4, b6, _ = self._int_b()
        f = self._f(n)
        if n % 2 == 0:
            f = zpoly.mul(f, [b6, 2 * b4, b2, 4])
        return f

    def _scaled_xpoly(self, n: int) -> Poly:
        # x' = u^2 x on the integral model
        u = self.integral_scale()
        f = self._int_xpoly(n)
        scaled = zpoly.compose_scale(f, u * u)
        return Poly.from_ints(scaled) / Fraction(u * u) ** (len(f) - 1)

    def xpoly_factors(self, n: int, max_degree: int = 4) -> list[Poly]:
        """Irreducible factors of degree <= max_degree of the x-polynomial for n,
        integer-primitive, ordered by degree then coefficients."""
        self._require_rational()
        for (m, d), facs in self._factor_cache.items():
            if m == n and d >= max_degree:
                return [g for g in facs if g.degree <= max_degree]
        u = self.integral_scale()
        f = self._int_xpoly(n)
        if u != 1:
            f = zpoly.compose_scale(f, u * u)
        facs = [Poly.from_ints(g) for g in bounded_factors(f, max_degree)]
        self._factor_cache[n, max_degree] = facs
        return facs


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


class CurvePoint:
    """A point on an EllipticCurve; x = y = None is the point at infinity."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: EllipticCurve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other) -> bool:
        return isinstance(other, CurvePoint) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.add(self, other)

    def __neg__(self) -> "CurvePoint":
        return self.curve.neg(self)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.add(self, self.curve.neg(other))

    def __rmul__(self, k: int) -> "CurvePoint":
        return self.curve.mul(k, self)

    def __mul__(self, k: int) -> "CurvePoint":
        return self.curve.mul(k, self)

    def sort_key(self) -> tuple:
        if self.is_infinity:
            return (0,)
        return (1, _coord_key(self.x), _coord_key(self.y))

    def __repr__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({_fmt(self.x)}, {_fmt(self.y)})"

    def as_list(self) -> list[str] | None:
        return None if self.is_infinity else [_fmt(self.x), _fmt(self.y)]


def _coord_key(v) -> tuple:
    if isinstance(v, NFElement):
        return v.coords
    return (v,)


def _fmt(v) -> str:
    return v.format("a") if isinstance(v, NFElement) else str(v)


def exact_order(P: CurvePoint, bound: int = MAX_DIVISION_INDEX) -> int | None:
    """Least k >= 1 with kP = O, or None if that exceeds bound."""
    Q = P
    for k in range(1, bound + 1):
        if Q.is_infinity:
            return k
        Q = Q + P
    return None


# torsion ------------------------------------------------------------------


def _prime_power_targets(orders: Iterable[int]) -> list[int]:
    best: dict[int, int] = {}
    for n in orders:
        m = n
        p = 2
        while m > 1:
            if m % p == 0:
                q = 1
                while m % p == 0:
                    m //= p
                    q *= p
                best[p] = max(best.get(p, 1), q)
            p += 1
    return [best[p] for p in sorted(best)]


def _prime_of(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


@dataclass
class _PrimaryPart:
    p: int
    exps: tuple[int, int]
    points: list[CurvePoint]


def _x_roots(E: EllipticCurve, EK: EllipticCurve, n: int, K: NumberField) -> list:
    d = K.degree
    roots: list = []
    for g in E.xpoly_factors(n, d):
        if d % g.degree:
            continue
        if g.degree == 1:
            roots.append(EK._scalar(-g[0] / g[1]))
        else:
            roots.extend(roots_in_field(g, K))
    return roots


def _primary_part(E: EllipticCurve, EK: EllipticCurve, K: NumberField, q: int) -> _PrimaryPart:
    p = _prime_of(q)
    pts = [EK.infinity]
    for x0 in _x_roots(E, EK, q, K):
        pts.extend(EK.lift_x(x0))
    pts = sorted(set(pts), key=CurvePoint.sort_key)
    orders = {}
    for P in pts:
        o = exact_order(P, q)
        if o is None or q % o:
            raise ArithmeticError(f"point {P} is not killed by {q}")
        orders[P] = o
    e = 0
    while p ** e < q:
        e += 1
    counts = {k: sum(1 for o in orders.values() if p ** k % o == 0) for k in range(1, e + 1)}
    i, j = from_counts(p, counts)
    part = TorsionStructure(p ** i, p ** j)
    # counting test: every level must match the group read off
    for k in range(1, e + 1):
        if counts[k] != part.count_killed_by(p ** k):
            raise ArithmeticError(f"inconsistent {p}-torsion counts {counts}")
    return _PrimaryPart(p, (i, j), pts)


def _generators(parts: list[_PrimaryPart], EK: EllipticCurve) -> list[CurvePoint]:
    big, small = EK.infinity, EK.infinity
    for part in parts:
        i, j = part.exps
        p = part.p
        if j == 0:
            continue
        P = next(P for P in part.points if exact_order(P, p ** j) == p ** j)
        big = big + P
        if i == 0:
            continue
        span = {k * P for k in range(p ** j)}
        for Q in part.points:
            if exact_order(Q, p ** i) == p ** i and Q not in span:
                sub = {(s * P) + (t * Q) for s in range(p ** j) for t in range(p ** i)}
                if len(sub) == p ** (i + j):
                    small = small + Q
                    break
        else:
            raise ArithmeticError("no complementary generator found")
    gens = [big] if not big.is_infinity else []
    if not small.is_infinity:
        gens = [small, big]
    return gens


def _all_points(parts: list[_PrimaryPart], EK: EllipticCurve) -> list[CurvePoint]:
    pts = {EK.infinity}
    for part in parts:
        pts = {P + Q for P in pts for Q in part.points}
    return sorted(pts, key=CurvePoint.sort_key)


def _torsion(E: EllipticCurve, K: NumberField, targets: Sequence[int]):
    EK = E.base_change(K)
    parts = [_primary_part(E, EK, K, q) for q in targets]
    H = combine({part.p: part.exps for part in parts})
    return H, parts, EK


def torsion_over_Q(E: EllipticCurve) -> tuple[TorsionStructure, list[CurvePoint]]:
    """Rational torsion subgroup and generators (largest order last)."""
    E._require_rational()
    key = ("Q",)
    if key not in E._torsion_cache:
        H, parts, EK = _torsion(E, NumberField.rationals(), _RATIONAL_TARGETS)
        if H not in cls_.PHI1:
            raise ArithmeticError(f"computed rational torsion {H.ascii()} is impossible")
        E._torsion_cache[key] = (H, parts)
    H, parts = E._torsion_cache[key]
    return H, _generators(parts, E)


def torsion_over_K(E: EllipticCurve, K: NumberField, exhaustive: bool = False
                   ) -> tuple[TorsionStructure, list[CurvePoint]]:
    """Torsion of E over K ([K:Q] in 1, 2, 4) with the list of all torsion points.

    Without ``exhaustive`` only point orders compatible with the rational
    torsion are searched; a result outside the allowed structures raises
    SporadicTorsionError.
    """
    E._require_rational()
    if K.degree == 1:
        H, parts = _cached_rational(E)
        return H, _all_points(parts, E)
    key = (K.min_poly, exhaustive)
    if key not in E._torsion_cache:
        G, _ = torsion_over_Q(E)
        if exhaustive:
            targets = _EXHAUSTIVE_TARGETS
        else:
            targets = _prime_power_targets(cls_.candidate_orders(G))
        H, parts, EK = _torsion(E, K, targets)
        if not subgroup_of(G, H):
            raise ArithmeticError("rational torsion does not embed in torsion over K")
        if not exhaustive and H not in cls_.PHI_STAR_4_G[G]:
            raise SporadicTorsionError(G, H, K)
        E._torsion_cache[key] = (H, parts, EK)
    H, parts, EK = E._torsion_cache[key]
    return H, _all_points(parts, EK)


def _cached_rational(E: EllipticCurve):
    torsion_over_Q(E)
    return E._torsion_cache[("Q",)]


def torsion_generators(E: EllipticCurve, K: NumberField) -> list[CurvePoint]:
    if K.degree == 1:
        return torsion_over_Q(E)[1]
    torsion_over_K(E, K)
    _, parts, EK = E._torsion_cache[(K.min_poly, False)]
    return _generators(parts, EK)


# growth -------------------------------------------------------------------


@dataclass
class GrowthEntry:
    field: NumberField
    H: TorsionStructure
    minimal: bool

    @property
    def description(self):
        return describe(self.field)


@dataclass
class GrowthReport:
    curve: EllipticCurve
    G: TorsionStructure
    entries: list[GrowthEntry]
    factors: dict[int, list[Poly]] = field(default_factory=dict)
    fields_examined: int = 0

    def minimal_entries(self) -> list[GrowthEntry]:
        return [e for e in self.entries if e.minimal]

    def pairs(self) -> set[tuple[str, str]]:
        """(field label, structure) for the minimal growth fields."""
        return {(e.description.ascii_label, e.H.ascii()) for e in self.minimal_entries()}

    def configuration(self) -> "Configuration":
        return Configuration(self.G, tuple(sorted(e.H for e in self.minimal_entries())))


@dataclass(frozen=True)
class Configuration:
    """Multiset of structures gained over minimal fields, for rational torsion G."""

    G: TorsionStructure
    entries: tuple[TorsionStructure, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def notation(self) -> str:
        if not self.entries:
            return "-"
        counts = Counter(self.entries)
        out = []
        for H in sorted(counts):
            s = H.tuple_notation()
            if counts[H] > 1:
                s += f"^{counts[H]}"
            out.append(s)
        return ",".join(out)

    def sort_key(self) -> tuple:
        return (self.G.sort_key(), self.size, [H.sort_key() for H in self.entries])

    @classmethod
    def parse(cls, G: TorsionStructure, text: str) -> "Configuration":
        """Inverse of notation(); also accepts repeated entries written out."""
        import re

        entries: list[TorsionStructure] = []
        for m in re.finditer(r"\((\d+)(?:,(\d+))?\)(?:\^(\d+))?", text.replace(" ", "")):
            H = TorsionStructure(int(m.group(1)), int(m.group(2))) if m.group(2) else TorsionStructure(int(m.group(1)))
            entries.extend([H] * int(m.group(3) or 1))
        return cls(G, tuple(sorted(entries)))


def _point_fields(E: EllipticCurve, factors: Iterable[Poly]) -> list[NumberField]:
    """Fields of degree 2 or 4 generated by a point whose x-coordinate is a
    root of one of the given irreducible factors."""
    out: list[NumberField] = []
    for g in factors:
        if g.degree == 3:
            continue
        if g.degree == 1:
            D = E.two_torsion_value(-g[0] / g[1])
            if D == 0 or is_rational_square(D):
                continue
            out.append(NumberField.quadratic(D))
            continue
        K0 = NumberField(g, check=False)
        x0 = K0.gen
        D = E.base_change(K0).two_torsion_value(x0)
        if sqrt_in_field(D) is not None:
            out.append(K0)
        elif 2 * K0.degree <= 4:
            L, _, _ = adjoin_sqrt(K0, D)
            out.append(L)
    return out


def _dedupe(fields: Iterable[NumberField], known: list[NumberField] | None = None) -> list[NumberField]:
    out = list(known or [])
    start = len(out)
    for K in fields:
        if not any(M.degree == K.degree and is_isomorphic(K, M)[0] for M in out):
            out.append(K)
    return out[start:] if known is not None else out


def growth_fields(E: EllipticCurve, exhaustive: bool = False) -> GrowthReport:
    """Fields of degree 2 and 4 over which the torsion of E grows."""
    E._require_rational()
    G, _ = torsion_over_Q(E)
    if exhaustive:
        targets = list(_EXHAUSTIVE_TARGETS)
    else:
        targets = _prime_power_targets(cls_.candidate_orders(G))
    factors = {n: [g for g in E.xpoly_factors(n, 4) if g.degree != 3] for n in targets}
    fields = _dedupe(K for n in targets for K in _point_fields(E, factors[n]))
    # close under composita of degree at most 4
    frontier = list(fields)
    while frontier:
        new = []
        for A in frontier:
            for B in list(fields):
                if A.degree == 4 and B.degree == 4:
                    continue
                for L in compositum(A, B, 4):
                    if L.degree in (2, 4):
                        new.append(L)
        added = _dedupe(new, fields)
        fields.extend(added)
        frontier = added
    fields.sort(key=lambda K: (K.degree, describe(K).ascii_label))
    entries: list[GrowthEntry] = []
    for K in fields:
        H, _ = torsion_over_K(E, K, exhaustive)
        if H == G:
            continue
        minimal = True
        if K.degree == 4:
            for F in quadratic_subfields(K):
                if torsion_over_K(E, F, exhaustive)[0] == H:
                    minimal = False
                    break
        entries.append(GrowthEntry(K, H, minimal))
    entries.sort(key=lambda e: (e.H.sort_key(), e.field.degree, e.description.ascii_label))
    return GrowthReport(E, G, entries, factors, len(fields))


def weil_root_of_unity_ok(H: TorsionStructure, K: NumberField) -> bool:
    """Full a-torsion over K forces a primitive a-th root of unity in K."""
    if H.a == 1:
        return True
    cyclo = _cyclotomic(H.a)
    return bool(roots_in_field(cyclo, K))


def _cyclotomic(n: int) -> Poly:
    x = Poly.x()
    out = x ** n - 1
    for d in range(1, n):
        if n % d == 0:
            out = out // _cyclotomic(d)
    return out


def point_arithmetic(E: EllipticCurve, P: CurvePoint, Q: CurvePoint | None = None, op: str = "add",
                     k: int | None = None) -> CurvePoint:
    """Group law on E: ``add`` (P + Q), ``neg`` (-P) or ``scalar_mul`` (kP)."""
    for R in (P, Q):
        if R is not None and R.curve is not E and R.curve != E:
            raise ValueError("point does not lie on this curve")
    if op == "add":
        return E.add(P, Q)
    if op == "neg":
        return E.neg(P)
    if op == "scalar_mul":
        if k is None:
            raise ValueError("scalar_mul needs k")
        return E.mul(k, P)
    raise ValueError(f"unknown operation {op!r}")
