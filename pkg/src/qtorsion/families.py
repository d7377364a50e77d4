"""Kubert-Tate families, point halving, j-maps and rational-point witnesses."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .curve import CurvePoint, EllipticCurve, SingularCurveError, exact_order, torsion_over_K, torsion_over_Q
from .exactmath.factor import bounded_factors, squarefree_primitive
from .exactmath.poly import Poly, as_fraction, parse_poly
from .numberfield import NumberField, adjoin_sqrt, embed, is_rational_square, sqrt_in_field
from .structures import C, TorsionStructure, subgroup_of


class DegenerateParameterError(ValueError):
    """The parameter hits a pole of the family or gives a singular curve."""


class HalvingError(ArithmeticError):
    pass


# Kubert-Tate normal form -----------------------------------------------------

KUBERT_TARGETS = ("C10", "C12")


@dataclass(frozen=True)
class KubertParams:
    target: str
    t: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def make(cls, target: str, t) -> "KubertParams":
        t = as_fraction(t)
        if target == "C10":
            den = t - (t - 1) ** 2
            if den == 0:
                raise DegenerateParameterError(f"t = {t} is a pole of the C10 family")
            c = (2 * t ** 3 - 3 * t ** 2 + t) / den
            b = c * t * t / den
        elif target == "C12":
            if t == 1:
                raise DegenerateParameterError("t = 1 is a pole of the C12 family")
            c = (3 * t * t - 3 * t + 1) * (t - 2 * t * t) / (t - 1) ** 3
            b = c * (2 * t - 2 * t * t - 1) / (t - 1)
        else:
            raise ValueError(f"unknown Kubert target {target!r}; expected one of {KUBERT_TARGETS}")
        return cls(target, t, b, c)

    @property
    def order(self) -> int:
        return int(self.target[1:])

    def ainvs(self) -> list[Fraction]:
        # y^2 + (1-c)xy - by = x^3 - bx^2
        return [1 - self.c, -self.b, -self.b, Fraction(0), Fraction(0)]


def kubert_curve(target: str, t) -> tuple[EllipticCurve, CurvePoint]:
    """The curve of the C10 or C12 family at t, with its marked point (0,0)."""
    params = KubertParams.make(target, t)
    try:
        E = EllipticCurve(params.ainvs())
    except SingularCurveError as exc:
        raise DegenerateParameterError(f"{target} at t = {params.t} is singular") from exc
    P = E.point(0, 0)
    if exact_order(P) != params.order:
        raise DegenerateParameterError(f"(0,0) does not have order {params.order} at t = {params.t}")
    return E, P


# 2-divisibility ---------------------------------------------------------------


def halving_polynomial(E: EllipticCurve, P: CurvePoint) -> Poly:
    """Quartic whose roots are the x-coordinates of the points Q with 2Q = +-P."""
    x = Poly.x()
    num = x ** 4 - E.b4 * x ** 2 - 2 * E.b6 * x - E.b8
    den = Poly([E.b6, 2 * E.b4, E.b2, 4])
    return num - den * P.x


def _candidates(E: EllipticCurve, P: CurvePoint):
    """(L, Q) for each factor of the halving quartic, in a fixed order."""
    f = halving_polynomial(E, P)
    sqf = squarefree_primitive(f.int_primitive())
    factors = sorted(bounded_factors(sqf, 4), key=lambda g: (len(g), g))
    for g in factors:
        gp = Poly.from_ints(g)
        if gp.degree == 1:
            x0 = -gp[0] / gp[1]
            D = E.two_torsion_value(x0)
            L = NumberField.rationals() if is_rational_square(D) else NumberField.quadratic(D)
            yield L, L.scalar(x0) if L.degree > 1 else x0
            continue
        K0 = NumberField(gp, check=False)
        D = E.base_change(K0).two_torsion_value(K0.gen)
        if sqrt_in_field(D) is not None:
            yield K0, K0.gen
        elif 2 * K0.degree <= 4:
            L, a_img, _ = adjoin_sqrt(K0, D)
            yield L, embed(K0.gen, a_img)


def halve_point(E: EllipticCurve, P: CurvePoint) -> tuple[NumberField, CurvePoint]:
    """A field L of degree at most 4 and Q in E(L) with 2Q = P and order twice that of P.

    Factors of the halving quartic are tried by ascending degree, then
    coefficients; the first verified point over a quartic field is returned,
    falling back to the first verified point over a smaller field.
    """
    if P.is_infinity:
        raise ValueError("cannot halve the point at infinity")
    N = exact_order(P)
    if N is None:
        raise ValueError("P must be a torsion point of order at most 24")
    fallback = None
    for L, x0 in _candidates(E, P):
        EL = E.base_change(L)
        PL = EL.point(P.x, P.y) if L.degree > 1 else P
        for Q in EL.lift_x(x0):
            if 2 * Q == PL and exact_order(Q, 2 * N) == 2 * N:
                if L.degree == 4:
                    return L, Q
                if fallback is None:
                    fallback = (L, Q)
    if fallback is not None:
        return fallback
    raise HalvingError(f"no point Q with 2Q = P over a field of degree <= 4 for {E!r}")


# j-invariant parametrizations -------------------------------------------------


@dataclass(frozen=True)
class JParametrization:
    name: str
    numerator: Poly
    denominator: Poly

    def __call__(self, arg) -> Fraction:
        arg = as_fraction(arg)
        den = self.denominator(arg)
        if den == 0:
            raise ZeroDivisionError(f"{self.name} has a pole at {arg}")
        return self.numerator(arg) / den

    def is_pole(self, arg) -> bool:
        return self.denominator(as_fraction(arg)) == 0


_t = Poly.x()
J_MAPS: dict[str, JParametrization] = {
    "J1": JParametrization(
        "J1",
        27 * (_t + 1) ** 3 * (_t + 3) ** 3 * (_t ** 2 + 3) ** 3,
        _t ** 3 * (_t ** 2 + 3 * _t + 3) ** 3,
    ),
    "J2": JParametrization("J2", 27 * (_t + 1) ** 3 * (_t - 3) ** 3, _t ** 3),
    "j5": JParametrization("j5", (_t ** 2 + 10 * _t + 5) ** 3, _t),
    "j7": JParametrization("j7", (_t ** 2 + 13 * _t + 49) * (_t ** 2 + 5 * _t + 1) ** 3, _t),
    "j8": JParametrization("j8", (_t ** 4 - 16 * _t ** 2 + 16) ** 3, (_t ** 2 - 16) * _t ** 2),
}
del _t


def j_eval(name: str, arg) -> Fraction:
    try:
        jm = J_MAPS[name]
    except KeyError:
        raise ValueError(f"unknown j-map {name!r}; known: {sorted(J_MAPS)}") from None
    return jm(arg)


# plane-curve witnesses --------------------------------------------------------

Point2 = tuple[Fraction, Fraction]


@dataclass
class PlaneCurveWitness:
    name: str
    equation: str
    relation: Callable[[Fraction, Fraction], Fraction]
    points: list[Point2]
    # point -> j-invariant (None marks a cusp: the j-map has a pole there)
    j_of_point: Callable[[Point2], Fraction | None] | None = None
    expected_j: set[Fraction] = field(default_factory=set)


def _pts(*pairs) -> list[Point2]:
    return [(Fraction(a), Fraction(b)) for a, b in pairs]


def _j7_point(pt: Point2):
    h = pt[0]
    return None if J_MAPS["j7"].is_pole(h) else j_eval("j7", h)


def _j5_cube_point(pt: Point2):
    s, t = pt
    h = s ** 3
    if J_MAPS["j5"].is_pole(h):
        return None
    j = j_eval("j5", h)
    # the same point also has j = J2(t)
    if not J_MAPS["J2"].is_pole(t) and j_eval("J2", t) != j:
        raise ArithmeticError(f"j5(s^3) != J2(t) at {pt}")
    return j


def _j8_point(pt: Point2):
    h = pt[0]
    return None if J_MAPS["j8"].is_pole(h) else j_eval("j8", h)


def _J2_disc_point(pt: Point2):
    t = pt[0]
    return None if J_MAPS["J2"].is_pole(t) else j_eval("J2", t)


def _J1_disc_point(pt: Point2):
    t = pt[0]
    return None if J_MAPS["J1"].is_pole(t) else j_eval("J1", t)


WITNESSES: list[PlaneCurveWitness] = [
    PlaneCurveWitness(
        "cube-j7", "h*s^3 = h^2 + 13h + 49",
        lambda h, s: h * s ** 3 - (h * h + 13 * h + 49),
        _pts((7, 3), (-7, -1)),
        _j7_point,
        {Fraction(3 ** 3 * 5 ** 3 * 17 ** 3), Fraction(-(3 ** 3) * 5 ** 3)},
    ),
    PlaneCurveWitness(
        "genus2-63", "y^2 = x^6 - 26x^3 - 27",
        lambda x, y: y * y - (x ** 6 - 26 * x ** 3 - 27),
        _pts((-1, 0), (3, 0)),
    ),
    PlaneCurveWitness(
        "genus2-sextic", "y^2 = x^6 + 1",
        lambda x, y: y * y - (x ** 6 + 1),
        _pts((0, 1), (0, -1)),
    ),
    PlaneCurveWitness(
        "cube-j8", "(h^2 - 16)h^2 = s^3",
        lambda h, s: (h * h - 16) * h * h - s ** 3,
        _pts((4, 0), (-4, 0), (0, 0)),
        _j8_point,
    ),
    PlaneCurveWitness(
        "square-disc-J2", "3t(t^2 - 6t - 3) = r^2",
        lambda t, r: 3 * t * (t * t - 6 * t - 3) - r * r,
        _pts((0, 0)),
        _J2_disc_point,
    ),
    PlaneCurveWitness(
        "square-disc-J1", "3t(t^2 + 3t + 3) = r^2",
        lambda t, r: 3 * t * (t * t + 3 * t + 3) - r * r,
        _pts((0, 0)),
        _J1_disc_point,
    ),
    PlaneCurveWitness(
        "c15-genus1", "(s^6 + 10s^3 + 5)t = 3(t + 1)(t - 3)s",
        lambda s, t: (s ** 6 + 10 * s ** 3 + 5) * t - 3 * (t + 1) * (t - 3) * s,
        _pts((Fraction(-5, 2), Fraction(9, 32)), (Fraction(-5, 2), Fraction(-32, 3)),
             (-2, Fraction(-2, 3)), (0, 0), (-2, Fraction(9, 2))),
        _j5_cube_point,
        {Fraction(11 ** 3, 2 ** 3), Fraction(-(29 ** 3) * 41 ** 3, 2 ** 15)},
    ),
]


@dataclass
class CheckLine:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    lines: list[CheckLine] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.lines.append(CheckLine(name, bool(ok), detail))


def verify_witnesses() -> Report:
    rep = Report("witness curves")
    for w in WITNESSES:
        for pt in w.points:
            val = w.relation(*pt)
            rep.add(f"{w.name} {_fmt_pt(pt)}", val == 0, w.equation if val == 0 else f"residual {val}")
        if w.j_of_point is None:
            continue
        found: set[Fraction] = set()
        for pt in w.points:
            try:
                j = w.j_of_point(pt)
            except ArithmeticError as exc:
                rep.add(f"{w.name} {_fmt_pt(pt)} j", False, str(exc))
                continue
            if j is not None:
                found.add(j)
        want = w.expected_j
        detail = "j = {" + ", ".join(str(j) for j in sorted(found)) + "}" if found else "all points are cusps"
        rep.add(f"{w.name} j-invariants", found == want, detail)
    return rep


def _fmt_pt(pt: Point2) -> str:
    return f"({pt[0]}, {pt[1]})"


# the four C15 j-invariants -----------------------------------------------------

C15_QUARTIC = "x^4 - 2x^3 + 5x^2 - 4x + 19"


def c15_check(curves: dict[str, EllipticCurve] | None = None) -> Report:
    """j-invariants of the four curves reaching C15 and the torsion of one of them."""
    from .classification import C15_J
    from .database import DatabaseError, resolve_curve

    rep = Report("C15 curves")
    loaded: dict[str, EllipticCurve] = {}
    for label, want in C15_J.items():
        try:
            E = curves[label] if curves is not None else resolve_curve(label)
        except (KeyError, DatabaseError):
            rep.add(f"j({label})", False, "missing data")
            continue
        loaded[label] = E
        j = E.j_invariant
        rep.add(f"j({label})", j == want, f"{j}")
    E = loaded.get("50a4")
    if E is not None:
        K = NumberField(parse_poly(C15_QUARTIC))
        H, _ = torsion_over_K(E, K)
        rep.add("torsion(50a4, K)", H == C(15), f"{H.ascii()} over {C15_QUARTIC}")
    return rep


# Kubert / halving suite -----------------------------------------------------------


def random_parameters(n: int, seed: int = 0, lo: int = -5, hi: int = 5) -> list[Fraction]:
    """n distinct rationals in [lo, hi] with small height, reproducible from seed."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < n:
        den = rng.randint(1, 7)
        t = Fraction(rng.randint(lo * den, hi * den), den)
        if t not in out:
            out.append(t)
    return out


@dataclass
class KubertResult:
    target: str
    t: Fraction
    status: str
    rational: TorsionStructure | None = None
    field: NumberField | None = None
    over_field: TorsionStructure | None = None


def kubert_suite(params: list[Fraction], targets=KUBERT_TARGETS, check_field: bool = True) -> list[KubertResult]:
    """Rational torsion of each family member and the halving of its marked point.

    Degenerate parameters are reported with status 'degenerate'; a curve whose
    rational torsion is larger than the family's is reported as 'exceptional'.
    """
    out: list[KubertResult] = []
    for target in targets:
        want = C(int(target[1:]))
        doubled = C(2 * want.b)
        for t in params:
            try:
                E, P = kubert_curve(target, t)
            except DegenerateParameterError:
                out.append(KubertResult(target, t, "degenerate"))
                continue
            G, _ = torsion_over_Q(E)
            if G != want:
                out.append(KubertResult(target, t, "exceptional", G))
                continue
            L, Q = halve_point(E, P)
            ok = L.degree == 4 and 2 * Q == E.base_change(L).point(P.x, P.y) and exact_order(Q) == doubled.b
            H = None
            if ok and check_field:
                H, _ = torsion_over_K(E, L)
                ok = subgroup_of(doubled, H)
            out.append(KubertResult(target, t, "ok" if ok else "failed", G, L, H))
    return out
