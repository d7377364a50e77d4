"""Number fields of degree 1, 2 or 4 and root finding inside them.

A field is ``Q[x]/(m)`` for a monic irreducible ``m``; elements carry their
power-basis coordinates.  Anything that needs a tensor product or a tower
(roots of a rational polynomial in K, composita, adjoining a square root) is
handled by building the multiplication matrices of the relevant etale algebra
over Q and reading off the characteristic polynomial of a primitive element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import isqrt
from typing import Iterable, Sequence

import mpmath

from .exactmath import linalg
from .exactmath.factor import bounded_factors, is_irreducible, squarefree_primitive
from .exactmath.poly import Poly, as_fraction, parse_poly

ALLOWED_DEGREES = (1, 2, 4)


class NumberFieldError(ValueError):
    pass


# integers


def squarefree_kernel(n) -> int:
    """Squarefree integer d with n = d * (rational square); sign kept."""
    q = as_fraction(n)
    if q == 0:
        raise ValueError("zero has no squarefree kernel")
    v = q.numerator * q.denominator
    sign = -1 if v < 0 else 1
    v = abs(v)
    r = isqrt(v)
    if r * r == v:
        return sign
    from sympy import factorint

    d = 1
    for p, e in factorint(v).items():
        if e % 2:
            d *= p
    return sign * d


def is_rational_square(q) -> bool:
    q = as_fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q) -> Fraction:
    q = as_fraction(q)
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


# fields and elements


class NumberField:
    """The field Q[x]/(min_poly) for a monic irreducible min_poly of degree 1, 2 or 4."""

    def __init__(self, min_poly, label: str | None = None, check: bool = True):
        if isinstance(min_poly, str):
            min_poly = parse_poly(min_poly)
        elif not isinstance(min_poly, Poly):
            min_poly = Poly(min_poly)
        if min_poly.degree < 1:
            raise NumberFieldError("defining polynomial must have positive degree")
        min_poly = min_poly.monic()
        if min_poly.degree not in ALLOWED_DEGREES:
            raise NumberFieldError(f"unsupported field degree {min_poly.degree}")
        if check and not is_irreducible(min_poly):
            raise NumberFieldError(f"{min_poly} is not irreducible over Q")
        self.min_poly: Poly = min_poly
        self.degree: int = min_poly.degree
        self.label = label
        self._table = _reduction_table(min_poly)

    @classmethod
    def rationals(cls) -> "NumberField":
        return _RATIONALS

    @classmethod
    def quadratic(cls, d) -> "NumberField":
        d = squarefree_kernel(d)
        if d == 1:
            raise NumberFieldError("Q(sqrt(1)) is not quadratic")
        return cls(Poly((-d, 0, 1)), check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self) -> int:
        return hash(("NumberField", self.min_poly))

    def __repr__(self) -> str:
        return f"NumberField({self.min_poly.format()!r})"

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field is not self and value.field != self:
                raise NumberFieldError("element belongs to a different field")
            return value
        if isinstance(value, Poly):
            return self.from_poly(value)
        if isinstance(value, (list, tuple)):
            return NFElement(self, value)
        return self.scalar(value)

    def scalar(self, q) -> "NFElement":
        cs = [Fraction(0)] * self.degree
        cs[0] = as_fraction(q)
        return NFElement(self, cs, _trusted=True)

    def zero(self) -> "NFElement":
        return self.scalar(0)

    def one(self) -> "NFElement":
        return self.scalar(1)

    @property
    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self.scalar(-self.min_poly[0])
        cs = [Fraction(0)] * self.degree
        cs[1] = Fraction(1)
        return NFElement(self, cs, _trusted=True)

    def from_poly(self, p: Poly) -> "NFElement":
        return NFElement(self, _reduce(list(p.coeffs), self.min_poly, self._table, self.degree), _trusted=True)

    def is_rationals(self) -> bool:
        return self.degree == 1

    def format(self) -> str:
        return self.min_poly.format()

    @cached_property
    def discriminant(self) -> Fraction:
        return poly_discriminant(self.min_poly)

    @cached_property
    def numeric_embeddings(self) -> list:
        """Complex roots of the defining polynomial (mpmath, 50 digits)."""
        with mpmath.workdps(50):
            return _numeric_roots(self.min_poly)


def _reduction_table(m: Poly) -> list[list[Fraction]]:
    """Coordinates of x^k, k = d .. 2d-2, in the power basis."""
    d = m.degree
    table = []
    cur = [Fraction(0)] * d
    # x^d = -(m_0 + ... + m_{d-1} x^{d-1})
    cur = [-m[i] for i in range(d)]
    for _ in range(max(d - 1, 0)):
        table.append(cur)
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [c - top * m[i] for i, c in enumerate(cur)]
    return table


def _reduce(cs: list[Fraction], m: Poly, table, d: int) -> list[Fraction]:
    if len(cs) <= d:
        return list(cs) + [Fraction(0)] * (d - len(cs))
    if len(cs) - 1 <= 2 * d - 2:
        out = list(cs[:d])
        for k in range(d, len(cs)):
            c = cs[k]
            if c:
                row = table[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return out
    r = Poly(cs) % m
    return [r[i] for i in range(d)]


class NFElement:
    """Element of a NumberField given by power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence, _trusted: bool = False):
        if not _trusted:
            coords = [as_fraction(c) for c in coords]
            if len(coords) != field.degree:
                raise NumberFieldError("coordinate vector has the wrong length")
        self.field = field
        self.coords: tuple[Fraction, ...] = tuple(coords)

    def _coerce(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise NumberFieldError("operands live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, [a + b for a, b in zip(self.coords, other.coords)], _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords], _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, [a - b for a, b in zip(self.coords, other.coords)], _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [a * other for a in self.coords], _trusted=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        d = K.degree
        a, b = self.coords, other.coords
        prod_ = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod_[i + j] += x * y
        return NFElement(K, _reduce(prod_, K.min_poly, K._table, d), _trusted=True)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        K = self.field
        if K.degree == 1:
            return K.scalar(1 / self.coords[0])
        g, s, _ = self.to_poly().xgcd(K.min_poly)
        return K.from_poly(s * (1 / g[0]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElement):
            return self.coords == other.coords and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"NFElement({self.format()})"

    def __str__(self) -> str:
        return self.format()

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise NumberFieldError("element is not rational")
        return self.coords[0]

    def to_poly(self) -> Poly:
        return Poly(self.coords)

    def format(self, var: str = "a") -> str:
        return Poly(self.coords).format(var)

    def matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self on the power basis (columns = images)."""
        K = self.field
        cols = []
        b = K.one()
        for _ in range(K.degree):
            cols.append((self * b).coords)
            b = b * K.gen
        return [[cols[j][i] for j in range(K.degree)] for i in range(K.degree)]

    def charpoly(self) -> Poly:
        return linalg.charpoly(self.matrix())

    def minpoly(self) -> Poly:
        cp = self.charpoly()
        sf = Poly.from_ints(squarefree_primitive(cp))
        return sf.monic()

    def norm(self) -> Fraction:
        cp = self.charpoly()
        return cp[0] * (-1) ** self.field.degree

    def trace(self) -> Fraction:
        return -self.charpoly()[self.field.degree - 1]

    def numeric(self, embedding: int) -> complex:
        """Value under the embedding sending the generator to the given root."""
        r = self.field.numeric_embeddings[embedding]
        with mpmath.workdps(50):
            v = mpmath.mpf(0)
            for c in reversed(self.coords):
                v = v * r + mpmath.mpf(c.numerator) / c.denominator
            return v


_RATIONALS = NumberField(Poly((0, 1)), label="Q", check=False)


# polynomial helpers


def poly_discriminant(f: Poly) -> Fraction:
    """Discriminant of f (via the resultant with its derivative)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    if n == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.lc


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) by the Euclidean algorithm over Q."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    res = Fraction(1)
    a, b = f, g
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0)
        da, db, dr = a.degree, b.degree, r.degree
        if (da * db) % 2:
            res = -res
        res *= b.lc ** (da - dr)
        a, b = b, r
    return res * b.lc ** a.degree


def _numeric_roots(f: Poly) -> list:
    cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
    if len(cs) == 2:
        return [-cs[1] / cs[0]]
    return mpmath.polyroots(cs, maxsteps=200, extraprec=200)


# etale algebras over Q


def _companion(f: Poly) -> list[list[Fraction]]:
    """Matrix of multiplication by x on Q[x]/f (monic f), power basis."""
    d = f.degree
    m = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = Fraction(1)
    for i in range(d):
        m[i][d - 1] = -f[i]
    return m


def _relative_algebra(K: NumberField, rel: Sequence[NFElement]):
    """Q-matrices of multiplication by alpha and by z on K[z]/(rel(z)).

    ``rel`` is a monic polynomial over K, lowest degree first.  The Q-basis
    is alpha^i z^j, ordered with index i + d*j.
    """
    d = K.degree
    r = len(rel) - 1
    n = d * r
    ca = _companion(K.min_poly)
    m_alpha = [[Fraction(0)] * n for _ in range(n)]
    for j in range(r):
        for i in range(d):
            for k in range(d):
                m_alpha[j * d + i][j * d + k] = ca[i][k]
    m_z = [[Fraction(0)] * n for _ in range(n)]
    for j in range(r - 1):
        for i in range(d):
            m_z[(j + 1) * d + i][j * d + i] = Fraction(1)
    # z * z^{r-1} = -sum rel_j z^j
    for j in range(r):
        blk = (-rel[j]).matrix()
        for i in range(d):
            for k in range(d):
                m_z[j * d + i][(r - 1) * d + k] = blk[i][k]
    return m_alpha, m_z


def _shifts(signed: bool = True) -> Iterable[int]:
    yield 0
    k = 1
    while True:
        yield k
        if signed:
            yield -k
        k += 1


def _is_squarefree(f: Poly) -> bool:
    return len(squarefree_primitive(f)) - 1 == f.degree


def _primitive_charpoly(m_alpha, m_z, signed=True, max_shift=64):
    """(k, N) with N = charpoly(z + k*alpha) squarefree."""
    n = len(m_alpha)
    for k in _shifts(signed):
        if abs(k) > max_shift:
            break
        m = [[m_z[i][j] + k * m_alpha[i][j] for j in range(n)] for i in range(n)]
        cp = linalg.charpoly(m)
        if _is_squarefree(cp):
            return k, cp, m
    raise NumberFieldError("no squarefree primitive element found")


def _solve_in_powers(m_theta, n, targets):
    """Express algebra vectors as polynomials in theta (field case)."""
    e0 = [Fraction(0)] * n
    e0[0] = Fraction(1)
    cols = [e0]
    for _ in range(n - 1):
        cols.append(linalg.matvec(m_theta, cols[-1]))
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    out = []
    for t in targets:
        sol = linalg.solve(mat, t)
        if sol is None:
            raise NumberFieldError("algebra is not a field")
        out.append(sol)
    return out


def field_over(K: NumberField, rel: Sequence, *, check_field: bool = True):
    """Absolute field K[z]/(rel) when rel is irreducible over K.

    Returns (L, alpha_image, z_image) where the images are elements of L.
    Raises NumberFieldError if the algebra is not a field.
    """
    rel = [K(c) for c in rel]
    lead = rel[-1]
    rel = [c / lead for c in rel]
    d, r = K.degree, len(rel) - 1
    n = d * r
    if n not in ALLOWED_DEGREES:
        raise NumberFieldError(f"degree {n} field requested")
    m_alpha, m_z = _relative_algebra(K, rel)
    k, cp, m_theta = _primitive_charpoly(m_alpha, m_z)
    if check_field and not is_irreducible(cp):
        raise NumberFieldError("relative polynomial is reducible")
    L = NumberField(cp, check=False)
    alpha_vec = [Fraction(0)] * n
    if d > 1:
        alpha_vec[1] = Fraction(1)
    else:
        alpha_vec[0] = -K.min_poly[0]
    z_vec = [Fraction(0)] * n
    if r > 1:
        z_vec[d] = Fraction(1)
    else:
        z_vec = [(-rel[0]).coords[i] if i < d else Fraction(0) for i in range(n)]
    a_img, z_img = _solve_in_powers(m_theta, n, [alpha_vec, z_vec])
    return L, NFElement(L, a_img), NFElement(L, z_img)


def embed(x: NFElement, alpha_image: NFElement) -> NFElement:
    """Image of x under the embedding sending its field generator to alpha_image."""
    out = alpha_image.field.zero()
    for c in reversed(x.coords):
        out = out * alpha_image + c
    return out


def adjoin_sqrt(K: NumberField, D: NFElement):
    """K(sqrt(D)) for non-square D; returns (L, alpha_image, sqrt_image)."""
    return field_over(K, [-K(D), K.zero(), K.one()])


# polynomials over a number field (short lists, used only inside Trager)


def _kp_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _kp_rem(a, b):
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - c * b[j]
        a.pop()
        _kp_trim(a)
    return a


def _kp_gcd(a, b):
    a, b = _kp_trim(list(a)), _kp_trim(list(b))
    while b:
        a, b = b, _kp_rem(a, b)
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _kp_compose_shift(f: Poly, K: NumberField, shift: NFElement):
    """Coefficients of f(z + shift) as a K-polynomial in z."""
    out = [K.zero()]
    lin = [shift, K.one()]
    for c in reversed(f.coeffs):
        # out = out * lin + c
        new = [K.zero()] * (len(out) + 1)
        for i, a in enumerate(out):
            new[i] = new[i] + a * lin[0]
            new[i + 1] = new[i + 1] + a
        new[0] = new[0] + c
        out = _kp_trim(new)
    return out


# roots


def roots_in_field(f, K: NumberField) -> list[NFElement]:
    """All roots of the rational polynomial f lying in K (Trager's method)."""
    if not isinstance(f, Poly):
        f = Poly(f)
    if f.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    d = K.degree
    out: list[NFElement] = []
    for g in bounded_factors(f, d):
        if d % (len(g) - 1):
            continue
        out.extend(_roots_of_irreducible(Poly.from_ints(g), K))
    return _sorted_elements(out)


@lru_cache(maxsize=4096)
def _roots_of_irreducible(g: Poly, K: NumberField) -> tuple[NFElement, ...]:
    m = g.degree
    if m == 1:
        return (K.scalar(-g[0] / g[1]),)
    if K.degree == 1:
        return ()
    gm = g.monic()
    rel = [K.scalar(c) for c in gm.coeffs]
    m_alpha, m_z = _relative_algebra(K, rel)
    k, norm, _ = _primitive_charpoly(m_alpha, m_z)
    roots = []
    shift = K.gen * k
    for h in bounded_factors(norm, K.degree):
        if len(h) - 1 != K.degree:
            continue
        # h(z + k*alpha) and g(z) share exactly one linear factor over K
        hk = _kp_compose_shift(Poly.from_ints(h), K, shift)
        common = _kp_gcd(rel, hk)
        if len(common) == 2:
            roots.append(-common[0])
    return tuple(roots)


def roots_in_field_numeric(f, K: NumberField) -> list[NFElement]:
    """Independent root finder: complex embeddings plus exact verification.

    Every root z in K is sum c_j alpha^j; evaluating at the embeddings of K
    gives a Vandermonde system whose right-hand side is some assignment of
    complex roots of f.  Each assignment is solved numerically, rounded to
    rationals with a denominator bound derived from the discriminant, and
    kept only if it is an exact root.
    """
    if not isinstance(f, Poly):
        f = Poly(f)
    d = K.degree
    found: set[NFElement] = set()
    for g in bounded_factors(f, d):
        gp = Poly.from_ints(g)
        if gp.degree == 1:
            found.add(K.scalar(-gp[0] / gp[1]))
            continue
        if d % gp.degree:
            continue
        found.update(_numeric_roots_irreducible(gp, K))
    return _sorted_elements(found)


def _numeric_roots_irreducible(g: Poly, K: NumberField):
    d = K.degree
    # work with beta = u*alpha, a root of the integral monic polynomial M
    u, int_m = _int_poly(K.min_poly)
    gi = g.int_primitive()
    lead = abs(gi[-1])
    # lead*z is integral, so its beta-coordinates lie in (1/disc M) Z
    disc = abs(poly_discriminant(Poly.from_ints(int_m)).numerator)
    scale = lead * disc
    digits = 40 + 2 * len(str(scale)) + 2 * max(len(str(abs(c))) for c in gi + int_m)
    out = []
    with mpmath.workdps(digits):
        betas = _numeric_roots(Poly.from_ints(int_m))
        groots = _numeric_roots(g)
        vander = mpmath.matrix([[b ** j for j in range(d)] for b in betas])
        tol = mpmath.mpf(10) ** (-(digits // 3))
        for assign in product(range(len(groots)), repeat=d):
            rhs = mpmath.matrix([groots[i] for i in assign])
            try:
                sol = mpmath.lu_solve(vander, rhs)
            except ZeroDivisionError:
                continue
            coords = []
            for j, v in enumerate(sol):
                if abs(mpmath.im(v)) * scale > tol:
                    break
                w = mpmath.re(v) * scale
                n = int(mpmath.nint(w))
                if abs(w - n) > tol:
                    break
                coords.append(Fraction(n, scale) * u ** j)
            else:
                z = NFElement(K, coords)
                if _eval_poly(g, z).is_zero():
                    out.append(z)
    return out


def _int_poly(f: Poly):
    """(u, ints) with u^deg * f(x/u) an integral monic polynomial."""
    fm = f.monic()
    n = fm.degree
    u = 1
    from math import lcm

    for i in range(n):
        c = fm[i]
        if c.denominator != 1:
            # need u^(n-i) * c integral
            den = c.denominator
            k = n - i
            # smallest u' with den | u'^k: product of p^ceil(e/k)
            from sympy import factorint

            for p, e in factorint(den).items():
                need = p ** (-(-e // k))
                u = lcm(u, need)
    ints = [int(fm[i] * u ** (n - i)) for i in range(n + 1)]
    return u, ints


def _eval_poly(f: Poly, z: NFElement) -> NFElement:
    out = z.field.zero()
    for c in reversed(f.coeffs):
        out = out * z + c
    return out


def eval_poly(f: Poly, z: NFElement) -> NFElement:
    return _eval_poly(f, z)


def _sorted_elements(xs) -> list[NFElement]:
    return sorted(set(xs), key=lambda e: tuple(e.coords))


def sqrt_in_field(D: NFElement) -> NFElement | None:
    """A square root of D in its field, or None."""
    K = D.field
    if D.is_zero():
        return K.zero()
    if D.is_rational():
        q = D.rational()
        if is_rational_square(q):
            return K.scalar(rational_sqrt(q))
        if K.degree == 1:
            return None
    cp = D.charpoly()
    # roots of c(t^2) include every square root of D that lies in K
    c2 = Poly([cp[i // 2] if i % 2 == 0 else 0 for i in range(2 * cp.degree + 1)])
    for s in roots_in_field(c2, K):
        if s * s == D:
            return s if _canonical_sign(s) else -s
    return None


def _canonical_sign(s: NFElement) -> bool:
    for c in reversed(s.coords):
        if c:
            return c > 0
    return True


# isomorphism, subfields, composita


def is_isomorphic(K1: NumberField, K2: NumberField) -> tuple[bool, NFElement | None]:
    """Whether K1 and K2 are isomorphic, with the image of K1's generator in K2."""
    if K1.degree != K2.degree:
        return False, None
    if K1.min_poly == K2.min_poly:
        return True, K2.gen
    if not is_rational_square(K1.discriminant / K2.discriminant):
        return False, None
    roots = roots_in_field(K1.min_poly, K2)
    if roots:
        return True, roots[0]
    return False, None


def quadratic_subfields(K: NumberField) -> list[NumberField]:
    """Quadratic subfields of a quartic field via the resolvent cubic."""
    if K.degree != 4:
        raise NumberFieldError("quadratic_subfields needs a quartic field")
    m = K.min_poly
    d, c, b, a = m[0], m[1], m[2], m[3]
    resolvent = Poly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])
    kernels: list[int] = []
    for theta in _rational_roots_q(resolvent):
        cand = a * a - 4 * b + 4 * theta
        if cand == 0 or is_rational_square(cand):
            cand = theta * theta - 4 * d
        if cand == 0 or is_rational_square(cand):
            continue
        dd = squarefree_kernel(cand)
        if dd in kernels:
            continue
        if roots_in_field(Poly((-dd, 0, 1)), K):
            kernels.append(dd)
    kernels.sort(key=lambda v: (abs(v), v < 0))
    return [NumberField.quadratic(v) for v in kernels]


def _rational_roots_q(f: Poly) -> list[Fraction]:
    return sorted(Fraction(-g[0], g[1]) for g in bounded_factors(f, 1))


def compositum(K1: NumberField, K2: NumberField, max_degree: int = 4) -> list[NumberField]:
    """Fields K1*K2 (one per factor of K2's polynomial over K1) of degree <= max_degree."""
    if K1.degree == 1:
        return [K2] if K2.degree <= max_degree else []
    if K2.degree == 1:
        return [K1] if K1.degree <= max_degree else []
    if K1.degree < K2.degree:
        K1, K2 = K2, K1
    if K1.degree > K2.degree and roots_in_field(K2.min_poly, K1):
        return [K1] if K1.degree <= max_degree else []
    rel = [K1.scalar(c) for c in K2.min_poly.coeffs]
    m_alpha, m_z = _relative_algebra(K1, rel)
    k, norm, _ = _primitive_charpoly(m_alpha, m_z, signed=False)
    out: list[NumberField] = []
    for h in bounded_factors(norm, max_degree):
        if (len(h) - 1) % K1.degree:
            continue
        L = NumberField(Poly.from_ints(h), check=False)
        if not any(is_isomorphic(L, M)[0] for M in out):
            out.append(L)
    return out


# display


def field_discriminant_kernel(K: NumberField) -> int:
    return squarefree_kernel(K.discriminant)


def describe(K: NumberField) -> "FieldDescription":
    return _describe_cached(K)


class FieldDescription:
    """Human-facing summary: a short label, a tidy defining polynomial and subfields."""

    __slots__ = ("label", "ascii_label", "poly", "subfields")

    def __init__(self, label: str, ascii_label: str, poly: Poly, subfields: list[int]):
        self.label = label
        self.ascii_label = ascii_label
        self.poly = poly
        self.subfields = subfields

    def as_dict(self) -> dict:
        return {
            "label": self.ascii_label,
            "poly": _integral_format(self.poly),
            "quadratic_subfields": self.subfields,
        }


def _integral_format(p: Poly) -> str:
    return Poly.from_ints(p.int_primitive()).format()


def _sqrt_label(d: int, uni: bool = True) -> str:
    if uni:
        return f"√{d}" if d > 0 else f"√−{-d}"
    return f"sqrt({d})"


@lru_cache(maxsize=2048)
def _describe_cached(K: NumberField) -> FieldDescription:
    if K.degree == 1:
        return FieldDescription("Q", "Q", Poly((0, 1)), [])
    if K.degree == 2:
        dd = field_discriminant_kernel(K)
        return FieldDescription(f"Q({_sqrt_label(dd)})", f"Q({_sqrt_label(dd, False)})", Poly((-dd, 0, 1)), [dd])
    subs = [field_discriminant_kernel(F) for F in quadratic_subfields(K)]
    if len(subs) == 3:
        d2, d1 = subs[0], subs[1]
        poly = Poly((Fraction((d1 - d2) ** 2), 0, -2 * (d1 + d2), 0, 1))
        return FieldDescription(
            f"Q({_sqrt_label(d1)},{_sqrt_label(d2)})",
            f"Q({_sqrt_label(d1, False)},{_sqrt_label(d2, False)})",
            poly,
            subs,
        )
    cyclo5 = Poly((1, 1, 1, 1, 1))
    if subs == [5] and is_isomorphic(NumberField(cyclo5, check=False), K)[0]:
        return FieldDescription("Q(ζ5)", "Q(zeta5)", cyclo5, subs)
    pure = _pure_quartic(K, subs)
    if pure is not None:
        a = pure
        lab = f"Q(⁴√{a})" if a > 0 else f"Q(⁴√−{-a})"
        return FieldDescription(lab, f"Q({a}^(1/4))", Poly((-a, 0, 0, 0, 1)), subs)
    poly = small_defining_poly(K)
    return FieldDescription(f"Q[x]/({_integral_format(poly)})", f"Q[x]/({_integral_format(poly)})", poly, subs)


def _pure_quartic(K: NumberField, subs: list[int]) -> int | None:
    """Integer a with K = Q(a^(1/4)), searching a = d*m^2 over small m."""
    if len(subs) != 1:
        return None
    d = subs[0]
    from sympy import primefactors

    disc = abs(K.discriminant.numerator * K.discriminant.denominator)
    primes = [p for p in primefactors(disc) if p < 10 ** 6][:8]
    cands = set()
    for mask in range(1 << len(primes)):
        m = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                m *= p
        cands.add(d * m * m)
    for a in sorted(cands, key=lambda v: (abs(v), v < 0)):
        if a in (0, 1) or (a > 0 and is_rational_square(a)):
            continue
        f = Poly((-a, 0, 0, 0, 1))
        if not is_irreducible(f):
            continue
        if roots_in_field(f, K):
            return a
    return None


def small_defining_poly(K: NumberField, search: int = 2) -> Poly:
    """A defining polynomial with small coefficients, from short basis combinations."""
    best = K.min_poly.monic()
    best_size = _poly_size(best)
    d = K.degree
    for combo in product(range(-search, search + 1), repeat=d - 1):
        if not any(combo):
            continue
        e = NFElement(K, [0, *combo])
        cp = e.charpoly()
        if not _is_squarefree(cp):
            continue
        # make the polynomial integral and monic
        u, ints = _int_poly(cp)
        cand = Poly.from_ints(ints)
        size = _poly_size(cand)
        if size < best_size:
            best, best_size = cand, size
    return best


def _poly_size(p: Poly) -> tuple:
    u, ints = _int_poly(p)
    return (sum(abs(c) for c in ints), ints)


def nf_arith(a: NFElement, b: NFElement | None, op: str) -> NFElement:
    """add, sub, mul on two elements of one field, or inv of ``a``."""
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if not isinstance(b, NFElement) or (b.field is not a.field and b.field != a.field):
        raise NumberFieldError("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")
