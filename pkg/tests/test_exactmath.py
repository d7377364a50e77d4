from fractions import Fraction
from functools import reduce

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BACKENDS
from oracles import brute_force_factors, sympy_factors
from props import tracked
from qtorsion.exactmath import (
    Poly,
    bounded_factors,
    factor_mod_p,
    is_irreducible,
    parse_poly,
    poly_arith,
    rational_roots,
    squarefree_part,
)
from qtorsion.exactmath import modp, zpoly

P = parse_poly
x = Poly.x()


def test_parse_and_format_round_trip():
    f = P("x^4 - 2*x^3 + 5*x^2 - 4*x + 19")
    assert f.format() == "x^4 - 2*x^3 + 5*x^2 - 4*x + 19"
    assert P("9x+57") == 9 * x + 57
    assert P("-1/2*x^2 + 1/3") == Poly((Fraction(1, 3), 0, Fraction(-1, 2)))


def test_gcd_is_monic():
    assert poly_arith(x ** 2 - 1, x ** 2 - 2 * x + 1, "gcd") == x - 1
    assert poly_arith(2 * x + 2, 4 * x ** 2 - 4, "gcd") == x + 1


def test_divrem_sum_of_cubes():
    q, r = poly_arith(x ** 3 + 1, x + 1, "divrem")
    assert q == x ** 2 - x + 1 and r.is_zero()


def test_mul_matches_three_torsion_polynomial():
    assert poly_arith(3 * x, x ** 3 + 4, "mul") == 3 * x ** 4 + 12 * x


def test_divrem_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        poly_arith(x, Poly(()), "divrem")


def test_content_and_primitive():
    c, prim = poly_arith(6 * x ** 2 + 4, None, "content_and_primitive")
    assert c == 2 and prim == 3 * x ** 2 + 2


def test_unknown_operation():
    with pytest.raises(ValueError):
        poly_arith(x, x, "pow")


@pytest.mark.parametrize("f, want", [
    ((x - 1) ** 2 * (x + 2), (x - 1) * (x + 2)),
    (x ** 2 + 11 * x + 29, x ** 2 + 11 * x + 29),
    (x ** 4, x),
    (3 * (2 * x + 1) ** 3, x + Fraction(1, 2)),
])
def test_squarefree_part(f, want):
    assert squarefree_part(f) == want


def _expand_mod(factors, p):
    out = [1]
    for g, k in factors:
        for _ in range(k):
            out = modp.mul(out, g, p)
    return out


def test_factor_mod_p_examples(backend):
    assert factor_mod_p([1, 0, 1], 5) == [([2, 1], 1), ([3, 1], 1)]
    assert factor_mod_p([1, 0, 1], 7) == [([1, 0, 1], 1)]
    facs = factor_mod_p([1, 1, 1, 1, 1], 11)
    assert len(facs) == 4 and all(len(g) == 2 for g, _ in facs)
    roots = sorted((-g[0]) % 11 for g, _ in facs)
    assert roots == [r for r in range(11) if (r ** 4 + r ** 3 + r * r + r + 1) % 11 == 0]


def test_factor_mod_p_rejects_bad_moduli():
    with pytest.raises(ValueError):
        factor_mod_p([1, 0, 1], 9)
    with pytest.raises(ValueError):
        factor_mod_p([5, 0, 5], 5)


@pytest.mark.parametrize("f, D, want", [
    ([-1, 0, 0, 0, 1], 2, [[-1, 1], [1, 1], [1, 0, 1]]),
    ([1, 0, 0, 0, 1], 2, []),
    ([1, 0, 0, 0, 1], 4, [[1, 0, 0, 0, 1]]),
    ([0, 0, 4, 1], 1, [[0, 1], [4, 1]]),
])
def test_bounded_factors_small(f, D, want, backend):
    assert bounded_factors(f, D) == want


def test_bounded_factors_worked_curve_5_torsion(backend):
    from qtorsion.curve import EllipticCurve

    E = EllipticCurve([1, 0, 1, -126, -552])
    facs = bounded_factors(E.division_polynomial(5).int_primitive(), 2)
    assert [29, 11, 1] in facs


def test_rational_roots():
    assert rational_roots(P("9x+57")) == [Fraction(-19, 3)]
    assert rational_roots(P("x^2+11x+29")) == []
    assert rational_roots(P("3x^4+12x")) == [0]


def test_is_irreducible():
    assert is_irreducible([1, 1, 1, 1, 1])
    assert not is_irreducible([4, 0, 0, 0, 1])      # x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    assert not is_irreducible([1, 0, 2, 0, 1])      # (x^2+1)^2


# properties -----------------------------------------------------------------

small_int = st.integers(-10, 10)
coeff_lists = st.lists(small_int, min_size=2, max_size=9).filter(lambda cs: cs[-1] != 0)


@settings(max_examples=80)
@given(coeff_lists, coeff_lists.filter(lambda cs: any(cs[1:])))
def test_divrem_reconstruction(f, g):
    F, G = Poly.from_ints(f), Poly.from_ints(g)
    q, r = poly_arith(F, G, "divrem")
    assert q * G + r == F
    assert r.is_zero() or r.degree < G.degree


@settings(max_examples=100)
@given(st.lists(st.integers(0, 10 ** 6), min_size=2, max_size=10).filter(lambda cs: cs[-1] != 0),
       st.sampled_from([3, 5, 7, 11, 13, 17, 101, 997]))
def test_factor_mod_p_reproduces_input(cs, p):
    cs = [c % p for c in cs]
    if not modp.reduce(cs, p):
        return
    facs = factor_mod_p(cs, p)
    lc = modp.reduce(cs, p)[-1]
    prod = _expand_mod(facs, p)
    assert [(lc * c) % p for c in prod] == modp.reduce(cs, p)
    for g, _ in facs:
        assert g[-1] == 1
        assert len(modp.factor(g, p)) == 1


@settings(max_examples=60)
@given(st.lists(st.integers(-10, 10), min_size=2, max_size=7).filter(lambda cs: cs[-1] != 0))
def test_bounded_factors_agree_with_sympy(cs):
    for backend in ("python", "compiled") if modp.compiled_available() else ("python",):
        modp.use_backend(backend)
        got = {tuple(g) for g in bounded_factors(cs, 4)}
        assert got == sympy_factors(cs, 4)
    modp.use_backend("compiled" if modp.compiled_available() else "python")


def _random_irreducible(rng, deg):
    while True:
        cs = [rng.randint(-6, 6) for _ in range(deg + 1)]
        if cs[-1] == 0:
            continue
        if cs[-1] < 0:
            cs = [-c for c in cs]
        if zpoly.content(cs) != 1:
            continue
        if sympy.Poly(list(reversed(cs)), sympy.Symbol("x")).is_irreducible:
            return cs


@st.composite
def planted(draw):
    import random

    degs = draw(st.lists(st.sampled_from([1, 2, 3, 4, 5]), min_size=1, max_size=4))
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    return [_random_irreducible(rng, d) for d in degs]


@settings(max_examples=60)
@given(planted(), st.sampled_from([1, 2, 4]))
def test_bounded_factors_recover_planted_factors(factors, D):
    f = reduce(zpoly.mul, factors)
    want = {tuple(g) for g in factors if len(g) - 1 <= D}
    got = bounded_factors(f, D)
    assert {tuple(g) for g in got} == want
    for g in got:
        assert zpoly.exact_div(f, g) is not None
        assert is_irreducible(g)


def test_sixteen_torsion_factors_of_large_curve_agree_with_sympy(backend):
    from qtorsion.curve import EllipticCurve

    # many modular factors: exercises the degree-budgeted recombination
    E = EllipticCurve([1, 0, 1, -251, -727])
    f = E._int_xpoly(16)
    assert {tuple(g) for g in bounded_factors(f, 4)} == sympy_factors(f, 4)


@settings(max_examples=80)
@given(st.lists(st.integers(-10, 10), min_size=2, max_size=7).filter(lambda cs: cs[-1] != 0),
       st.sampled_from([1, 2]))
@tracked
def test_bounded_factors_match_brute_force_search(cs, D):
    want = brute_force_factors(cs, D)
    for backend in BACKENDS:
        modp.use_backend(backend)
        assert {tuple(g) for g in bounded_factors(cs, D)} == want
    modp.use_backend(BACKENDS[-1])


@st.composite
def small_planted(draw):
    import random

    degs = draw(st.lists(st.sampled_from([1, 2, 3]), min_size=1, max_size=3))
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    out = []
    for d in degs:
        while True:
            cs = [rng.randint(-3, 3) for _ in range(d + 1)]
            if cs[-1] > 0 and cs[0] != 0 and zpoly.content(cs) == 1 and is_irreducible(cs):
                out.append(cs)
                break
    return out


@settings(max_examples=50)
@given(small_planted())
def test_brute_force_oracle_finds_planted_small_factors(factors):
    f = reduce(zpoly.mul, factors)
    want = {tuple(g) for g in factors if len(g) <= 3}
    assert brute_force_factors(f, 2) == want


def test_pure_python_switch():
    import os
    import subprocess
    import sys

    code = "from qtorsion.exactmath import modp; from qtorsion.curve import torsion_over_Q; " \
           "from qtorsion.database import resolve_curve; print(modp.BACKEND, torsion_over_Q(resolve_curve('11a1'))[0])"
    env = dict(os.environ, QTORSION_PURE_PYTHON="1")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert res.stdout.split() == ["python", "C5"]
