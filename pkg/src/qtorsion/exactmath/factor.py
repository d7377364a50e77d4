"""Factors of bounded degree for integer polynomials.

The polynomials met in torsion computations (division polynomials of
degree up to a few hundred) only ever need their factors of degree at most
four, so the search is restricted to those: factor modulo a well-chosen
prime, discard the large modular factors, lift the small ones with
Hensel's lemma and recombine.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import modp, zpoly
from .poly import Poly

_SMALL_PRIMES = [
    p for p in range(3, 400) if all(p % q for q in range(2, int(p ** 0.5) + 1))
]
_CANDIDATE_PRIMES = 6


def _as_int_list(f) -> list[int]:
    if isinstance(f, Poly):
        return f.int_primitive()
    return zpoly.primitive(list(f))


def _xgcd_inverse_mod(a: list[int], h: list[int], p: int) -> list[int]:
    """Inverse of a modulo (h, p); h monic and coprime to a mod p."""
    r0, r1 = modp.reduce(h, p), modp.rem(modp.reduce(a, p), h, p)
    s0, s1 = [], [1]
    while len(r1) > 1:
        q, r = modp.divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, modp.sub(s0, modp.mul(q, s1, p), p)
    if not r1:
        raise ArithmeticError("not invertible")
    inv = pow(r1[0], p - 2, p)
    return modp.rem([c * inv % p for c in s1], h, p)


def _rem_mod(f: list[int], h: list[int], m: int) -> list[int]:
    return zpoly.monic_divmod_mod(f, h, m)[1]


def _quo_mod(f: list[int], h: list[int], m: int) -> list[int]:
    return zpoly.trim([c % m for c in zpoly.monic_divmod_mod(f, h, m)[0]])


def hensel_lift_factor(f: list[int], h: list[int], p: int, bound: int) -> tuple[list[int], int]:
    """Lift a monic factor h of f mod p to a factor mod p^(2^k) > bound.

    Requires h coprime to f/h modulo p and lc(f) a unit mod p.  Returns the
    lifted monic factor with its modulus.
    """
    m = p
    g = _quo_mod(f, h, m)
    s = _xgcd_inverse_mod(g, h, p)
    while m <= bound:
        m2 = m * m
        r = _rem_mod(f, h, m2)
        delta = _rem_mod(zpoly.mul(s, r), h, m2)
        h = list(h)
        for i, c in enumerate(delta):
            h[i] = (h[i] + c) % m2
        # Newton step for the inverse of the cofactor modulo h
        g = _quo_mod(f, h, m2)
        gs = _rem_mod(zpoly.mul(g, s), h, m2)
        corr = _rem_mod(zpoly.mul(s, zpoly.sub([1], gs)), h, m2)
        s = [c % m2 for c in zpoly.add(s, corr)]
        m = m2
    return h, m


def _squarefree_exact(f: list[int]) -> list[int]:
    """f divided by gcd(f, f') over Q, as a primitive integer list."""
    P = Poly.from_ints(f)
    g = P.gcd(P.derivative())
    if g.degree <= 0:
        return f
    return (P // g).int_primitive()


def squarefree_primitive(f) -> list[int]:
    """Primitive squarefree part of an integer (or rational) polynomial."""
    f = _as_int_list(f)
    if len(f) <= 2:
        return f
    for p in _SMALL_PRIMES[:8]:
        if f[-1] % p and len(modp.reduce(f, p)) == len(f) and modp.is_squarefree(f, p):
            return f
    return _squarefree_exact(f)


def _pick_prime(f: list[int], max_degree: int):
    """Good prime with the fewest modular factors of degree <= max_degree."""
    best = None
    tried = 0
    for p in _SMALL_PRIMES:
        if f[-1] % p == 0:
            continue
        if not modp.is_squarefree(f, p):
            continue
        facs, _ = modp.factor_squarefree(f, p, max_degree)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
            if not facs:
                break
        tried += 1
        if tried >= _CANDIDATE_PRIMES:
            break
    return best


def bounded_factors(f, max_degree: int) -> list[list[int]]:
    """Distinct irreducible factors of f over Q of degree <= max_degree.

    Input is an integer coefficient list (lowest degree first) or a Poly.
    Each factor is returned primitive with positive leading coefficient,
    sorted by degree and then coefficients.
    """
    f = _as_int_list(f)
    if len(f) <= 1:
        return []
    out: list[list[int]] = []
    # strip powers of x first; they upset the constant-term filter below
    if f[0] == 0:
        if max_degree >= 1:
            out.append([0, 1])
        k = 0
        while f[k] == 0:
            k += 1
        f = f[k:]
    if len(f) > 1:
        f = squarefree_primitive(f)
        out.extend(_bounded_squarefree(f, max_degree))
    out.sort(key=lambda g: (len(g), g))
    return out


def _bounded_squarefree(f: list[int], max_degree: int) -> list[list[int]]:
    if len(f) == 2:
        return [f] if max_degree >= 1 else []
    found = _pick_prime(f, max_degree)
    if found is None:
        # every small prime is bad (only for tiny pathological inputs)
        raise ArithmeticError("no suitable prime for factorisation")
    p, modfacs = found
    if not modfacs:
        return []
    lc = f[-1]
    coeff_bound = abs(lc) * (1 << max_degree) * zpoly.norm2_ceil(f)
    lifted = []
    m = p
    for h in modfacs:
        H, m = hensel_lift_factor(f, h, p, 2 * coeff_bound)
        lifted.append(H)
    return _recombine(f, lifted, m, max_degree, coeff_bound)


def _budget_combos(alive: list[int], degs: list[int], size: int, budget: int, start: int = 0):
    """Index subsets of the given size whose degrees sum to at most budget."""
    if size == 0:
        yield ()
        return
    for pos in range(start, len(alive) - size + 1):
        i = alive[pos]
        if degs[i] > budget:
            continue
        for rest in _budget_combos(alive, degs, size - 1, budget - degs[i], pos + 1):
            yield (i, *rest)


def _recombine(f: list[int], lifted: list[list[int]], M: int, max_degree: int,
               coeff_bound: int) -> list[list[int]]:
    lc = f[-1]
    half = M // 2

    def sym(v: int) -> int:
        v %= M
        return v - M if v > half else v

    degs = [len(h) - 1 for h in lifted]
    consts = [h[0] for h in lifted]
    subs = [h[-2] for h in lifted]
    out: list[list[int]] = []
    remaining = f
    alive = sorted(range(len(lifted)), key=lambda i: (degs[i], i))
    size = 1
    while size <= min(max_degree, len(alive)):
        hit = False
        target0 = lc * remaining[0]
        for combo in _budget_combos(alive, degs, size, max_degree):
            # cheap necessary conditions on two coefficients of lc * prod(h)
            s1 = sym(lc * sum(subs[i] for i in combo))
            if abs(s1) > coeff_bound:
                continue
            c0 = lc
            for i in combo:
                c0 = c0 * consts[i] % M
            c0 = sym(c0)
            if abs(c0) > coeff_bound or (target0 and (c0 == 0 or target0 % c0)):
                continue
            cand = [lc % M]
            for i in combo:
                cand = [c % M for c in zpoly.mul(cand, lifted[i])]
            cand = zpoly.primitive(zpoly.symmetric(cand, M))
            if remaining[-1] % cand[-1]:
                continue
            q = zpoly.exact_div(remaining, cand)
            if q is None:
                continue
            out.append(cand)
            remaining = q
            lc = remaining[-1]
            alive = [i for i in alive if i not in combo]
            hit = True
            break
        if not hit:
            size += 1
    return out


def factor_over_Q(f) -> list[list[int]]:
    """All distinct irreducible factors of f (primitive integer lists)."""
    f = _as_int_list(f)
    return bounded_factors(f, max(len(f) - 1, 1))


def is_irreducible(f) -> bool:
    f = _as_int_list(f)
    if len(f) <= 1:
        return False
    if len(f) == 2:
        return True
    if f[0] == 0:
        return False
    if len(squarefree_primitive(f)) != len(f):
        return False
    return not _bounded_squarefree(f, (len(f) - 1) // 2)


def rational_roots(f) -> list[Fraction]:
    """Distinct rational roots in increasing order."""
    roots = [Fraction(-g[0], g[1]) for g in bounded_factors(f, 1)]
    return sorted(roots)


def as_polys(factors: Sequence[list[int]]) -> list[Poly]:
    return [Poly.from_ints(g) for g in factors]
