"""Small dense linear algebra over Q (matrices are lists of Fraction rows)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Poly

Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def charpoly(m: Matrix) -> Poly:
    """Characteristic polynomial det(xI - m) via reduction to Hessenberg form."""
    n = len(m)
    h = [list(map(Fraction, row)) for row in m]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = 1 / h[j + 1][j]
        for i in range(j + 2, n):
            f = h[i][j] * inv
            if f:
                ri, rj = h[i], h[j + 1]
                for k in range(n):
                    ri[k] -= f * rj[k]
                for row in h:
                    row[j + 1] += f * row[i]
    # recurrence on leading principal minors of x*I - h
    polys = [Poly.const(1)]
    x = Poly.x()
    for k in range(n):
        pk = polys[k] * (x - h[k][k])
        prod = Fraction(1)
        for i in range(k - 1, -1, -1):
            prod *= h[i + 1][i]
            if prod == 0:
                break
            pk = pk - polys[i] * (prod * h[i][k])
        polys.append(pk)
    return polys[n]


def solve(a: Matrix, b: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve a*x = b for square or overdetermined consistent systems."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(map(Fraction, a[i])) + [Fraction(b[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    if len(piv_cols) < cols:
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][cols]
    return x
