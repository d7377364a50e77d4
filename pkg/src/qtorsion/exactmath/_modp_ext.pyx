# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomials over Z/pZ, p < 2**31.

Mirrors ``_modp_py`` exactly; lists in, lists out.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p):
    cdef i64 r = 1, b = a % p, e = p - 2
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef i64* _load(list a, i64 p, Py_ssize_t extra=0) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef i64* buf = <i64*> malloc((n + extra + 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = (<i64> (a[i] % p))
    for i in range(n, n + extra + 1):
        buf[i] = 0
    return buf


cdef list _store(i64* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return [buf[i] for i in range(n)]


cdef void _mul_raw(i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb, i64* out, i64 p):
    cdef Py_ssize_t i, j
    cdef i64 x
    for i in range(na + nb - 1):
        out[i] = 0
    for i in range(na):
        x = a[i]
        if x == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + x * b[j]) % p


cdef Py_ssize_t _rem_raw(i64* r, Py_ssize_t nr, i64* b, Py_ssize_t nb, i64 p, i64* q):
    """Reduce r (length nr) modulo b in place; returns the new length."""
    cdef Py_ssize_t db = nb - 1, k, j
    cdef i64 inv = _inv(b[db], p), c
    if nr - 1 < db:
        return nr
    for k in range(nr - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        if q != NULL:
            q[k] = c
        if c:
            for j in range(db):
                r[k + j] = (r[k + j] - c * b[j]) % p
                if r[k + j] < 0:
                    r[k + j] += p
        r[k + db] = 0
    k = db
    while k > 0 and r[k - 1] == 0:
        k -= 1
    return k


def reduce(list a, i64 p):
    cdef i64* buf = _load(a, p)
    try:
        return _store(buf, len(a))
    finally:
        free(buf)


def mul(list a, list b, i64 p):
    if not a or not b:
        return []
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef i64* pa = _load(a, p)
    cdef i64* pb = _load(b, p)
    cdef i64* out = <i64*> malloc((na + nb) * sizeof(i64))
    try:
        _mul_raw(pa, na, pb, nb, out, p)
        return _store(out, na + nb - 1)
    finally:
        free(pa)
        free(pb)
        free(out)


def divmod_(list a, list b, i64 p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef Py_ssize_t na = len(a), nb = len(b), n
    if na < nb:
        return [], reduce(a, p)
    cdef i64* pa = _load(a, p)
    cdef i64* pb = _load(b, p)
    cdef i64* q = <i64*> malloc((na - nb + 1) * sizeof(i64))
    try:
        n = _rem_raw(pa, na, pb, nb, p, q)
        return _store(q, na - nb + 1), _store(pa, n)
    finally:
        free(pa)
        free(pb)
        free(q)


def rem(list a, list b, i64 p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef Py_ssize_t na = len(a), nb = len(b), n
    cdef i64* pa = _load(a, p)
    cdef i64* pb = _load(b, p)
    try:
        n = _rem_raw(pa, na, pb, nb, p, NULL)
        return _store(pa, n)
    finally:
        free(pa)
        free(pb)


def monic(list a, i64 p):
    if not a:
        return []
    cdef i64 inv = _inv(a[len(a) - 1] % p, p)
    return [(c % p) * inv % p for c in a]


def gcd(list a, list b, i64 p):
    cdef Py_ssize_t na = len(a), nb = len(b), n
    cdef i64* x = _load(a, p)
    cdef i64* y = _load(b, p)
    cdef i64* t
    while na > 0 and x[na - 1] == 0:
        na -= 1
    while nb > 0 and y[nb - 1] == 0:
        nb -= 1
    try:
        while nb > 0:
            n = _rem_raw(x, na, y, nb, p, NULL)
            t = x
            x = y
            y = t
            na = nb
            nb = n
        return monic(_store(x, na), p)
    finally:
        free(x)
        free(y)


cdef Py_ssize_t _mulmod_raw(i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb,
                            i64* m, Py_ssize_t nm, i64 p, i64* out):
    """out <- a*b mod m; out must hold na+nb-1 entries."""
    if na == 0 or nb == 0:
        return 0
    _mul_raw(a, na, b, nb, out, p)
    return _rem_raw(out, na + nb - 1, m, nm, p, NULL)


def mulmod(list a, list b, list m, i64 p):
    return rem(mul(a, b, p), m, p)


def powmod(list base, object e, list m, i64 p):
    cdef Py_ssize_t nm = len(m)
    if nm <= 1:
        return []
    cdef Py_ssize_t cap = 2 * nm
    cdef i64* r = <i64*> malloc(cap * sizeof(i64))
    cdef i64* b = <i64*> malloc(cap * sizeof(i64))
    cdef i64* tmp = <i64*> malloc(cap * sizeof(i64))
    cdef i64* pm = _load(m, p)
    cdef i64* swap
    cdef Py_ssize_t nr = 1, nb, i
    cdef list base_red = rem(base, m, p)
    try:
        r[0] = 1
        nb = len(base_red)
        for i in range(nb):
            b[i] = base_red[i]
        while e:
            if e & 1:
                nr = _mulmod_raw(r, nr, b, nb, pm, nm, p, tmp)
                swap = r
                r = tmp
                tmp = swap
            e >>= 1
            if e:
                nb = _mulmod_raw(b, nb, b, nb, pm, nm, p, tmp)
                swap = b
                b = tmp
                tmp = swap
        return _store(r, nr)
    finally:
        free(r)
        free(b)
        free(tmp)
        free(pm)
