"""Pure-Python kernels for dense polynomials over Z/pZ.

Same interface as the compiled ``_modp_ext`` module.  Polynomials are lists
of residues in [0, p), lowest degree first, with no trailing zeros.
"""


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p):
    return _trim([c % p for c in a])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return q, _trim(r[:db])


def rem(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return _trim(r)
    inv = pow(b[-1], p - 2, p)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        if c:
            for j in range(db):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return _trim(r[:db])


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def mulmod(a, b, m, p):
    return rem(mul(a, b, p), m, p)


def powmod(base, e, m, p):
    result = [1] if len(m) > 1 else []
    base = rem(base, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return result
