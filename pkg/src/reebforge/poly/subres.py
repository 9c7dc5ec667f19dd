"""Subresultant chains over an exact integral domain.

Polynomials in the main variable are lists of ring elements, lowest
degree first.  The ring is passed in as a small operations object so the
same code serves Z (plain ints) and Z[x] (dense int lists).
"""

from . import zpoly as Z


class IntRing:
    zero = 0
    one = 1

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def divexact(a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in Z")
        return q

    @staticmethod
    def power(a, e):
        return a ** e


class ZxRing:
    zero = []
    one = [1]

    @staticmethod
    def is_zero(a):
        return not a

    add = staticmethod(Z.add)
    sub = staticmethod(Z.sub)
    mul = staticmethod(Z.mul)
    neg = staticmethod(Z.neg)
    divexact = staticmethod(Z.divexact)
    power = staticmethod(Z.power)


def _trim(R, a):
    n = len(a)
    while n and R.is_zero(a[n - 1]):
        n -= 1
    return list(a[:n])


def _deg(a):
    return len(a) - 1


def _scale(R, a, c):
    return _trim(R, [R.mul(v, c) for v in a])


def _divscale(R, a, c):
    return [R.divexact(v, c) for v in a]


def prem(R, a, b):
    da, db = _deg(a), _deg(b)
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        c = r[i + db]
        r = [R.mul(lb, v) for v in r]
        if not R.is_zero(c):
            for j, bc in enumerate(b):
                r[i + j] = R.sub(r[i + j], R.mul(c, bc))
        r.pop()
    return _trim(R, r)


def chain(R, a, b):
    """Subresultant chain of a and b (deg a >= deg b >= 0, both nonzero).

    Returns a dict j -> S_j holding the nonzero subresultants with
    j < deg a; members absent from the dict are zero.
    """
    a = _trim(R, a)
    b = _trim(R, b)
    if not a or not b:
        raise ValueError("zero polynomial")
    if _deg(a) < _deg(b):
        raise ValueError("need deg a >= deg b")
    out = {}
    n0, n1 = _deg(a), _deg(b)
    if n1 < n0:
        # S_{deg b} = lc(b)^(deg a - deg b - 1) * b
        out[n1] = _scale(R, b, R.power(b[-1], n0 - n1 - 1)) if n0 - n1 > 1 else list(b)
        if n0 - 1 > n1:
            out[n0 - 1] = list(b)
    if n1 == 0:
        return out
    s = R.power(b[-1], n0 - n1)
    A = b
    B = prem(R, a, [R.neg(v) for v in b])
    while True:
        d = _deg(A)
        if not B:
            return out
        e = _deg(B)
        out[d - 1] = B
        delta = d - e
        if delta > 1:
            C = _scale(R, B, R.power(B[-1], delta - 1))
            C = _divscale(R, C, R.power(s, delta - 1))
            out[e] = C
        else:
            C = B
        if e == 0:
            return out
        nb = prem(R, A, [R.neg(v) for v in B])
        B = _divscale(R, nb, R.mul(R.power(s, delta), A[-1]))
        B = _trim(R, B)
        A = C
        s = A[-1]


def psc(R, S, j):
    """Principal subresultant coefficient of index j from a chain dict."""
    Sj = S.get(j)
    if Sj is None or _deg(Sj) < j:
        return R.zero
    return Sj[j]


def resultant(R, a, b):
    a = _trim(R, a)
    b = _trim(R, b)
    if not a or not b:
        raise ValueError("zero polynomial")
    da, db = _deg(a), _deg(b)
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            sign = -1
    if db == 0:
        r = R.power(b[0], da)
    else:
        S = chain(R, a, b)
        r = S.get(0, [R.zero])[0] if S.get(0) else R.zero
    return R.neg(r) if sign < 0 else r
