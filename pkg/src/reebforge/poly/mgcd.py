"""Multivariate gcd over Q by recursive primitive remainder sequences."""

from fractions import Fraction

from .core import MultiPoly


def _vars_in(p):
    used = set()
    for e in p._terms:
        used.update(i for i, k in enumerate(e) if k)
    return used


def normalize(p):
    """Scale so the leading grlex coefficient is 1."""
    if p.is_zero():
        return p
    lead = p.sorted_terms()[0][1]
    return p * (1 / lead)


def _split(p, v):
    out = {}
    for e, c in p._terms.items():
        k = e[v]
        e2 = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[e2] = c
    return {k: MultiPoly._raw(p.nvars, t) for k, t in out.items()}


def _join(parts, v, nvars):
    terms = {}
    for k, cp in parts.items():
        for e, c in cp._terms.items():
            e2 = e[:v] + (e[v] + k,) + e[v + 1:]
            terms[e2] = terms.get(e2, 0) + c
    return MultiPoly(nvars, terms)


def divexact(a, b):
    """a / b when b divides a exactly (raises otherwise)."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lt_e, lt_c = b.sorted_terms()[0]
    q = {}
    r = a
    while not r.is_zero():
        e, c = r.sorted_terms()[0]
        d = tuple(x - y for x, y in zip(e, lt_e))
        if any(k < 0 for k in d):
            raise ArithmeticError("polynomial division not exact")
        t = MultiPoly._raw(a.nvars, {d: c / lt_c})
        q[d] = c / lt_c
        r = r - t * b
    return MultiPoly(a.nvars, q)


def _deg(parts):
    return max(parts) if parts else -1


def _prem(A, B, v, nvars):
    a = _split(A, v)
    b = _split(B, v)
    db = _deg(b)
    lb = b[db]
    r = a
    while r and _deg(r) >= db:
        dr = _deg(r)
        c = r[dr]
        new = {}
        for k, cp in r.items():
            new[k] = cp * lb
        for k, cp in b.items():
            kk = k + dr - db
            new[kk] = new.get(kk, MultiPoly.zero(nvars)) - cp * c
        r = {k: cp for k, cp in new.items() if not cp.is_zero()}
    return _join(r, v, nvars) if r else MultiPoly.zero(nvars)


def content_in(p, v):
    g = None
    for cp in _split(p, v).values():
        g = cp if g is None else gcd(g, cp)
        if g.is_constant():
            return MultiPoly.const(p.nvars, 1)
    return g


def gcd(a, b):
    if a.is_zero():
        return normalize(b)
    if b.is_zero():
        return normalize(a)
    used = _vars_in(a) | _vars_in(b)
    if not used or a.is_constant() or b.is_constant():
        return MultiPoly.const(a.nvars, 1)
    v = max(used)
    if v not in _vars_in(a):
        return gcd(a, content_in(b, v))
    if v not in _vars_in(b):
        return gcd(content_in(a, v), b)
    ca, cb = content_in(a, v), content_in(b, v)
    A, B = divexact(a, ca), divexact(b, cb)
    if A.degree_in(v) < B.degree_in(v):
        A, B = B, A
    while not B.is_zero() and B.degree_in(v) > 0:
        R = _prem(A, B, v, a.nvars)
        A = B
        if R.is_zero():
            B = R
        else:
            B = normalize(divexact(R, content_in(R, v)))
    if B.is_zero():
        G = normalize(divexact(A, content_in(A, v)))
    else:
        G = MultiPoly.const(a.nvars, 1)
    return normalize(gcd(ca, cb) * G)


def integer_primitive(p):
    """Rescale to coprime integer coefficients with positive leading grlex term."""
    from math import gcd as igcd
    if p.is_zero():
        return p
    den = 1
    for c in p._terms.values():
        den = den * c.denominator // igcd(den, c.denominator)
    num = 0
    for c in p._terms.values():
        num = igcd(num, int(c * den))
    s = Fraction(den, num)
    if p.sorted_terms()[0][1] < 0:
        s = -s
    return p * s
