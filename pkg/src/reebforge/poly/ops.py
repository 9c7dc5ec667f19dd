"""Calculus, projection and certified root operations on exact polynomials."""

from __future__ import annotations

import enum
from fractions import Fraction

from ..errors import ArityError, NotIsolating, ZeroPolynomial
from . import mgcd, subres, zpoly
from .core import Box2, IsolatingInterval, MultiPoly, UniPoly, as_rational
from .interval import Interval, eval_best


class Sign(enum.Enum):
    NEGATIVE = -1
    ZERO_POSSIBLE = 0
    POSITIVE = 1


def partial_derivative(p: MultiPoly, i: int) -> MultiPoly:
    """Derivative with respect to the i-th variable, 1-based."""
    if not 1 <= i <= p.nvars:
        raise ArityError(f"variable index {i} outside 1..{p.nvars}")
    k = i - 1
    out = {}
    for e, c in p.items():
        if e[k]:
            e2 = e[:k] + (e[k] - 1,) + e[k + 1:]
            out[e2] = c * e[k]
    return MultiPoly._raw(p.nvars, out)


def evaluate(p: MultiPoly, point) -> Fraction:
    if len(point) != p.nvars:
        raise ArityError(f"expected {p.nvars} coordinates, got {len(point)}")
    pt = [as_rational(v) for v in point]
    powers = [dict() for _ in pt]
    acc = Fraction(0)
    for e, c in p.items():
        term = c
        for i, k in enumerate(e):
            if k:
                pw = powers[i].get(k)
                if pw is None:
                    pw = pt[i] ** k
                    powers[i][k] = pw
                term *= pw
        acc += term
    return acc


def substitute_first(p: MultiPoly, a) -> UniPoly:
    if p.nvars != 2:
        raise ArityError("substitute_first needs a bivariate polynomial")
    a = as_rational(a)
    deg = p.degree_in(1)
    cs = [Fraction(0)] * (deg + 1)
    for (i, j), c in p.items():
        cs[j] += c * a ** i
    return UniPoly(cs)


def substitute_last(p: MultiPoly, b) -> UniPoly:
    """p(x, b) as a polynomial in x."""
    if p.nvars != 2:
        raise ArityError("substitute_last needs a bivariate polynomial")
    b = as_rational(b)
    deg = p.degree_in(0)
    cs = [Fraction(0)] * (deg + 1)
    for (i, j), c in p.items():
        cs[i] += c * b ** j
    return UniPoly(cs)


def top_form(p: MultiPoly) -> MultiPoly:
    if p.is_zero():
        raise ZeroPolynomial("top form of the zero polynomial")
    d = p.degree()
    return MultiPoly._raw(p.nvars, {e: c for e, c in p.items() if sum(e) == d})


def is_negdef_top_form_2d(p: MultiPoly) -> bool:
    if p.nvars != 2:
        raise ArityError("is_negdef_top_form_2d needs a bivariate polynomial")
    qd = top_form(p)
    d = p.degree()
    if d % 2 or d == 0:
        return False
    if qd.coefficient((0, d)) >= 0:
        return False
    u = substitute_first(qd, 1)
    if isolate_real_roots(u):
        return False
    return u(0) < 0


def _int_of(u: UniPoly):
    if u.is_zero():
        raise ZeroPolynomial("zero polynomial has no isolated roots")
    return zpoly.from_fractions(u.coeffs)[0]


def isolate_real_roots(u: UniPoly) -> list[IsolatingInterval]:
    a = _int_of(u)
    if zpoly.deg(a) < 1:
        return []
    raw = zpoly.isolate(a)
    g = zpoly.gcd_poly(a, zpoly.deriv(a))
    gsf = zpoly.squarefree(g) if zpoly.deg(g) >= 1 else None
    p = zpoly.squarefree(a)
    out = []
    for lo, hi, pt in raw:
        if pt is None and hi - lo > 1:
            lo, hi, pt2 = zpoly.refine(p, lo, hi, Fraction(1))
            if pt2 is not None:
                pt = pt2
        simple = True
        if gsf is not None:
            if pt is not None:
                simple = zpoly.sign_at(gsf, pt) != 0
            else:
                simple = zpoly.sign_at(gsf, lo) == zpoly.sign_at(gsf, hi)
        out.append(IsolatingInterval(lo, hi, simple))
    return out


def refine_root(u: UniPoly, iv: IsolatingInterval, width) -> IsolatingInterval:
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p = zpoly.squarefree(_int_of(u))
    try:
        lo, hi, _ = zpoly.refine(p, iv.lo, iv.hi, width)
    except ValueError as exc:
        raise NotIsolating(f"({iv.lo}, {iv.hi}) does not isolate a root") from exc
    return IsolatingInterval(lo, hi, iv.multiplicity_one)


def to_zx(p: MultiPoly):
    """Bivariate p as integer polynomials in x indexed by the power of y,
    together with the positive denominator that was cleared."""
    from math import gcd
    den = 1
    for c in p._terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    dy = p.degree_in(1)
    dx = p.degree_in(0)
    rows = [[0] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), c in p.items():
        rows[j][i] = int(c * den)
    return [zpoly.trim(r) for r in rows], den


def resultant_zx(P, Q):
    return subres.resultant(subres.ZxRing, P, Q)


def resultant_wrt_second(p: MultiPoly, r: MultiPoly) -> UniPoly:
    if p.nvars != 2 or r.nvars != 2:
        raise ArityError("resultant_wrt_second needs bivariate polynomials")
    if p.is_zero() or r.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    P, dp = to_zx(p)
    Q, dq = to_zx(r)
    res = resultant_zx(P, Q)
    scale = Fraction(1, dp ** (len(Q) - 1) * dq ** (len(P) - 1))
    return UniPoly(Fraction(c) * scale for c in res)


def _certainly_squarefree(p: MultiPoly) -> bool:
    """A repeated factor depending on variable i survives any specialization
    of the other variables that keeps the degree in i, so squarefree
    specializations in every variable prove p squarefree."""
    for i in range(p.nvars):
        di = p.degree_in(i)
        if di == 0:
            continue
        ok = False
        for shift in range(3):
            pt = [Fraction(k + 2 + shift) for k in range(p.nvars)]
            cs = [Fraction(0)] * (di + 1)
            for e, c in p.items():
                term = c
                for k, ek in enumerate(e):
                    if k != i and ek:
                        term *= pt[k] ** ek
                cs[e[i]] += term
            if cs[-1] == 0:
                continue
            a = zpoly.from_fractions(cs)[0]
            if di == 1 or zpoly.coprime_by_modular_test(a, zpoly.deriv(a)):
                ok = True
            break
        if not ok:
            return False
    return True


def squarefree_part(p: MultiPoly) -> MultiPoly:
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.is_constant():
        return MultiPoly.const(p.nvars, 1)
    if _certainly_squarefree(p):
        return mgcd.integer_primitive(p)
    g = p
    for i in range(1, p.nvars + 1):
        d = partial_derivative(p, i)
        if not d.is_zero():
            g = mgcd.gcd(g, d)
            if g.is_constant():
                break
    if g.is_constant():
        return mgcd.integer_primitive(p)
    return mgcd.integer_primitive(mgcd.divexact(p, g))


def sign_on_box(p: MultiPoly, b: Box2, budget: int = 64) -> Sign:
    if p.nvars != 2:
        raise ArityError("sign_on_box needs a bivariate polynomial")
    if p.is_zero():
        return Sign.ZERO_POSSIBLE
    grads = [partial_derivative(p, 1), partial_derivative(p, 2)]
    start = [Interval(*b.x_interval), Interval(*b.y_interval)]
    queue = [start]
    seen = 0
    signs = set()
    while queue:
        box = queue.pop()
        s = eval_best(p, grads, box).sign()
        if s:
            signs.add(s)
            if len(signs) > 1:
                return Sign.ZERO_POSSIBLE
            continue
        if seen >= budget:
            return Sign.ZERO_POSSIBLE
        seen += 1
        bx, by = box
        if bx.width >= by.width:
            m = bx.mid
            queue += [[Interval(bx.lo, m), by], [Interval(m, bx.hi), by]]
        else:
            m = by.mid
            queue += [[bx, Interval(by.lo, m)], [bx, Interval(m, by.hi)]]
    (s,) = signs
    return Sign.POSITIVE if s > 0 else Sign.NEGATIVE
