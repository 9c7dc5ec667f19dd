"""Closed intervals with exact rational endpoints."""

from fractions import Fraction


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        self.lo, self.hi = lo, hi

    def __add__(self, o):
        o = o if isinstance(o, Interval) else Interval(o)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, o):
        o = o if isinstance(o, Interval) else Interval(o)
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, o):
        return Interval(o) - self

    def __mul__(self, o):
        if not isinstance(o, Interval):
            c = Fraction(o)
            return Interval(self.lo * c, self.hi * c) if c >= 0 else Interval(self.hi * c, self.lo * c)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k == 0:
            return Interval(1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2:
            return Interval(a, b)
        if self.lo >= 0:
            return Interval(a, b)
        if self.hi <= 0:
            return Interval(b, a)
        return Interval(0, max(a, b))

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def sign(self):
        """+1 / -1 when strictly signed, 0 when zero is not excluded."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def eval_multi(p, box):
    """Natural interval extension of a MultiPoly over a list of Intervals."""
    acc = Interval(0)
    cache = {}
    for exps, c in p.items():
        term = Interval(c)
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = box[i] ** e
                term = term * cache[key]
        acc = acc + term
    return acc


def eval_centered(p, grads, box):
    """Mean-value form p(m) + sum grad_i(box) * (box_i - m_i); grads are the
    partial derivatives of p.  Tighter than eval_multi on small boxes."""
    from .ops import evaluate
    m = [b.mid for b in box]
    acc = Interval(evaluate(p, m))
    for i, g in enumerate(grads):
        if g.is_zero():
            continue
        acc = acc + eval_multi(g, box) * (box[i] - m[i])
    return acc


def eval_best(p, grads, box):
    a = eval_multi(p, box)
    if a.sign():
        return a
    b = eval_centered(p, grads, box)
    return Interval(max(a.lo, b.lo), min(a.hi, b.hi)) if max(a.lo, b.lo) <= min(a.hi, b.hi) else b
