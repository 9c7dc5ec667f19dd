"""Polynomials in y whose coefficients are integer polynomials in x,
evaluated at a real algebraic x = alpha.

A polynomial is a list of dense integer polynomials (low to high in y).
Every coefficient is reduced modulo the defining polynomial of alpha and
the whole list is only ever rescaled by positive integers, so signs at
alpha are preserved.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd

from ..poly import zpoly
from ..poly.algebraic import RealAlg, eval_int_interval
from ..poly.interval import Interval


class AlgFiber:
    def __init__(self, alpha: RealAlg):
        self.alpha = alpha
        self.m = alpha.m

    # coefficient level -------------------------------------------------
    def sign(self, c):
        return self.alpha.sign(c)

    def reduce(self, f):
        """Reduce every coefficient modulo m, scaling uniformly by a
        positive power of lc(m); then strip the integer content."""
        dm = zpoly.deg(self.m)
        if dm < 1:
            return self.trim([list(c) for c in f])
        lcm_ = self.m[-1]
        es = [max(0, zpoly.deg(c) - dm + 1) for c in f]
        top = max(es, default=0)
        out = []
        for c, e in zip(f, es):
            r = zpoly.prem(c, self.m) if e else list(c)
            # prem scaled c by lcm_^e; bring everyone to lcm_^top
            if top - e:
                r = zpoly.scale(r, lcm_ ** (top - e))
            out.append(r)
        return self.trim(out)

    def trim(self, f):
        f = [zpoly.trim(c) for c in f]
        while f and (not f[-1] or self.sign(f[-1]) == 0):
            f.pop()
        g = 0
        for c in f:
            for v in c:
                g = gcd(g, v)
        if g > 1:
            f = [[v // g for v in c] for c in f]
        return f

    # polynomial level --------------------------------------------------
    @staticmethod
    def deg(f):
        return len(f) - 1

    def lc_sign(self, f):
        return self.sign(f[-1])

    def deriv(self, f):
        return self.trim([zpoly.scale(c, k) for k, c in enumerate(f)][1:])

    def prem(self, a, b):
        """lc(b)^(deg a - deg b + 1) * a mod b, reduced."""
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            return self.reduce(a)
        lb = b[-1]
        r = [list(c) for c in a]
        for i in range(da - db, -1, -1):
            c = r[i + db]
            r = [zpoly.mul(lb, v) for v in r]
            if c:
                for j, bc in enumerate(b):
                    r[i + j] = zpoly.sub(r[i + j], zpoly.mul(c, bc))
            r.pop()
        return self.reduce(r)

    def gcd(self, a, b):
        a, b = self.trim(a), self.trim(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            a, b = b, self.prem(a, b)
        return a

    def value_sign(self, f, y):
        """Sign of f(alpha, y) at a rational y."""
        y = Fraction(y)
        n, d = y.numerator, y.denominator
        k = len(f) - 1
        acc = []
        for i, c in enumerate(f):
            if c:
                acc = zpoly.add(acc, zpoly.scale(c, n ** i * d ** (k - i)))
        return self.sign(acc)

    def sturm(self, f):
        f = self.trim(f)
        seq = [f]
        if len(f) < 2:
            return seq
        nxt = self.deriv(f)
        while nxt:
            seq.append(nxt)
            a, b = seq[-2], seq[-1]
            r = self.prem(a, b)
            if not r:
                break
            # prem scaled a by lc(b)^(delta+1); undo the sign and negate
            if self.lc_sign(b) < 0 and (len(a) - len(b) + 1) % 2:
                nxt = r
            else:
                nxt = [zpoly.neg(c) for c in r]
        return seq

    def _variations_at(self, seq, y):
        signs = []
        for f in seq:
            if y == "+inf":
                s = self.lc_sign(f)
            elif y == "-inf":
                s = self.lc_sign(f) * (-1 if (len(f) - 1) % 2 else 1)
            else:
                s = self.value_sign(f, y)
            if s:
                signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count_roots(self, f, lo="-inf", hi="+inf"):
        """Distinct real roots of f(alpha, .) in (lo, hi); finite endpoints
        must not be roots."""
        f = self.trim(f)
        if len(f) < 2:
            return 0
        seq = self.sturm(f)
        return self._variations_at(seq, lo) - self._variations_at(seq, hi)

    def root_bound(self, f):
        """Rational B with every real root of f(alpha, .) inside (-B, B)."""
        f = self.trim(f)
        while True:
            iv = self.alpha.interval()
            lead = eval_int_interval(f[-1], iv)
            if lead.sign():
                low = min(abs(lead.lo), abs(lead.hi))
                top = Fraction(0)
                for c in f[:-1]:
                    e = eval_int_interval(c, iv)
                    top = max(top, abs(e.lo), abs(e.hi))
                return 1 + top / low + 1
            self.alpha.bisect()

    def isolate(self, f):
        """Disjoint rational intervals (lo, hi), each holding exactly one
        distinct real root of f(alpha, .), sorted."""
        f = self.trim(f)
        if len(f) < 2:
            return []
        seq = self.sturm(f)
        B = self.root_bound(f)
        out = []
        stack = [(-B, B)]
        while stack:
            lo, hi = stack.pop()
            n = self._variations_at(seq, lo) - self._variations_at(seq, hi)
            if n == 0:
                continue
            if n == 1:
                out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            mid = self._nonroot_near(f, mid, (hi - lo) / 8)
            stack += [(lo, mid), (mid, hi)]
        out.sort()
        return out

    def _nonroot_near(self, f, y, span):
        k = 1
        cand = y
        while self.value_sign(f, cand) == 0:
            cand = y + span / (k + 1) * (1 if k % 2 else -1)
            k += 1
        return cand

    def refine_root(self, f, seq, lo, hi, width):
        """Shrink (lo, hi), isolating one root, to the requested width."""
        while hi - lo > width:
            mid = self._nonroot_near(f, (lo + hi) / 2, (hi - lo) / 8)
            n = self._variations_at(seq, lo) - self._variations_at(seq, mid)
            if n:
                hi = mid
            else:
                lo = mid
        return lo, hi


def centered_sign(rows, xiv: Interval, yiv: Interval):
    """Sign of sum_k rows[k](x) y^k on the whole box, or 0 when undecided.

    The polynomial is re-expanded exactly around a dyadic centre
    (a/N, b/N) of the box and the value at the centre is compared with the
    sum of the absolute higher-order terms over the box radius."""
    wx, wy = xiv.hi - xiv.lo, yiv.hi - yiv.lo
    w = max(wx, wy)
    k = 64 if w == 0 else max(4, 4 - int(w).bit_length() if w >= 1 else
                              4 + (w.denominator // max(1, w.numerator)).bit_length())
    N = 1 << k
    a = floor((xiv.lo + xiv.hi) / 2 * N)
    b = floor((yiv.lo + yiv.hi) / 2 * N)
    rx = max(xiv.hi * N - a, a - xiv.lo * N)
    ry = max(yiv.hi * N - b, b - yiv.lo * N)
    RS, RT = ceil(rx), ceil(ry)
    D = max((j + len(c) - 1 for j, c in enumerate(rows) if c), default=0)
    cols = []
    for j, c in enumerate(rows):
        if not c:
            cols.append([])
            continue
        scaled = [v * N ** (D - i - j) for i, v in enumerate(c)]
        cols.append(zpoly.taylor_shift(scaled, a))
    width = max((len(c) for c in cols), default=0)
    r00 = 0
    bound = 0
    for i in range(width):
        tpoly = zpoly.taylor_shift([c[i] if i < len(c) else 0 for c in cols], b)
        for j, v in enumerate(tpoly):
            if i == 0 and j == 0:
                r00 = v
            elif v:
                bound += abs(v) * RS ** i * RT ** j
    if abs(r00) > bound:
        return 1 if r00 > 0 else -1
    return 0


def rows_enclosure(rows, xiv: Interval, yiv: Interval):
    """Interval enclosure of sum_k rows[k](x) y^k over a box."""
    acc = Interval(0)
    ypow = Interval(1)
    for c in rows:
        if c:
            acc = acc + eval_int_interval(c, xiv) * ypow
        ypow = ypow * yiv
    return acc
