"""Real solutions of {q = 0, dq/dy = 0} for a bivariate q whose leading
coefficient in y is a nonzero constant.

The x-coordinates are the real roots of the squarefree part of the
resultant.  Above each root alpha the first nonvanishing principal
subresultant coefficient S_j gives the gcd of q(alpha, y) and q_y(alpha, y):
when j = 1 the solution is the rational function y = -s10/s11 of alpha,
otherwise the distinct real roots of S_j(alpha, y) are isolated with a
Sturm chain over Q(alpha).
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateInput, PrecisionExhausted
from ..poly import subres, zpoly
from ..poly.algebraic import RealAlg, eval_int_interval
from ..poly.interval import Interval
from .algfiber import AlgFiber, centered_sign


def y_derivative(rows):
    return [zpoly.scale(c, k) for k, c in enumerate(rows)][1:]


def _quotient(num: Interval, den: Interval):
    cands = [num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi]
    return Interval(min(cands), max(cands))


class FoldPoint:
    """One solution; ``alpha`` may be shared by several points."""

    def __init__(self, alpha, fiber, s1=None, f=None, seq=None, yiv=None):
        self.alpha = alpha
        self.fiber = fiber
        self.s1 = s1
        self.f = f
        self.seq = seq
        self.yiv = yiv

    @property
    def rational_beta(self):
        return self.s1 is not None

    def x_interval(self):
        return self.alpha.interval()

    def y_interval(self):
        if self.s1 is not None:
            s10, s11 = self.s1
            while True:
                xiv = self.alpha.interval()
                den = eval_int_interval(s11, xiv)
                if den.sign():
                    return _quotient(-eval_int_interval(s10, xiv), den)
                self.alpha.bisect()
        return Interval(*self.yiv)

    def refine(self, xw=None, yw=None):
        if xw is not None:
            self.alpha.refine(xw)
        if yw is not None:
            if self.s1 is not None:
                while self.y_interval().width > yw:
                    if self.alpha.exact is not None:
                        break
                    self.alpha.bisect()
            else:
                self.yiv = self.fiber.refine_root(self.f, self.seq, *self.yiv, yw)

    def shrink(self):
        """Halve the box in both directions."""
        xiv, yiv = self.x_interval(), self.y_interval()
        self.refine(xiv.width / 2 if xiv.width else None, yiv.width / 2 if yiv.width else None)

    def is_zero_of(self, rows):
        """Exact test: does the bivariate polynomial given by ``rows`` vanish here?"""
        if not any(rows):
            return True
        if self.s1 is not None:
            return self.alpha.is_root_of(_homogenize(rows, self.s1))
        g = self.fiber.gcd(self.f, rows)
        if len(g) < 2:
            return False
        return self.fiber.count_roots(g, *self.yiv) > 0

    def sign_of(self, rows, budget, quick=40):
        """Exact sign at this point: an interval certificate when one is
        found within ``quick`` refinements, else the exact zero test
        followed by certification with the full budget."""
        try:
            return self.certify_sign(rows, quick)
        except PrecisionExhausted:
            pass
        if self.is_zero_of(rows):
            return 0
        return self.certify_sign(rows, budget)

    def certify_sign(self, rows, budget):
        """Refine the box until the interval enclosure of ``rows`` is signed.
        The value must be known to be nonzero."""
        k = 0
        while True:
            s = centered_sign(rows, self.x_interval(), self.y_interval())
            if s:
                return s
            k += 1
            if budget is not None and k > budget:
                raise PrecisionExhausted("sign certification ran out of refinement budget")
            self.shrink()


def _homogenize(rows, s1):
    """sum_k P_k (-s10)^k s11^(D-k); its sign at alpha, times sign(s11)^D,
    is the sign of P(alpha, -s10/s11)."""
    s10, s11 = s1
    D = len(rows) - 1
    ms10 = zpoly.neg(s10)
    acc = []
    pa = [1]
    pows_b = [[1]]
    for _ in range(D):
        pows_b.append(zpoly.mul(pows_b[-1], s11))
    for k, c in enumerate(rows):
        if c:
            acc = zpoly.add(acc, zpoly.mul(c, zpoly.mul(pa, pows_b[D - k])))
        pa = zpoly.mul(pa, ms10)
    return acc


def fold_resultant(rows):
    """(chain, squarefree resultant).  Raises DegenerateInput when the
    resultant vanishes identically."""
    Qy = y_derivative(rows)
    if not any(Qy):
        raise DegenerateInput("the polynomial does not depend on y")
    S = subres.chain(subres.ZxRing, rows, Qy)
    R = S.get(0)
    R0 = zpoly.trim(R[0]) if R else []
    if not R0:
        raise DegenerateInput("the resultant of q and dq/dy vanishes identically")
    return S, zpoly.squarefree(R0)


def solve_fold(rows):
    """All real solutions, sorted by x then y."""
    S, Rsf = fold_resultant(rows)
    out = []
    if zpoly.deg(Rsf) < 1:
        return out
    top = len(rows) - 1
    for lo, hi, pt in zpoly.isolate(Rsf):
        alpha = RealAlg(Rsf, lo, hi, exact=pt)
        j = None
        for k in range(1, top):
            c = subres.psc(subres.ZxRing, S, k)
            if c and alpha.sign(c) != 0:
                j = k
                break
        if j is None:
            j = top - 1
        fiber = AlgFiber(alpha)
        if j == 1:
            s1 = S[1]
            s1 = (list(s1[0]) if len(s1) > 0 else [], list(s1[1]))
            out.append(FoldPoint(alpha, fiber, s1=s1))
            continue
        f = fiber.reduce([list(c) for c in S[j]])
        seq = fiber.sturm(f)
        for ylo, yhi in fiber.isolate(f):
            out.append(FoldPoint(alpha, fiber, f=f, seq=seq, yiv=(ylo, yhi)))
    return out


def has_real_zero(rows):
    """Does the curve given by ``rows`` (constant leading coefficient in y,
    squarefree) have a real point?"""
    if len(rows) < 2:
        return False
    S, Rsf = fold_resultant(rows)
    samples = []
    roots = zpoly.isolate(Rsf) if zpoly.deg(Rsf) >= 1 else []
    if not roots:
        samples = [Fraction(0)]
    else:
        samples.append(roots[0][0] - 1)
        for (a, b, _), (c, d, _) in zip(roots, roots[1:]):
            samples.append((b + c) / 2)
        samples.append(roots[-1][1] + 1)
    for a in samples:
        if _rows_at(rows, a):
            return True
    for lo, hi, pt in roots:
        alpha = RealAlg(Rsf, lo, hi, exact=pt)
        fiber = AlgFiber(alpha)
        if fiber.count_roots(fiber.reduce([list(c) for c in rows])) > 0:
            return True
    return False


def _rows_at(rows, a):
    """Number of distinct real roots of the univariate rows(a, y)."""
    coeffs = [zpoly.value_at(c, a) if c else Fraction(0) for c in rows]
    p = zpoly.from_fractions(coeffs)[0]
    if zpoly.deg(p) < 1:
        return 0
    return len(zpoly.isolate(p))
