"""Real algebraic numbers given by an isolating interval, with an exact
sign oracle for integer polynomials evaluated at them."""

from fractions import Fraction

from . import zpoly
from .interval import Interval


def eval_int_interval(c, iv):
    """Interval enclosure of the integer polynomial c over iv (Horner)."""
    if not c:
        return Interval(0)
    acc = Interval(c[-1])
    for v in reversed(c[:-1]):
        acc = acc * iv + v
    return acc


class RealAlg:
    """The unique root of the squarefree integer polynomial ``m`` inside the
    open interval (lo, hi), or an exact rational when ``exact`` is set."""

    __slots__ = ("m", "lo", "hi", "exact", "_slo")

    def __init__(self, m, lo, hi, exact=None):
        self.m = zpoly.primitive(m)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.exact = None if exact is None else Fraction(exact)
        self._slo = zpoly.sign_at(self.m, self.lo) if self.exact is None else 0
        if self.exact is None and (self._slo == 0 or self._slo == zpoly.sign_at(self.m, self.hi)):
            raise ValueError("interval does not isolate a simple root")

    @classmethod
    def rational(cls, r, m=None):
        r = Fraction(r)
        if m is None:
            m = [-r.numerator, r.denominator]
        return cls(m, r - 1, r + 1, exact=r)

    def interval(self):
        if self.exact is not None:
            return Interval(self.exact)
        return Interval(self.lo, self.hi)

    @property
    def width(self):
        return 0 if self.exact is not None else self.hi - self.lo

    def approx(self):
        return float(self.exact) if self.exact is not None else float((self.lo + self.hi) / 2)

    def midpoint(self):
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def bisect(self):
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        s = zpoly.sign_at(self.m, mid)
        if s == 0:
            self.exact = mid
            w = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - w, mid + w
        elif s == self._slo:
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width):
        width = Fraction(width)
        while self.exact is None and self.hi - self.lo > width:
            self.bisect()
        if self.exact is not None and self.hi - self.lo > width:
            w = width / 2
            self.lo, self.hi = self.exact - w, self.exact + w
        return self

    def is_root_of(self, c):
        if not c:
            return True
        if self.exact is not None:
            return zpoly.sign_at(c, self.exact) == 0
        g = zpoly.gcd_poly(self.m, c)
        if zpoly.deg(g) < 1:
            return False
        return zpoly.sign_at(g, self.lo) != zpoly.sign_at(g, self.hi)

    def sign(self, c):
        """Exact sign of the integer polynomial c at this number."""
        if not c:
            return 0
        if self.exact is not None:
            return zpoly.sign_at(c, self.exact)
        if zpoly.deg(c) < 1:
            return (c[0] > 0) - (c[0] < 0)
        s = eval_int_interval(c, self.interval()).sign()
        if s:
            return s
        if self.is_root_of(c):
            return 0
        while True:
            s = eval_int_interval(c, self.interval()).sign()
            if s:
                return s
            if zpoly.descartes_bound(c, self.lo, self.hi) == 0:
                return zpoly.sign_at(c, (self.lo + self.hi) / 2)
            self.bisect()
            if self.exact is not None:
                return zpoly.sign_at(c, self.exact)

    def separate(self, other):
        """Refine both until their intervals are disjoint; returns False when
        the two numbers are equal."""
        if self.exact is not None and other.exact is not None:
            return self.exact != other.exact
        if self.exact is not None:
            return not other.is_root_of([-self.exact.numerator, self.exact.denominator]) and _split(other, self)
        if other.exact is not None:
            return not self.is_root_of([-other.exact.numerator, other.exact.denominator]) and _split(self, other)
        g = zpoly.gcd_poly(self.m, other.m)
        if zpoly.deg(g) >= 1:
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            if lo < hi and zpoly.sign_at(g, self.lo) != zpoly.sign_at(g, self.hi) \
                    and zpoly.sign_at(g, other.lo) != zpoly.sign_at(g, other.hi):
                return False
        return _split(self, other)

    def __lt__(self, other):
        if not self.separate(other):
            return False
        return self.interval().hi <= other.interval().lo

    def __repr__(self):
        if self.exact is not None:
            return f"RealAlg({self.exact})"
        return f"RealAlg(~{self.approx():.6g} in ({self.lo}, {self.hi}))"


def _split(a, b):
    while True:
        ia, ib = a.interval(), b.interval()
        if ia.hi < ib.lo or ib.hi < ia.lo:
            return True
        if a.width >= b.width and a.exact is None:
            a.bisect()
        elif b.exact is None:
            b.bisect()
        else:
            a.bisect()


def simplest_between(lo, hi):
    """The rational of smallest denominator in the open interval (lo, hi)
    (smallest magnitude numerator among those)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    # continued fraction descent for 0 <= lo < hi
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        # lo is an integer and hi <= lo + 1
        return fl + 1 / simplest_between_open_inf(1 / (hi - fl))
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def simplest_between_open_inf(a):
    """Simplest rational strictly greater than a."""
    a = Fraction(a)
    return Fraction(a.numerator // a.denominator + 1)


def representative(alpha):
    """Exact value when rational, else the simplest rational in its interval."""
    if alpha.exact is not None:
        return alpha.exact
    r = simplest_between(alpha.lo, alpha.hi)
    if zpoly.sign_at(alpha.m, r) == 0:
        alpha.exact = r
    return r
