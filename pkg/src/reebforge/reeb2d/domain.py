"""Certified Poincaré-Reeb graphs of planar domains {q(x, y) >= 0}."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from ..config import precision_budget
from ..errors import (ArityError, DegenerateInput, InternalSweepError, NonRegularFiber,
                      NotCertifiablyCompact, NotMorse, NotStable, PrecisionExhausted,
                      Singular, ZeroPolynomial)
from ..graph.core import OrderedReebGraph
from ..poly import zpoly
from ..poly.algebraic import representative
from ..poly.core import Box2, IsolatingInterval, MultiPoly, UniPoly
from ..poly.mgcd import divexact
from ..poly.ops import (evaluate, is_negdef_top_form_2d, isolate_real_roots, partial_derivative,
                        squarefree_part, substitute_first, to_zx, top_form)
from ..poly.text import parse_poly
from .fold import FoldPoint, has_real_zero, solve_fold


class ExtremumType(enum.Enum):
    XMIN = "XMin"
    XMAX = "XMax"


class EventClass(enum.Enum):
    CAP_OPEN = "CapOpen"
    SPLIT = "Split"
    MERGE = "Merge"
    CAP_CLOSE = "CapClose"

    @property
    def degree(self):
        return 1 if self in (EventClass.CAP_OPEN, EventClass.CAP_CLOSE) else 3


@dataclass(frozen=True, eq=False)
class DomainSpec2:
    """The domain {q >= 0} in the plane."""

    q: MultiPoly
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.q.nvars != 2:
            raise ArityError("a planar domain needs a polynomial in 2 variables")
        if self.q.is_zero():
            raise ZeroPolynomial("the zero polynomial does not define a domain")

    @classmethod
    def parse(cls, text):
        return cls(parse_poly(text, 2))


@dataclass(frozen=True)
class CriticalPoint2:
    x_root: IsolatingInterval
    box: Box2
    extremum_type: ExtremumType
    event_class: EventClass
    second_derivative_sign: int
    qx_sign: int
    fold: FoldPoint = field(repr=False, compare=False, default=None)


def _rows(p):
    return to_zx(p)[0]


def _memo(d, key, fn):
    if key not in d._cache:
        d._cache[key] = fn()
    return d._cache[key]


def _parts(d):
    """(squarefree part, extra factor with q = qs * extra)."""
    def run():
        qs = squarefree_part(d.q)
        extra = divexact(d.q, qs)
        return qs, extra
    return _memo(d, "parts", run)


def _shear_to_monic(p):
    """p(x + t*y, y) for the smallest |t| making the y-leading coefficient
    a nonzero constant (t = 0 when it already is)."""
    rows = _rows(p)
    if len(rows[-1]) <= 1:
        return p
    top = top_form(p)
    t = 0
    k = 0
    while True:
        k += 1
        t = (k + 1) // 2 * (1 if k % 2 else -1)
        if substitute_first(top, t)(1) != 0:
            break
    x = MultiPoly.var(2, 0) + MultiPoly.const(2, t) * MultiPoly.var(2, 1)
    y = MultiPoly.var(2, 1)
    out = MultiPoly.zero(2)
    xp = {}
    for (i, j), c in p.items():
        if i not in xp:
            xp[i] = x ** i
        out = out + MultiPoly.const(2, c) * xp[i] * y ** j
    return out


def _y_content_degenerate(p):
    rows = _rows(p)
    if len(rows) < 2:
        return True
    g = []
    for r in rows:
        if r:
            g = r if not g else zpoly.gcd_poly(g, r)
    return zpoly.deg(g) >= 1


def check_nonsingular(d: DomainSpec2) -> bool:
    """True iff q, q_x and q_y have no common real zero."""
    def run():
        qs, extra = _parts(d)
        if _y_content_degenerate(qs):
            raise DegenerateInput("the zero set contains a vertical line component")
        if not extra.is_constant():
            es = squarefree_part(extra)
            if has_real_zero(_rows(_shear_to_monic(es))):
                return False
        p = _shear_to_monic(qs)
        qx = _rows(partial_derivative(p, 1))
        budget = precision_budget()
        return all(pt.sign_of(qx, budget) != 0 for pt in solve_fold(_rows(p)))
    return _memo(d, "nonsingular", run)


def check_compact(d: DomainSpec2) -> bool:
    return is_negdef_top_form_2d(d.q)


def _extra_sign(d):
    _, extra = _parts(d)
    if extra.is_constant():
        return 1 if extra.constant_value() > 0 else -1
    v = evaluate(extra, (0, 0))
    if v == 0:
        raise Singular("a repeated factor of q vanishes at the origin")
    return 1 if v > 0 else -1


def critical_points(d: DomainSpec2) -> list:
    """Critical points of the projection to x restricted to the boundary,
    sorted by x (then y)."""
    def run():
        qs, _ = _parts(d)
        rows = _rows(qs)
        if len(rows[-1]) > 1:
            raise NotCertifiablyCompact("the leading coefficient of q in y is not constant")
        eps = _extra_sign(d)
        qx = _rows(partial_derivative(qs, 1))
        qyy = _rows(partial_derivative(partial_derivative(qs, 2), 2))
        budget = precision_budget()
        out = []
        for pt in solve_fold(rows):
            sx = pt.sign_of(qx, budget)
            if sx == 0:
                raise Singular("the gradient of q vanishes on the zero set")
            syy = pt.sign_of(qyy, budget)
            if syy == 0:
                raise NotMorse("degenerate critical point: d2q/dy2 vanishes at a fold point")
            sx, syy = eps * sx, eps * syy
            out.append(_make_cp(pt, sx, syy))
        return out
    return _memo(d, "critical", run)


def _make_cp(pt, sx, syy):
    ext = ExtremumType.XMIN if -syy * sx > 0 else ExtremumType.XMAX
    a = pt.alpha
    xiv, yiv = pt.x_interval(), pt.y_interval()
    return CriticalPoint2(
        x_root=IsolatingInterval(a.lo, a.hi),
        box=Box2((xiv.lo, xiv.hi), (yiv.lo, yiv.hi)),
        extremum_type=ext,
        event_class=_classify(ext, sx),
        second_derivative_sign=syy,
        qx_sign=sx,
        fold=pt,
    )


def _classify(ext, sx):
    if ext is ExtremumType.XMIN:
        return EventClass.SPLIT if sx < 0 else EventClass.CAP_OPEN
    return EventClass.MERGE if sx > 0 else EventClass.CAP_CLOSE


def classify_critical_point(d: DomainSpec2, cp: CriticalPoint2) -> EventClass:
    return _classify(cp.extremum_type, cp.qx_sign)


def check_stable(d: DomainSpec2) -> bool:
    """True iff the critical values are pairwise distinct."""
    cps = critical_points(d)
    return len({id(cp.fold.alpha) for cp in cps}) == len(cps)


def _univariate_at(rows, a):
    coeffs = [zpoly.value_at(c, a) if c else Fraction(0) for c in rows]
    return zpoly.from_fractions(coeffs)[0]


def _line_at(rows, y):
    """qs(x, y0) as an integer polynomial in x."""
    y = Fraction(y)
    k = len(rows) - 1
    n, dd = y.numerator, y.denominator
    acc = []
    for j, c in enumerate(rows):
        if c:
            acc = zpoly.add(acc, zpoly.scale(c, n ** j * dd ** (k - j)))
    return acc


def fiber_components(d: DomainSpec2, a) -> list:
    """Maximal y-intervals of {y : q(a, y) >= 0}, as pairs of isolating
    intervals for their endpoints (None marks an unbounded end)."""
    a = Fraction(a)
    qs, _ = _parts(d)
    p = _univariate_at(_rows(qs), a)
    if not p:
        raise NonRegularFiber(f"q vanishes on the whole line x = {a}")
    g = zpoly.gcd_poly(p, zpoly.deriv(p))
    # repeated complex roots (q(a, y) = -(8 + y^2)^2, say) do not touch the fibre
    if zpoly.deg(g) >= 1 and zpoly.isolate(zpoly.squarefree(g)):
        raise NonRegularFiber(f"x = {a} is a critical value")
    roots = isolate_real_roots(UniPoly(Fraction(c) for c in p)) if zpoly.deg(p) >= 1 else []
    qa = _rows(d.q)

    def positive(y):
        return zpoly.sign_at(_univariate_at(qa, a), y) > 0

    cuts = [None]
    for r in roots:
        cuts.append(r)
    cuts.append(None)
    gaps = []
    for left, right in zip(cuts, cuts[1:]):
        if left is None and right is None:
            y = Fraction(0)
        elif left is None:
            y = right.lo - 1
        elif right is None:
            y = left.hi + 1
        else:
            y = (left.hi + right.lo) / 2
        gaps.append((left, right, positive(y)))
    comps = []
    cur = None
    for left, right, pos in gaps:
        if pos:
            if cur is None:
                cur = [left, right]
            else:
                cur[1] = right
        elif cur is not None:
            comps.append(tuple(cur))
            cur = None
    if cur is not None:
        comps.append(tuple(cur))
    return comps


def _count_in(p, lo, hi):
    return zpoly.count_roots_in(zpoly.squarefree(p), lo, hi)


def _bracket(pt: FoldPoint, rows, budget):
    """Locate the event in the fiber ordering.  Returns (side, p): side is
    'right' when the new pair of boundary arcs lives for x > alpha, and p
    counts the arcs strictly below the event."""
    for k in range(budget):
        delta = Fraction(1, 2 ** k)
        pt.refine(xw=delta * delta / 16, yw=delta / 4)
        a = pt.alpha
        aL, aR = a.lo, a.hi
        yiv = pt.y_interval()
        yl, yh = yiv.lo - delta, yiv.hi + delta
        ok = True
        for y0 in (yl, yh):
            h = _line_at(rows, y0)
            if (not h or zpoly.sign_at(h, aL) == 0 or zpoly.sign_at(h, aR) == 0
                    or zpoly.descartes_bound(h, aL, aR) > 0):
                ok = False
                break
        if not ok:
            continue
        pL = _univariate_at(rows, aL)
        pR = _univariate_at(rows, aR)
        cL, cR = _count_in(pL, yl, yh), _count_in(pR, yl, yh)
        if sorted((cL, cR)) != [0, 2]:
            continue
        bound = Fraction(2) ** max(zpoly.cauchy_bound_log2(pL), zpoly.cauchy_bound_log2(pR))
        belowL = _count_in(pL, -bound, yl)
        belowR = _count_in(pR, -bound, yl)
        if belowL != belowR:
            raise InternalSweepError("arc count below an event changes across its x-interval")
        return ("right" if cR == 2 else "left"), belowL
    raise PrecisionExhausted("could not bracket a critical point within the refinement budget")


def _event_from_bracket(side, p):
    if side == "right":
        return EventClass.CAP_OPEN if p % 2 == 0 else EventClass.SPLIT
    return EventClass.CAP_CLOSE if p % 2 == 0 else EventClass.MERGE


def poincare_reeb_graph(d: DomainSpec2) -> OrderedReebGraph:
    if not check_nonsingular(d):
        raise Singular("the zero set of q is singular")
    cps = critical_points(d)
    if not check_stable(d):
        raise NotStable("two critical points share a critical value")
    if not check_compact(d):
        raise NotCertifiablyCompact("the top form of q is not negative definite")
    return _memo(d, "graph", lambda: _sweep(d, cps))


def _sweep(d, cps):
    qs, _ = _parts(d)
    rows = _rows(qs)
    budget = precision_budget()
    verts = []
    edges = []
    x_intervals = {}
    active = []
    events = []
    for i, cp in enumerate(cps):
        side, p = _bracket(cp.fold, rows, budget)
        ev = _event_from_bracket(side, p)
        if ev is not cp.event_class:
            raise InternalSweepError(f"event at critical point {i} classified inconsistently")
        events.append(ev)
        vid = f"v{i}"
        a = cp.fold.alpha
        a.refine(Fraction(1, 1024))
        x = representative(a)
        verts.append((vid, x, ev.degree))
        x_intervals[vid] = (a.lo, a.hi)
        if ev is EventClass.CAP_OPEN:
            k = p // 2
            if k > len(active):
                raise InternalSweepError("new component outside the fiber")
            active.insert(k, vid)
        elif ev is EventClass.SPLIT:
            k = (p - 1) // 2
            if k >= len(active):
                raise InternalSweepError("split of a missing component")
            edges.append((active[k], vid))
            active[k:k + 1] = [vid, vid]
        elif ev is EventClass.CAP_CLOSE:
            k = p // 2
            if k >= len(active):
                raise InternalSweepError("cap of a missing component")
            edges.append((active[k], vid))
            del active[k]
        else:
            k = (p - 1) // 2
            if k + 1 >= len(active):
                raise InternalSweepError("merge of missing components")
            edges.append((active[k], vid))
            edges.append((active[k + 1], vid))
            active[k:k + 2] = [vid]
        if i + 1 < len(cps):
            nxt = cps[i + 1].fold.alpha
            s = (a.hi + nxt.lo) / 2
            if len(fiber_components(d, s)) != len(active):
                raise InternalSweepError(f"component count mismatch in slab at x = {s}")
    if active:
        raise InternalSweepError("components left open after the last critical value")
    g = OrderedReebGraph(verts, edges, x_intervals=x_intervals,
                         meta={"events": [e.value for e in events]})
    _assert_good(g)
    return g


def _assert_good(g):
    x = g.x_of()
    nb = {v: [] for v in x}
    for u, v in g.edges:
        nb[u].append(v)
        nb[v].append(u)
    for v, _, deg in g.vertices:
        if deg not in (1, 3):
            raise InternalSweepError(f"vertex {v} has degree {deg}")
        if deg >= 2 and not (any(x[u] < x[v] for u in nb[v]) and any(x[u] > x[v] for u in nb[v])):
            raise InternalSweepError(f"vertex {v} is an interior extremum")


def euler_characteristic(r: OrderedReebGraph) -> int:
    return len(r.vertices) - len(r.edges)
