"""Geometry of a realization: straight elliptical pieces blended into a
filled tree, with elliptical holes cut out for the bounded faces.

A tidy sweep script (every bounded face a lens) is read slab by slab.  The
edges crossing a slab group into runs separated only by holes; a run is one
component of the filled domain.  Runs are carried by pieces: a piece starts
at a cap or branches off its host at a split of the filled tree, and ends
at a cap or dives back into a host at a merge.  A branching piece keeps its
tip hidden inside the host, so the crotch between them appears close to the
vertex abscissa.

The axis of every piece is a straight line chosen by a linear program that
keeps neighbouring pieces apart and fixes the branching angles.  The exact
polynomial is

    q = (sum_k 2 prod_{i != k} (1 + Q_i) - prod_i (1 + Q_i)) * prod_h H_h

with Q_i the sheared-ellipse quadratic of piece i and H_h that of hole h
minus one.  Its top form is minus a product of positive definite forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, sqrt

import numpy as np

from ..errors import ClearanceViolated, UnrealizableEmbedding
from ..poly.core import MultiPoly
from .embed import analyze_faces

SAMPLES = (0.02, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.98)


class NotDecomposable(UnrealizableEmbedding):
    """The script has a filled-tree split with holes on both sides."""


@dataclass
class Piece:
    pid: int
    start: int
    end: int = -1
    start_kind: str = "cap"
    end_kind: str = "cap"
    host_start: int = None
    side_start: int = 0
    host_end: int = None
    side_end: int = 0
    holes: list = field(default_factory=list)
    xl: Fraction = None
    xr: Fraction = None
    w: Fraction = None
    y: Fraction = Fraction(0)
    slope: Fraction = Fraction(0)

    @property
    def m(self):
        return (self.xl + self.xr) / 2

    @property
    def h(self):
        return (self.xr - self.xl) / 2

    def taper(self, x):
        t = 1 - (float(x - self.m) / float(self.h)) ** 2
        return sqrt(t) if t > 0 else 0.0

    def axis(self, x):
        return self.y + self.slope * (x - self.m)


@dataclass
class Hole:
    face: int
    start: int
    end: int = -1
    piece: int = None
    slot: int = 0
    off: Fraction = Fraction(0)
    a: Fraction = None
    b: Fraction = None


@dataclass
class Decomposition:
    pieces: list
    holes: dict
    runs: list          # per slab: list of (pid, edges, hole faces) bottom to top
    nevents: int
    opens: tuple = ()   # events that open a new component
    xs: list = None


def decompose(script) -> Decomposition:
    gap_labels, faces = analyze_faces(script)
    bounded = {f for f, info in faces.items() if info["bounded"]}
    for f in bounded:
        if not faces[f]["simple"]:
            raise NotDecomposable("a bounded face is not a lens")
    pieces, holes, all_runs = [], {}, []
    reach = _forward_reach(script)
    prev = []
    for k, ev in enumerate(script.events):
        gaps = gap_labels[k]
        runs = []
        for i, e in enumerate(ev.after):
            if i and gaps[i] in bounded:
                runs[-1][1].append(e)
                runs[-1][2].append(gaps[i])
            else:
                runs.append([None, [e], []])
        for f in {g for g in gaps if g in bounded}:
            if f not in holes:
                holes[f] = Hole(f, k)
        for f in list(holes):
            if holes[f].end < 0 and f not in gaps and holes[f].start < k:
                holes[f].end = k
        owner = {}
        for i, r in enumerate(prev):
            for e in r[1]:
                owner[e] = i
        via = {owner[e] for e in ev.incoming}
        src = []
        for r in runs:
            s = set()
            for e in r[1]:
                if e in ev.outgoing:
                    s |= via
                else:
                    s.add(owner[e])
            src.append(s)
        dst = {i: [j for j, s in enumerate(src) if i in s] for i in range(len(prev))}
        for i, js in dst.items():
            if not js:
                pieces[prev[i][0]].end = k
                pieces[prev[i][0]].end_kind = "cap"
            elif len(js) == 2:
                a, b = js
                ha, hb = _alive(runs[a], k, holes), _alive(runs[b], k, holes)
                if ha and hb:
                    raise NotDecomposable("filled-tree split with holes on both sides")
                if ha or hb:
                    keep, new = (b, a) if hb else (a, b)
                else:
                    # the longer-lived side stays on the host so the branch is short
                    ra = max(reach[e] for e in runs[a][1])
                    rb = max(reach[e] for e in runs[b][1])
                    keep, new = (b, a) if rb > ra else (a, b)
                runs[keep][0] = prev[i][0]
                p = Piece(len(pieces), k, start_kind="branch", host_start=prev[i][0],
                          side_start=1 if new > keep else -1)
                pieces.append(p)
                runs[new][0] = p.pid
        for j, s in enumerate(src):
            if runs[j][0] is not None:
                continue
            if not s:
                p = Piece(len(pieces), k)
                pieces.append(p)
                runs[j][0] = p.pid
            elif len(s) == 1:
                runs[j][0] = prev[next(iter(s))][0]
            else:
                a, b = sorted(s)
                ha, hb = bool(prev[a][2]), bool(prev[b][2])
                if ha and hb:
                    raise NotDecomposable("filled-tree merge with holes on both sides")
                if ha or hb:
                    keep, gone = (b, a) if hb else (a, b)
                else:
                    sa, sb = pieces[prev[a][0]].start, pieces[prev[b][0]].start
                    keep, gone = (b, a) if sb < sa else (a, b)
                runs[j][0] = prev[keep][0]
                q = pieces[prev[gone][0]]
                q.end, q.end_kind = k, "merge"
                q.host_end = prev[keep][0]
                q.side_end = 1 if gone > keep else -1
        for r in runs:
            for f in r[2]:
                h = holes[f]
                if h.piece is None:
                    h.piece = r[0]
                elif h.piece != r[0]:
                    raise NotDecomposable("a hole changes pieces")
        all_runs.append([(r[0], tuple(r[1]), tuple(r[2])) for r in runs])
        prev = runs
    for p in pieces:
        p.holes = [f for f, h in holes.items() if h.piece == p.pid]
    opens = tuple(k for k, ev in enumerate(script.events) if not ev.incoming)
    return Decomposition(pieces, holes, all_runs, len(script.events), opens)


def _forward_reach(script):
    """Last event index reachable upward from each edge."""
    pos = {v: i for i, v in enumerate(script.order)}
    out, inc = {}, {}
    for e, (a, b) in enumerate(script.edges):
        out.setdefault(a, []).append(e)
        inc.setdefault(b, []).append(e)
    reach = {}
    for v in reversed(script.order):
        r = max([pos[v]] + [reach[e] for e in out.get(v, [])])
        for e in inc.get(v, []):
            reach[e] = r
    return reach


def _alive(run, k, holes):
    return any(holes[f].start < k for f in run[2])


@dataclass
class LayoutParams:
    width: Fraction = Fraction(1, 8)
    tip_depth: Fraction = Fraction(2, 5)
    window: float = 0.8
    slope_lo: float = 2.5
    slope_hi: float = 10.0
    gap_factor: float = 2.0
    grid: int = 256
    depth: Fraction = Fraction(1, 2)
    sharp: Fraction = Fraction(4)
    cap_gap: Fraction = Fraction(2)


def _xs(d):
    if d.xs is None:
        return [Fraction(k) for k in range(d.nevents)]
    return d.xs


def _event_xs(d: Decomposition, lp):
    """Event abscissas: unit gaps, widened after a cap so that a branch
    leaving right after it finds its host already wide."""
    xs = [Fraction(0)]
    for k in range(1, d.nevents):
        xs.append(xs[-1] + (lp.cap_gap if k - 1 in d.opens else 1))
    return xs


def _round_up(v, den):
    return Fraction(ceil(v * den), den)


def _round(v, den):
    return Fraction(round(v * den), den)


def _slot_holes(d: Decomposition, lp: LayoutParams):
    b = lp.width / 2
    pitch = 3 * b
    for p in d.pieces:
        hs = [d.holes[f] for f in p.holes]
        below = {h.face: set() for h in hs}
        for runs in d.runs:
            for pid, _, fs in runs:
                if pid == p.pid:
                    for i, f in enumerate(fs):
                        below[f].update(fs[:i])
        slot = {}

        def depth(f):
            if f not in slot:
                slot[f] = 1 + max((depth(g) for g in below[f]), default=-1)
            return slot[f]
        for h in hs:
            depth(h.face)
        top = max(slot.values(), default=0)
        for h in hs:
            h.slot = slot[h.face]
            h.off = (h.slot - Fraction(top, 2)) * pitch
            h.b = b


def _assign_extents(d: Decomposition, lp: LayoutParams):
    X = _xs(d)
    for p in d.pieces:
        p.xl = X[p.start] - (lp.tip_depth if p.start_kind == "branch" else 0)
        p.xr = X[p.end] + (lp.tip_depth if p.end_kind == "merge" else 0)
    for h in d.holes.values():
        h.a = (X[h.end] - X[h.start]) / 2
    for p in d.pieces:
        need = float(lp.width)
        for f in p.holes:
            h = d.holes[f]
            xm = X[h.start] + h.a
            for t in np.linspace(0, 1, 41):
                x = X[h.start] + Fraction(t) * 2 * h.a
                th = sqrt(max(0.0, 1 - (float(x - xm) / float(h.a)) ** 2))
                tp = p.taper(x)
                if tp <= 0:
                    raise ClearanceViolated("a hole reaches the tip of its piece")
                need = max(need, (abs(float(h.off)) + float(h.b) * th + float(h.b)) / tp)
        p.w = _round_up(need, 64)


def _bodies(d: Decomposition, k):
    """Pieces present in slab k (between events k and k+1), bottom to top,
    including tips hidden inside their hosts."""
    order = [pid for pid, _, _ in d.runs[k]]
    for p in d.pieces:
        if p.start_kind == "branch" and p.start == k + 1:
            i = order.index(p.host_start)
            order.insert(i + 1 if p.side_start > 0 else i, p.pid)
        if p.end_kind == "merge" and p.end == k:
            i = order.index(p.host_end)
            order.insert(i + 1 if p.side_end > 0 else i, p.pid)
    return order


def solve_layout(d: Decomposition, lp: LayoutParams):
    """Choose axis heights and slopes by linear programming."""
    from scipy.optimize import linprog

    d.xs = _event_xs(d, lp)
    _slot_holes(d, lp)
    _assign_extents(d, lp)
    n = len(d.pieces)
    X = [float(x) for x in _xs(d)]
    nv = 3 * n + 2
    iy = lambda p: 2 * p
    isl = lambda p: 2 * p + 1
    A_ub, b_ub, A_eq, b_eq = [], [], [], []

    def line(pid, x, coef):
        row = np.zeros(nv)
        p = d.pieces[pid]
        row[iy(pid)] += coef
        row[isl(pid)] += coef * (x - float(p.m))
        return row

    def half(pid, x):
        p = d.pieces[pid]
        return float(p.w) * p.taper(x)

    for k in range(d.nevents - 1):
        body = _bodies(d, k)
        for lo, hi in zip(body, body[1:]):
            P, R = d.pieces[lo], d.pieces[hi]
            for t in SAMPLES:
                x = X[k] + t * (X[k + 1] - X[k])
                if not (float(P.xl) < x < float(P.xr) and float(R.xl) < x < float(R.xr)):
                    continue
                if _junction_window(P, R, x, X, lp):
                    continue
                gap = lp.gap_factor * (float(P.w) + float(R.w))
                row = line(lo, x, 1) + line(hi, x, -1)
                A_ub.append(row)
                b_ub.append(-(half(lo, x) + half(hi, x) + gap))
        for pid in body:
            for t in SAMPLES:
                x = X[k] + t * (X[k + 1] - X[k])
                P = d.pieces[pid]
                if not float(P.xl) < x < float(P.xr):
                    continue
                row = line(pid, x, 1)
                row[3 * n + 1] = -1
                A_ub.append(row)
                b_ub.append(-half(pid, x))
                row = line(pid, x, -1)
                row[3 * n] = 1
                A_ub.append(row)
                b_ub.append(-half(pid, x))
    for p in d.pieces:
        for kind in ("start", "end"):
            host = p.host_start if kind == "start" else p.host_end
            if host is None:
                continue
            side = p.side_start if kind == "start" else p.side_end
            xt = float(p.xl if kind == "start" else p.xr)
            A_eq.append(line(p.pid, xt, 1) - line(host, xt, 1))
            b_eq.append(side * float(lp.depth) * half(host, xt))
            ws = float(p.w + d.pieces[host].w)
            sgn = side if kind == "start" else -side
            row = np.zeros(nv)
            row[isl(p.pid)] = sgn
            row[isl(host)] = -sgn
            A_ub.append(row.copy())
            b_ub.append(lp.slope_hi * ws)
            A_ub.append(-row)
            b_ub.append(-lp.slope_lo * ws)
    for p in range(n):
        row = np.zeros(nv)
        row[isl(p)] = 1
        row[2 * n + p] = -1
        A_ub.append(row)
        b_ub.append(0.0)
        row = np.zeros(nv)
        row[isl(p)] = -1
        row[2 * n + p] = -1
        A_ub.append(row)
        b_ub.append(0.0)
    row = np.zeros(nv)
    row[iy(0)] = 1
    A_eq.append(row)
    b_eq.append(0.0)
    c = np.zeros(nv)
    c[2 * n:3 * n] = 1
    c[3 * n] = -0.1
    c[3 * n + 1] = 0.1
    bounds = [(None, None)] * (2 * n) + [(0, None)] * n + [(None, None)] * 2
    res = linprog(c, A_ub=np.array(A_ub) if A_ub else None, b_ub=b_ub or None,
                  A_eq=np.array(A_eq), b_eq=b_eq, bounds=bounds, method="highs")
    if res.status != 0:
        raise ClearanceViolated(f"no layout satisfies the clearance constraints ({res.message})")
    for p in d.pieces:
        p.y = _round(res.x[iy(p.pid)], lp.grid)
        p.slope = _round(res.x[isl(p.pid)], lp.grid)
    return d


def _junction_window(P, R, x, X, lp):
    for B, A in ((P, R), (R, P)):
        if B.host_start == A.pid and x < X[B.start] + lp.window:
            return True
        if B.host_end == A.pid and x > X[B.end] - lp.window:
            return True
    return False


# exact assembly ---------------------------------------------------------

def _quad(nv, m, h, y0, slope, w):
    x = MultiPoly.var(2, 0)
    y = MultiPoly.var(2, 1)
    u = (x - MultiPoly.const(2, m)) * MultiPoly.const(2, 1 / Fraction(h))
    v = (y - MultiPoly.const(2, y0) - (x - MultiPoly.const(2, m)) * MultiPoly.const(2, slope)) \
        * MultiPoly.const(2, 1 / Fraction(w))
    return u * u + v * v


def piece_quadratic(p: Piece):
    return _quad(2, p.m, p.h, p.y, p.slope, p.w)


def hole_quadratic(h: Hole, p: Piece, X):
    m = X[h.start] + h.a
    return _quad(2, m, h.a, p.axis(m) + h.off, p.slope, h.b)


def assemble(d: Decomposition, sharp=Fraction(4)) -> MultiPoly:
    X = _xs(d)
    one = MultiPoly.const(2, 1)
    k = MultiPoly.const(2, sharp)
    bumps = [one + k * piece_quadratic(p) for p in d.pieces]
    total = MultiPoly.const(2, 1)
    for b in bumps:
        total = total * b
    acc = MultiPoly.zero(2)
    for k in range(len(bumps)):
        prod = MultiPoly.const(2, 1 + sharp)
        for i, b in enumerate(bumps):
            if i != k:
                prod = prod * b
        acc = acc + prod
    q = acc - total
    for h in d.holes.values():
        q = q * (hole_quadratic(h, d.pieces[h.piece], X) - one)
    return _primitive(q)


def _primitive(q: MultiPoly) -> MultiPoly:
    from math import gcd, lcm
    den = 1
    for c in q.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in q.terms.values():
        num = gcd(num, c.numerator * (den // c.denominator))
    return q * MultiPoly.const(2, Fraction(den, num))


def field_values(d: Decomposition, xs, ys, sharp=4.0):
    """Float evaluation of the blended field (sum of bumps minus one,
    times the hole factors) on arrays."""
    X = _xs(d)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    acc = -np.ones(np.broadcast(xs, ys).shape)
    for p in d.pieces:
        u = (xs - float(p.m)) / float(p.h)
        v = (ys - float(p.y) - float(p.slope) * (xs - float(p.m))) / float(p.w)
        acc = acc + (1.0 + sharp) / (1.0 + sharp * (u * u + v * v))
    for h in d.holes.values():
        p = d.pieces[h.piece]
        m = X[h.start] + h.a
        c = float(p.axis(m) + h.off)
        u = (xs - float(m)) / float(h.a)
        v = (ys - c - float(p.slope) * (xs - float(m))) / float(h.b)
        acc = acc * (u * u + v * v - 1.0)
    return acc


def bounding_box(d: Decomposition, margin=1):
    ys = []
    for p in d.pieces:
        for x in (p.xl, p.xr):
            ys += [p.axis(x) - p.w, p.axis(x) + p.w]
    return ((min(p.xl for p in d.pieces) - margin, max(p.xr for p in d.pieces) + margin),
            (min(ys) - margin, max(ys) + margin))
