"""Upward planar embeddings of good-oriented multigraphs.

An embedding is found as a sweep script: walking through the vertices in
witness order, the edges crossing the current vertical line are kept as a
bottom-to-top list.  A vertex replaces its incoming edges, which must be
consecutive, by its outgoing edges in some order.  Every script yields a
drawing with x-monotone, pairwise non-crossing routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from ..errors import UnrealizableEmbedding
from ..graph.core import Multigraph, OrientationWitness
from ..graph.orientation import is_good_orientation


@dataclass
class Event:
    vertex: object
    incoming: tuple
    outgoing: tuple
    before: tuple
    after: tuple
    at: int          # index in ``before`` where the incoming block starts (or insertion slot)


@dataclass
class SweepScript:
    order: list
    edges: list      # (lower endpoint, upper endpoint) by edge index
    events: list
    faces: dict = field(default_factory=dict)

    def lifetime(self, e):
        """(start event index, end event index) of an edge."""
        lo, hi = self.edges[e]
        pos = {v: i for i, v in enumerate(self.order)}
        return pos[lo], pos[hi]


@dataclass
class EmbeddedGraph:
    positions: dict
    routes: list         # (u, v, [(x, y), ...]) with u the left end
    script: SweepScript = None

    def edges(self):
        return [(u, v) for u, v, _ in self.routes]


def _oriented_edges(g: Multigraph, w: OrientationWitness):
    vals = w.values
    out = []
    for u, v in g.edges:
        out.append((u, v) if vals[u] < vals[v] else (v, u))
    return out


def sweep_scripts(g: Multigraph, w: OrientationWitness, limit=None):
    """Yield every SweepScript (up to ``limit``) of the oriented graph."""
    order = w.order()
    edges = _oriented_edges(g, w)
    inc = {v: [] for v in order}
    outg = {v: [] for v in order}
    for k, (a, b) in enumerate(edges):
        outg[a].append(k)
        inc[b].append(k)
    count = [0]

    def out_orders(v):
        seen = set()
        for p in permutations(outg[v]):
            key = tuple(edges[e] for e in p)
            if key not in seen:
                seen.add(key)
                yield p

    def rec(i, active, events):
        if limit is not None and count[0] >= limit:
            return
        if i == len(order):
            count[0] += 1
            yield SweepScript(order, edges, list(events))
            return
        v = order[i]
        ins = inc[v]
        if not ins:
            slots = range(len(active) + 1)
            for s in slots:
                for p in out_orders(v):
                    after = active[:s] + tuple(p) + active[s:]
                    events.append(Event(v, (), tuple(p), active, after, s))
                    yield from rec(i + 1, after, events)
                    events.pop()
            return
        where = sorted(active.index(e) for e in ins)
        if where[-1] - where[0] != len(ins) - 1:
            return
        s = where[0]
        outs = list(out_orders(v)) if outg[v] else [()]
        for p in outs:
            after = active[:s] + tuple(p) + active[s + len(ins):]
            events.append(Event(v, tuple(active[s:s + len(ins)]), tuple(p), active, after, s))
            yield from rec(i + 1, after, events)
            events.pop()

    yield from rec(0, (), [])


def analyze_faces(script: SweepScript):
    """Label the gaps of every slab with faces of the drawing.

    Returns (gap labels per slab, face info) where slab k is the region
    right of event k and face info maps a face root to a dict with keys
    ``bounded``, ``created`` (event indices), ``killed`` (event indices)
    and ``simple``.
    """
    parent = [0]

    def new():
        parent.append(len(parent))
        return len(parent) - 1

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    gaps = [0]                      # outer face is label 0
    slabs = []
    created, killed, joined, entered = {}, {}, set(), set()
    for k, ev in enumerate(script.events):
        s = ev.at
        nin, nout = len(ev.incoming), len(ev.outgoing)
        if nin == 0:
            # the vertex sits in gap s; every new gap belongs to the same face
            f = gaps[s]
            entered.add(f)
            gaps = gaps[:s] + [f] * (nout + 1) + gaps[s + 1:]
        else:
            inner = gaps[s + 1:s + nin]     # gaps between incoming edges die here
            for f in inner:
                killed.setdefault(f, []).append(k)
            if nout == 0:
                a, b = gaps[s], gaps[s + nin]
                ra, rb = find(a), find(b)
                if ra != rb:
                    joined.update((ra, rb))
                    parent[max(ra, rb)] = min(ra, rb)
                merged = [a]
            else:
                merged = [gaps[s]]
                for _ in range(nout - 1):
                    f = new()
                    created[f] = k
                    merged.append(f)
                merged.append(gaps[s + nin])
            gaps = gaps[:s] + merged + gaps[s + nin + 1:]
        slabs.append(list(gaps))
    roots = {}
    for f in range(len(parent)):
        r = find(f)
        info = roots.setdefault(r, {"members": [], "created": [], "killed": []})
        info["members"].append(f)
        if f in created:
            info["created"].append(created[f])
        info["killed"] += killed.get(f, [])
    for r, info in roots.items():
        info["bounded"] = find(0) != r
        info["simple"] = (info["bounded"] and len(info["members"]) == 1
                          and len(info["created"]) == 1 and len(info["killed"]) == 1
                          and info["members"][0] not in entered)
    return [[find(f) for f in gs] for gs in slabs], roots


def script_is_tidy(script: SweepScript):
    """Every bounded face is a lens: created at one vertex, destroyed at one
    vertex, and never entered by a leaf."""
    _, faces = analyze_faces(script)
    return all(info["simple"] for info in faces.values() if info["bounded"])


def _decomposable(script):
    from .layout import NotDecomposable, decompose
    try:
        decompose(script)
    except NotDecomposable:
        return False
    return True


def _find_script(g, w, accept=None, limit=200000):
    first = None
    for sc in sweep_scripts(g, w, limit=limit):
        if first is None:
            first = sc
        if accept is None or accept(sc):
            return sc
    return first if accept is None else None


def drawing_from_script(script: SweepScript, xs=None) -> EmbeddedGraph:
    """Place vertex k of the order at x = xs[k] (default k) and route every
    edge through its slot in each event column."""
    n = len(script.order)
    xs = [Fraction(k) for k in range(n)] if xs is None else [Fraction(x) for x in xs]
    columns = []
    for ev in script.events:
        col = list(ev.before)
        if ev.incoming:
            col[ev.at:ev.at + len(ev.incoming)] = [("v", ev.vertex)]
        else:
            col.insert(ev.at, ("v", ev.vertex))
        columns.append(col)
    positions = {}
    ys = []
    for k, col in enumerate(columns):
        mid = Fraction(len(col) - 1, 2)
        ys.append({item: Fraction(i) - mid for i, item in enumerate(col)})
        positions[script.order[k]] = (xs[k], ys[k][("v", script.order[k])])
    mids = []
    for k, ev in enumerate(script.events[:-1]):
        mid = Fraction(len(ev.after) - 1, 2)
        mids.append(((xs[k] + xs[k + 1]) / 2, {e: Fraction(i) - mid for i, e in enumerate(ev.after)}))
    pos = {v: i for i, v in enumerate(script.order)}
    routes = []
    for e, (a, b) in enumerate(script.edges):
        i, j = pos[a], pos[b]
        pts = [positions[a]]
        for k in range(i, j):
            pts.append((mids[k][0], mids[k][1][e]))
            if k + 1 < j:
                pts.append((xs[k + 1], ys[k + 1][e]))
        pts.append(positions[b])
        routes.append((a, b, pts))
    return EmbeddedGraph(positions, routes, script)


def upward_embed(g: Multigraph, w: OrientationWitness, prefer_tidy=True) -> EmbeddedGraph:
    if not is_good_orientation(g, w):
        raise ValueError("the witness is not a good orientation")
    sc = None
    if prefer_tidy:
        sc = _find_script(g, w, _decomposable) or _find_script(g, w, script_is_tidy)
    if sc is None:
        sc = _find_script(g, w)
    if sc is None:
        raise UnrealizableEmbedding("no non-crossing x-monotone routing exists for this order")
    return drawing_from_script(sc)


def _segments_cross(p, q, r, s):
    """Proper or touching intersection of closed segments pq and rs."""
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    def on(a, b, c):
        return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])

    o1, o2, o3, o4 = orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and on(p, q, r)) or (o2 == 0 and on(p, q, s))
            or (o3 == 0 and on(r, s, p)) or (o4 == 0 and on(r, s, q)))


def routes_cross(e: EmbeddedGraph):
    """True when two routes meet anywhere other than a shared endpoint."""
    segs = []
    for k, (a, b, pts) in enumerate(e.routes):
        for p, q in zip(pts, pts[1:]):
            segs.append((k, p, q))
    ends = {k: {tuple(pts[0]), tuple(pts[-1])} for k, (_, _, pts) in enumerate(e.routes)}
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            ki, p, q = segs[i]
            kj, r, s = segs[j]
            if ki == kj:
                continue
            if max(p[0], q[0]) < min(r[0], s[0]) or max(r[0], s[0]) < min(p[0], q[0]):
                continue
            if not _segments_cross(p, q, r, s):
                continue
            shared = ends[ki] & ends[kj]
            touch = {pt for pt in (p, q, r, s) if pt in shared}
            if touch and _only_touch_at(p, q, r, s, touch):
                continue
            return True
    return False


def _only_touch_at(p, q, r, s, touch):
    """Segments meeting only at a common endpoint in ``touch``."""
    for t in touch:
        if t in (p, q) and t in (r, s):
            a = q if t == p else p
            b = s if t == r else r
            # collinear overlap beyond t would be a real crossing
            cross = (a[0] - t[0]) * (b[1] - t[1]) - (a[1] - t[1]) * (b[0] - t[0])
            if cross != 0:
                return True
            dot = (a[0] - t[0]) * (b[0] - t[0]) + (a[1] - t[1]) * (b[1] - t[1])
            return dot < 0
    return False
