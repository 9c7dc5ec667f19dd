"""Good orientations: decision, witnesses and an exhaustive oracle."""

from __future__ import annotations

from itertools import permutations

import numpy as np

from ..errors import MissingVertex, TooLarge
from .core import Multigraph, OrderedReebGraph, OrientationWitness

BRUTE_FORCE_MAX_VERTICES = 10


def betti(g: Multigraph):
    b0 = len(g.components())
    return b0, len(g.edges) - len(g.vertex_ids) + b0


def is_good_orientation(g: Multigraph, w: OrientationWitness) -> bool:
    vals = w.values
    for v in g.vertex_ids:
        if v not in vals:
            raise MissingVertex(f"no value for vertex {v!r}")
    for u, v in g.edges:
        if vals[u] == vals[v]:
            return False
    for v in g.vertex_ids:
        nb = g.neighbors(v)
        if len(nb) >= 2:
            x = vals[v]
            if not any(vals[u] < x for u in nb) or not any(vals[u] > x for u in nb):
                return False
    return True


def _leafless_part(adj, deg, removed):
    """True when some component of the graph minus ``removed`` has no leaf."""
    seen = set(removed)
    for s in adj:
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        has_leaf = deg[s] <= 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    has_leaf = has_leaf or deg[w] <= 1
                    stack.append(w)
        if not has_leaf:
            return True
    return False


def _order_component(g: Multigraph, comp):
    """Vertex order of one connected component in which every vertex of
    degree >= 2 has an earlier and a later neighbor, or None."""
    if len(comp) == 1:
        return list(comp)
    adj = {v: g.neighbors(v) for v in comp}
    deg = {v: len(adj[v]) for v in comp}
    leaves = [v for v in comp if deg[v] == 1]
    if len(leaves) < 2:
        return None
    failed = set()

    def extend(order, placed):
        if len(order) == len(comp):
            return order
        key = frozenset(placed)
        if key in failed:
            return None
        # frontier first (keeps the placed part connected), breadth-first flavour
        cands = []
        seen = set()
        for u in order:
            for w in adj[u]:
                if w not in placed and w not in seen:
                    seen.add(w)
                    cands.append(w)
        for v in cands:
            if deg[v] >= 2 and all(w in placed for w in adj[v]):
                continue
            placed.add(v)
            if not _leafless_part(adj, deg, placed):
                order.append(v)
                got = extend(order, placed)
                if got is not None:
                    return got
                order.pop()
            placed.discard(v)
        failed.add(key)
        return None

    import sys
    limit = sys.getrecursionlimit()
    if len(comp) + 50 > limit:
        sys.setrecursionlimit(len(comp) + 100)
    try:
        for s in leaves:
            placed = {s}
            if _leafless_part(adj, deg, placed):
                continue
            got = extend([s], placed)
            if got is not None:
                return got
    finally:
        sys.setrecursionlimit(limit)
    return None


def find_good_orientation(g: Multigraph):
    """Witness with values 0..|V|-1, or None when no good orientation exists."""
    order = []
    for comp in g.components():
        part = _order_component(g, comp)
        if part is None:
            return None
        order += part
    return OrientationWitness({v: i for i, v in enumerate(order)})


def brute_force_good_orientation(g: Multigraph, max_vertices=BRUTE_FORCE_MAX_VERTICES) -> bool:
    """Exhaustive test of every total order of the vertices."""
    n = len(g.vertex_ids)
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the brute-force bound {max_vertices}")
    if n <= 1:
        return True
    idx = {v: i for i, v in enumerate(g.vertex_ids)}
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    # pos[k, v] = position of vertex v in the k-th order
    pos = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    pos[rows, perms] = np.arange(n, dtype=np.int8)[None, :]
    ok = np.ones(len(perms), dtype=bool)
    for v in g.vertex_ids:
        nb = [idx[u] for u in g.neighbors(v)]
        if len(nb) < 2:
            continue
        pv = pos[:, idx[v]][:, None]
        pn = pos[:, nb]
        ok &= (pn < pv).any(axis=1) & (pn > pv).any(axis=1)
        if not ok.any():
            return False
    return bool(ok.any())


def ordered_isomorphic(a: OrderedReebGraph, b: OrderedReebGraph) -> bool:
    if len(a.vertices) != len(b.vertices):
        return False
    return a.index_edges() == b.index_edges()
