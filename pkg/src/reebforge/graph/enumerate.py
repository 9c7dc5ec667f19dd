"""Enumeration of small connected multigraphs up to isomorphism."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .core import Multigraph
from .orientation import find_good_orientation


def _refine(nbrs, color):
    """Equitable refinement; colors are ranks, so the result is label-invariant."""
    while True:
        sig = [(color[v], tuple(sorted((color[u], m) for u, m in nbrs[v]))) for v in range(len(nbrs))]
        ranks = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(color)):
            return new
        color = new


def canonical_form(n, mult):
    """Canonical edge list for a multigraph on 0..n-1 given as {(i, j): m},
    by individualization and refinement."""
    nbrs = [[] for _ in range(n)]
    for (i, j), m in mult.items():
        nbrs[i].append((j, m))
        nbrs[j].append((i, m))
    start = _refine(nbrs, [sum(m for _, m in nbrs[v]) for v in range(n)])
    best = [None]

    def search(color):
        if len(set(color)) == n:
            form = tuple(sorted((min(color[i], color[j]), max(color[i], color[j]), m)
                                for (i, j), m in mult.items()))
            if best[0] is None or form < best[0]:
                best[0] = form
            return
        sizes = {}
        for c in color:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, k in sizes.items() if k > 1)
        for v in range(n):
            if color[v] == target:
                indiv = [2 * c + (0 if u == v else 1) if c == target else 2 * c
                         for u, c in enumerate(color)]
                search(_refine(nbrs, indiv))

    search(start)
    return (tuple(sorted(start)), best[0])


def _connected(n, mult):
    adj = [[] for _ in range(n)]
    for (i, j) in mult:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _realizations(degs):
    """Labeled loopless multigraphs with the given degree sequence.  Vertices
    of equal degree that no edge has touched yet are interchangeable, so their
    multiplicities towards the current row are forced to be non-increasing."""
    n = len(degs)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rem = list(degs)
    mult = {}
    fresh = [False] * n

    def rec(k):
        if k == len(pairs):
            if not any(rem):
                yield dict(mult)
            return
        i, j = pairs[k]
        if j == i + 1:
            saved = fresh[:]
            for v in range(n):
                fresh[v] = v > i and rem[v] == degs[v]
        last_for_i = j == n - 1
        hi = min(rem[i], rem[j])
        if j > i + 1 and fresh[j] and fresh[j - 1] and degs[j] == degs[j - 1]:
            hi = min(hi, mult.get((i, j - 1), 0))
        lo = rem[i] if last_for_i else 0
        if lo <= hi:
            for m in range(hi, lo - 1, -1):
                if m:
                    mult[(i, j)] = m
                rem[i] -= m
                rem[j] -= m
                yield from rec(k + 1)
                rem[i] += m
                rem[j] += m
                mult.pop((i, j), None)
        if j == i + 1:
            fresh[:] = saved

    yield from rec(0)


def connected_multigraphs(n, degrees):
    """Canonical forms of connected multigraphs on n vertices with all
    degrees drawn from ``degrees``, in a deterministic order."""
    degrees = sorted(set(degrees), reverse=True)
    seen = set()
    out = []
    for seq in combinations_with_replacement(degrees, n):
        if sum(seq) % 2 or sum(seq) // 2 < n - 1 or 0 in seq and n > 1:
            continue
        for mult in _realizations(list(seq)):
            if not _connected(n, mult):
                continue
            cf = canonical_form(n, mult)
            if cf not in seen:
                seen.add(cf)
                out.append(cf)
    out.sort(key=lambda cf: (sum(m for _, _, m in cf[1]), cf))
    return out


def _to_graph(cf):
    n = len(cf[0])
    edges = []
    for i, j, m in cf[1]:
        edges += [(f"v{i}", f"v{j}")] * m
    return Multigraph([f"v{i}" for i in range(n)], edges)


def enumerate_good_graphs(max_vertices, degrees):
    """Yield (Multigraph, OrientationWitness) for every connected multigraph
    up to isomorphism with at most ``max_vertices`` vertices, degrees in
    ``degrees`` and a good orientation."""
    for n in range(2, max_vertices + 1):
        for cf in connected_multigraphs(n, degrees):
            g = _to_graph(cf)
            w = find_good_orientation(g)
            if w is not None:
                yield g, w


def all_connected_multigraphs(max_vertices, max_edges):
    """Every connected loopless multigraph with 1..max_vertices vertices and
    at most max_edges edges, up to isomorphism.  Built from the atlas of
    simple graphs by distributing edge multiplicities modulo automorphisms."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    if max_vertices > 7:
        raise ValueError("the simple-graph atlas covers at most 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_vertices or h.number_of_edges() > max_edges:
            continue
        if not nx.is_connected(h):
            continue
        base = sorted(tuple(sorted(e)) for e in h.edges())
        m = len(base)
        autos = []
        for iso in GraphMatcher(h, h).isomorphisms_iter():
            index = {e: k for k, e in enumerate(base)}
            autos.append([index[tuple(sorted((iso[a], iso[b])))] for a, b in base])
        extra = max_edges - m
        seen = set()
        for k in range(extra + 1):
            for picks in combinations_with_replacement(range(m), k):
                vec = [1] * m
                for p in picks:
                    vec[p] += 1
                canon = min(tuple(vec[a[t]] for t in range(m)) for a in autos) if autos else tuple(vec)
                if canon in seen:
                    continue
                seen.add(canon)
                edges = []
                for (a, b), mult in zip(base, vec):
                    edges += [(f"v{a}", f"v{b}")] * mult
                yield Multigraph([f"v{i}" for i in range(n)], edges)
