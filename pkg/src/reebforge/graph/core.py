"""Finite multigraphs, orientation witnesses and ordered Reeb graphs."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import MissingVertex, ParseError


def _key(v):
    return (0, v) if isinstance(v, int) else (1, str(v))


class Multigraph:
    """Undirected multigraph without self-loops.  Immutable."""

    __slots__ = ("vertex_ids", "edges", "_adj")

    def __init__(self, vertex_ids: Iterable, edges: Iterable = ()):
        vs = tuple(dict.fromkeys(vertex_ids))
        known = set(vs)
        es = []
        for e in edges:
            u, v = tuple(e)
            if u not in known or v not in known:
                raise MissingVertex(f"edge ({u!r}, {v!r}) has an unknown endpoint")
            if u == v:
                raise ValueError(f"self-loop at {u!r} is not allowed")
            es.append((u, v) if _key(u) <= _key(v) else (v, u))
        es.sort(key=lambda e: (_key(e[0]), _key(e[1])))
        self.vertex_ids = vs
        self.edges = tuple(es)
        adj = {v: [] for v in vs}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = adj

    def degree(self, v):
        return len(self._adj[v])

    def neighbors(self, v):
        """Neighbors with multiplicity."""
        return list(self._adj[v])

    def degrees(self):
        return {v: len(n) for v, n in self._adj.items()}

    def leaves(self):
        return [v for v in self.vertex_ids if len(self._adj[v]) == 1]

    def components(self):
        seen = set()
        out = []
        for s in self.vertex_ids:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(comp)
        return out

    def subgraph(self, vs):
        keep = set(vs)
        return Multigraph([v for v in self.vertex_ids if v in keep],
                          [e for e in self.edges if e[0] in keep and e[1] in keep])

    def relabel(self, mapping):
        return Multigraph([mapping[v] for v in self.vertex_ids],
                          [(mapping[u], mapping[v]) for u, v in self.edges])

    def edge_multiset(self):
        return Counter(self.edges)

    def __eq__(self, other):
        return (isinstance(other, Multigraph) and set(self.vertex_ids) == set(other.vertex_ids)
                and self.edge_multiset() == other.edge_multiset())

    def __hash__(self):
        return hash((frozenset(self.vertex_ids), frozenset(self.edge_multiset().items())))

    def __repr__(self):
        return f"Multigraph({list(self.vertex_ids)!r}, {list(self.edges)!r})"


@dataclass(frozen=True)
class OrientationWitness:
    values: Mapping

    def __post_init__(self):
        object.__setattr__(self, "values", {k: Fraction(v) for k, v in dict(self.values).items()})

    def order(self):
        """Vertex ids sorted by value."""
        return sorted(self.values, key=lambda v: (self.values[v], _key(v)))


@dataclass
class OrderedReebGraph:
    """Reeb graph with vertices ordered by their projection value.

    ``vertices`` holds (id, x_value, degree) triples sorted by x_value;
    ``x_intervals`` optionally maps ids to certified (lo, hi) enclosures.
    """

    vertices: list
    edges: list
    components: int = 0
    x_intervals: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.vertices = sorted(((v, Fraction(x), d) for v, x, d in self.vertices),
                               key=lambda t: t[1])
        self.edges = [tuple(e) for e in self.edges]
        xs = [x for _, x, _ in self.vertices]
        if len(set(xs)) != len(xs):
            raise ValueError("x values must be pairwise distinct")
        deg = Counter()
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        for vid, _, d in self.vertices:
            if deg[vid] != d:
                raise ValueError(f"degree field of {vid!r} disagrees with the edges")
        if not self.components:
            self.components = len(self.to_multigraph().components())

    @classmethod
    def from_parts(cls, xs: Mapping, edges, **kw):
        deg = Counter()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return cls([(v, x, deg[v]) for v, x in xs.items()], list(edges), **kw)

    def ids(self):
        return [v for v, _, _ in self.vertices]

    def x_of(self):
        return {v: x for v, x, _ in self.vertices}

    def degree_sequence(self):
        return [d for _, _, d in self.vertices]

    def to_multigraph(self):
        return Multigraph(self.ids(), self.edges)

    def witness(self):
        return OrientationWitness(self.x_of())

    def index_edges(self):
        """Edge multiset in terms of x-ranks, each pair sorted."""
        rank = {v: i for i, (v, _, _) in enumerate(self.vertices)}
        return Counter(tuple(sorted((rank[u], rank[v]))) for u, v in self.edges)

    def to_json_obj(self, extra=None):
        verts = []
        for v, x, _ in self.vertices:
            item = {"id": str(v), "x": format_rational(x)}
            verts.append(item)
        edges = sorted([sorted([str(u), str(v)]) for u, v in self.edges])
        obj = {"vertices": verts, "edges": edges}
        if extra:
            obj.update(extra)
        return obj

    def to_json(self, extra=None):
        return dumps(self.to_json_obj(extra))


def format_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_from_json(obj):
    """Parse graph JSON (text or decoded object).  Returns (Multigraph, x map
    or None when not every vertex carries an x value)."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ParseError("graph JSON needs 'vertices' and 'edges'")
    ids = []
    xs = {}
    for item in obj["vertices"]:
        if isinstance(item, dict):
            if "id" not in item:
                raise ParseError("vertex without id")
            vid = str(item["id"])
            if "x" in item and item["x"] is not None:
                try:
                    xs[vid] = Fraction(str(item["x"]))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad x value for vertex {vid!r}") from exc
        else:
            vid = str(item)
        ids.append(vid)
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ParseError(f"edge {e!r} is not a pair")
        edges.append((str(e[0]), str(e[1])))
    try:
        g = Multigraph(ids, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return g, (xs if len(xs) == len(ids) and ids else None)


def multigraph_to_json_obj(g: Multigraph, w: OrientationWitness | None = None):
    verts = []
    for v in g.vertex_ids:
        item = {"id": str(v)}
        if w is not None and v in w.values:
            item["x"] = format_rational(w.values[v])
        verts.append(item)
    edges = sorted([sorted([str(u), str(v)]) for u, v in g.edges])
    return {"vertices": verts, "edges": edges}


def ordered_from_witness(g: Multigraph, w: OrientationWitness) -> OrderedReebGraph:
    return OrderedReebGraph.from_parts({v: w.values[v] for v in g.vertex_ids}, g.edges)
