import json
from fractions import Fraction
from itertools import combinations_with_replacement

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from reebforge.errors import MissingVertex, ParseError, TooLarge
from reebforge.graph import (Multigraph, OrderedReebGraph, OrientationWitness, all_connected_multigraphs,
                             betti, brute_force_good_orientation, dumps, enumerate_good_graphs,
                             find_good_orientation, graph_from_json, is_good_orientation,
                             multigraph_to_json_obj, ordered_isomorphic)

EDGE = Multigraph("ab", [("a", "b")])
THETA = Multigraph("ab", [("a", "b")] * 3)
PATH3 = Multigraph("abc", [("a", "b"), ("b", "c")])
YTREE = Multigraph(["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")])
LENS = Multigraph("abcd", [("a", "b"), ("b", "c"), ("b", "c"), ("c", "d")])


def annulus_graph(scale=1):
    xs = {"v0": -2 * scale, "v1": -1 * scale, "v2": 1 * scale, "v3": 2 * scale}
    return OrderedReebGraph.from_parts(xs, [("v0", "v1"), ("v1", "v2"), ("v1", "v2"), ("v2", "v3")])


def test_betti_examples():
    assert betti(EDGE) == (1, 0)
    assert betti(THETA) == (1, 2)
    assert betti(annulus_graph().to_multigraph()) == (1, 1)
    assert betti(Multigraph("abcd", [("a", "b"), ("c", "d")])) == (2, 0)


def test_self_loops_and_unknown_vertices_rejected():
    with pytest.raises(ValueError):
        Multigraph("a", [("a", "a")])
    with pytest.raises(MissingVertex):
        Multigraph("a", [("a", "b")])


def test_is_good_orientation_examples():
    assert is_good_orientation(EDGE, OrientationWitness({"a": 0, "b": 1}))
    assert not is_good_orientation(EDGE, OrientationWitness({"a": 0, "b": 0}))
    for vals in [(0, 1), (1, 0)]:
        assert not is_good_orientation(THETA, OrientationWitness(dict(zip("ab", vals))))
    with pytest.raises(MissingVertex):
        is_good_orientation(EDGE, OrientationWitness({"a": 0}))


def test_four_cycle_orientations_match_brute_force():
    # a 4-cycle has no degree-1 vertex, so every labeling has an internal extremum
    c4 = Multigraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    for vals in [(0, 1, 2, Fraction(3, 2)), (0, 1, 3, 2), (0, 2, 1, 3)]:
        assert not is_good_orientation(c4, OrientationWitness(dict(zip("abcd", vals))))
    assert not brute_force_good_orientation(c4)
    # with a pendant at each extreme the flanking labels become good
    c4p = Multigraph("abcdef", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("e", "a"), ("c", "f")])
    w = OrientationWitness({"e": -1, "a": 0, "b": 1, "d": Fraction(3, 2), "c": 2, "f": 3})
    assert is_good_orientation(c4p, w)
    assert brute_force_good_orientation(c4p)


def test_find_good_orientation_examples():
    w = find_good_orientation(PATH3)
    assert w is not None
    a, b, c = (w.values[v] for v in "abc")
    assert a < b < c or a > b > c
    assert sorted(w.values.values()) == [0, 1, 2]
    assert find_good_orientation(THETA) is None
    w = find_good_orientation(YTREE)
    assert is_good_orientation(YTREE, w)
    assert brute_force_good_orientation(YTREE)


def test_brute_force_bound():
    big = Multigraph(range(11), [(i, i + 1) for i in range(10)])
    with pytest.raises(TooLarge):
        brute_force_good_orientation(big)
    assert brute_force_good_orientation(EDGE)
    assert not brute_force_good_orientation(THETA)


def _brute_connected_multigraphs(n, max_edges):
    """All connected loopless multigraphs on n vertices, up to isomorphism,
    by listing every edge multiset and comparing with networkx."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    reps = []
    for k in range(n - 1, max_edges + 1):
        for es in combinations_with_replacement(pairs, k):
            h = nx.MultiGraph()
            h.add_nodes_from(range(n))
            h.add_edges_from(es)
            if not nx.is_connected(h):
                continue
            if any(nx.is_isomorphic(h, r) for r in reps):
                continue
            reps.append(h)
    return reps


@pytest.mark.parametrize("n,max_edges", [(1, 0), (2, 4), (3, 5), (4, 5)])
def test_multigraph_enumeration_matches_brute_force(n, max_edges):
    ours = [g for g in all_connected_multigraphs(n, max_edges) if len(g.vertex_ids) == n]
    assert len(ours) == len(_brute_connected_multigraphs(n, max_edges))


def test_orientation_search_agrees_with_oracle_on_four_vertices():
    for g in all_connected_multigraphs(4, 5):
        w = find_good_orientation(g)
        assert (w is not None) == brute_force_good_orientation(g)
        if w is not None:
            assert is_good_orientation(g, w)


def test_no_leaf_means_no_orientation():
    for g in all_connected_multigraphs(5, 7):
        if g.edges and 1 not in g.degrees().values():
            assert find_good_orientation(g) is None


def test_enumerate_examples():
    first = list(enumerate_good_graphs(2, {1}))
    assert len(first) == 1 and len(first[0][0].edges) == 1
    small = [g for g, _ in enumerate_good_graphs(4, {1, 3})]
    sizes = sorted((len(g.vertex_ids), len(g.edges)) for g in small)
    assert (4, 3) in sizes                      # the Y-tree
    assert all(not (len(g.vertex_ids) == 2 and len(g.edges) == 3) for g in small)


def test_enumerate_count_matches_independent_generator():
    ours = list(enumerate_good_graphs(6, {1, 3}))
    expected = [g for g in all_connected_multigraphs(6, 9)
                if len(g.vertex_ids) >= 2 and set(g.degrees().values()) <= {1, 3}
                and brute_force_good_orientation(g)]
    assert len(ours) == len(expected)
    for g, w in ours:
        assert is_good_orientation(g, w)


def test_enumerate_is_deterministic():
    a = [(g.edges, tuple(sorted(w.values.items()))) for g, w in enumerate_good_graphs(6, {1, 3})]
    b = [(g.edges, tuple(sorted(w.values.items()))) for g, w in enumerate_good_graphs(6, {1, 3})]
    assert a == b


def test_forests_have_b1_zero():
    for g in all_connected_multigraphs(5, 6):
        simple = len(set(g.edges)) == len(g.edges)
        tree = simple and len(g.edges) == len(g.vertex_ids) - 1
        assert (betti(g)[1] == 0) == tree


def test_ordered_isomorphic_examples():
    a = annulus_graph()
    assert ordered_isomorphic(a, a)
    assert ordered_isomorphic(a, annulus_graph(2))
    path = OrderedReebGraph.from_parts({"p0": 0, "p1": 1, "p2": 2, "p3": 3},
                                       [("p0", "p1"), ("p1", "p2"), ("p2", "p3")])
    assert not ordered_isomorphic(a, path)


labeled = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=6)


def _ordered(edges, perm):
    edges = [(u, v) for u, v in edges if u != v]
    xs = {f"n{i}": Fraction(perm[i]) for i in range(5)}
    return OrderedReebGraph.from_parts(xs, [(f"n{u}", f"n{v}") for u, v in edges])


@given(labeled, labeled, labeled, st.permutations(range(5)))
def test_ordered_isomorphic_is_an_equivalence(e1, e2, e3, perm):
    gs = [_ordered(e, perm) for e in (e1, e2, e3)]
    for a in gs:
        assert ordered_isomorphic(a, a)
        for b in gs:
            assert ordered_isomorphic(a, b) == ordered_isomorphic(b, a)
            for c in gs:
                if ordered_isomorphic(a, b) and ordered_isomorphic(b, c):
                    assert ordered_isomorphic(a, c)


def test_graph_json_round_trip():
    w = find_good_orientation(YTREE)
    text = dumps(multigraph_to_json_obj(YTREE, w))
    g, xs = graph_from_json(text)
    assert g == YTREE and xs == w.values
    assert json.loads(text)["vertices"][0]["x"].count("/") == 1
    assert dumps(multigraph_to_json_obj(YTREE, w)) == text


@pytest.mark.parametrize("text", ["{", "[]", '{"vertices": []}', '{"vertices": ["a"], "edges": [["a"]]}',
                                  '{"vertices": [{"id": "a", "x": "1/0"}], "edges": []}'])
def test_graph_json_errors(text):
    with pytest.raises(ParseError):
        graph_from_json(text)


def test_ordered_graph_rejects_equal_values():
    with pytest.raises(ValueError):
        OrderedReebGraph.from_parts({"a": 0, "b": 0}, [("a", "b")])
