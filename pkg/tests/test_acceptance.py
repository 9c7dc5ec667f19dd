"""Acceptance gate.  Each test prints one PASS/FAIL line for its criterion.

Criterion 3 realizes the whole eight-vertex corpus and takes a quarter of an
hour on one core; criteria 4 and 8 reuse its output.
"""

import time
from fractions import Fraction

import pytest

from reebforge.errors import (NotCertifiablyCompact, NotStable, RealizationFailed, Singular,
                              UnrealizableEmbedding)
from reebforge.graph import (Multigraph, all_connected_multigraphs, betti, brute_force_good_orientation,
                             enumerate_good_graphs, find_good_orientation, is_good_orientation,
                             ordered_from_witness, ordered_isomorphic)
from reebforge.poly import MultiPoly, is_negdef_top_form_2d
from reebforge.realize import RealizationConfig, TubeSpec, attach_tube_3d, nested_spheres, realize_2d
from reebforge.reeb2d import (DomainSpec2, check_compact, check_nonsingular, check_stable,
                              euler_characteristic, poincare_reeb_graph)
from reebforge.sampled import (GridSpec, critical_points_numeric, domain_box, double_grid,
                               double_polynomial, sampled_double_reeb, sampled_reeb)

from test_reeb2d import reparametrize

from conftest import (ANNULUS, DISC, ELLIPTIC, EXACT_FIXTURES, POINT, TWO_CIRCLES, TWO_DISCS, P,
                      pixel_euler)


@pytest.fixture
def report(capsys):
    def report(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
        assert ok, detail
    return report


@pytest.fixture(scope="module")
def corpus():
    """Realize every corpus graph; (graph, witness, status, q, seconds, retries)."""
    out = []
    for g, w in enumerate_good_graphs(8, {1, 3}):
        t = time.time()
        rep, q = {}, None
        try:
            q, _ = realize_2d(g, w, RealizationConfig(max_retries=4), report=rep)
            status = "ok"
        except UnrealizableEmbedding:
            status = "unembeddable"
        except RealizationFailed:
            status = "failed"
        out.append((g, w, status, q, time.time() - t, rep.get("retries")))
    return out


def test_criterion_1_exact_fixtures(report):
    times = []
    t = time.time()
    disc = poincare_reeb_graph(DomainSpec2(P(DISC)))
    times.append(time.time() - t)
    t = time.time()
    ann = poincare_reeb_graph(DomainSpec2(P(ANNULUS)))
    times.append(time.time() - t)
    ok = (len(disc.vertices) == 2 and disc.degree_sequence() == [1, 1]
          and euler_characteristic(disc) == 1)
    ok &= ann.degree_sequence() == [1, 3, 3, 1] and betti(ann.to_multigraph()) == (1, 1)
    ivs = [ann.x_intervals[v] for v in ann.ids()]
    ok &= all(lo <= c <= hi for (lo, hi), c in zip(ivs, (-2, -1, 1, 2)))
    ok &= all(a[1] < b[0] for a, b in zip(ivs, ivs[1:]))
    ok &= max(times) < 5
    report(1, ok, f"disc {disc.degree_sequence()}, annulus {ann.degree_sequence()}, "
                  f"slowest {max(times):.2f}s")


def test_criterion_2_orientation_oracle(report):
    t = time.time()
    graphs = list(all_connected_multigraphs(7, 9))
    wrong = 0
    for g in graphs:
        w = find_good_orientation(g)
        if (w is not None) != brute_force_good_orientation(g) or (w is not None and not is_good_orientation(g, w)):
            wrong += 1
    theta = Multigraph("ab", [("a", "b")] * 3)
    theta_ok = find_good_orientation(theta) is None and not brute_force_good_orientation(theta)
    dt = time.time() - t
    report(2, wrong == 0 and theta_ok and dt < 600,
           f"{len(graphs)} multigraphs, {wrong} disagreements, theta rejected={theta_ok}, {dt:.0f}s")


def test_criterion_3_realization_round_trip(corpus, report):
    embeddable = [e for e in corpus if e[2] != "unembeddable"]
    good = 0
    for g, w, status, q, dt, _ in embeddable:
        if status != "ok" or dt > 180:
            continue
        d = DomainSpec2(q)
        iso = ordered_isomorphic(poincare_reeb_graph(d), ordered_from_witness(g, w))
        good += check_nonsingular(d) and check_compact(d) and check_stable(d) and iso
    done = [e for e in embeddable if e[2] == "ok"]
    slowest = max(e[4] for e in embeddable)
    retries = max((e[5] for e in done), default=None)
    report(3, bool(embeddable) and good == len(embeddable),
           f"{good}/{len(embeddable)} embeddable graphs realized and verified "
           f"({len(corpus) - len(embeddable)} without upward embedding), slowest {slowest:.0f}s, "
           f"max retries {retries}")


def test_criterion_4_certificates(corpus, report):
    qs = [e[3] for e in corpus if e[2] == "ok"]
    bad = sum(not (is_negdef_top_form_2d(q) and check_nonsingular(DomainSpec2(q))) for q in qs)
    report(4, bad == 0 and bool(qs), f"{len(qs)} realized polynomials, {bad} without exact certificates")


def _fixture_grid(q, resolution):
    return GridSpec(domain_box(q), resolution)


def test_criterion_5_doubling(report):
    lines, ok = [], True
    for name, text in (("disc", DISC), ("annulus", ANNULUS), ("two discs", TWO_DISCS)):
        q = P(text)
        exact = poincare_reeb_graph(DomainSpec2(q))
        for res in (128, 256):
            grid = _fixture_grid(q, res)
            s = sampled_double_reeb(q, grid)
            pts = critical_points_numeric(-double_polynomial(q), double_grid(q, grid))
            y = max(abs(p[-1]) for p in pts)
            good = ordered_isomorphic(exact, s.to_ordered()) and y < 1e-3
            ok &= good
            lines.append(f"{name}@{res}:{'ok' if good else 'bad'}")
    report(5, ok, " ".join(lines))


def test_criterion_6_degree_two_phenomena(report):
    shell = nested_spheres(3, 1, 2)
    grid = GridSpec.cube(3, Fraction(5, 2), 128)
    a, b = sampled_reeb(shell, 3, grid), sampled_reeb(shell, 3, grid.with_resolution(256))
    ball = P("9 - x^2 - y^2 - z^2", 3)
    tube = attach_tube_3d(ball, TubeSpec(((-1, 0, 0), (1, 0, 0)), Fraction(1, 4)))
    tgrid = GridSpec.cube(3, Fraction(15, 4), 128)
    c, d = sampled_reeb(tube, 3, tgrid), sampled_reeb(tube, 3, tgrid.with_resolution(256))
    path = [1, 2, 2, 1]
    ok = all(s.degree_sequence() == path for s in (a, b, c, d))
    ok &= ordered_isomorphic(a.to_ordered(), b.to_ordered())
    ok &= ordered_isomorphic(c.to_ordered(), d.to_ordered())
    report(6, ok, f"shell {a.degree_sequence()}/{b.degree_sequence()}, "
                  f"ball with tube {c.degree_sequence()}/{d.degree_sequence()}")


AFFINE = [(Fraction(1, 3), Fraction(-7, 2)), (Fraction(1), Fraction(2)), (Fraction(5, 2), Fraction(0)),
          (Fraction(4), Fraction(-1, 8))]
SCALES = [Fraction(1, 100), Fraction(3, 7), Fraction(64)]


def test_criterion_7_invariance(report):
    failures = []
    for name, (text, *_rest) in sorted(EXACT_FIXTURES.items()):
        q = P(text)
        r = poincare_reeb_graph(DomainSpec2(q))
        if not is_good_orientation(r.to_multigraph(), r.witness()):
            failures.append(f"{name}:orientation")
        if not set(r.degree_sequence()) <= {1, 3}:
            failures.append(f"{name}:degrees")
        for a, b in AFFINE:
            if not ordered_isomorphic(r, poincare_reeb_graph(DomainSpec2(reparametrize(q, a, b)))):
                failures.append(f"{name}:affine {a},{b}")
        for k in SCALES:
            s = poincare_reeb_graph(DomainSpec2(q * MultiPoly.const(2, k)))
            if s.to_json() != r.to_json():
                failures.append(f"{name}:scale {k}")
    report(7, not failures, f"{len(EXACT_FIXTURES)} fixtures x {len(AFFINE)} affine maps x "
                            f"{len(SCALES)} scalings; failures {failures or 'none'}")


def test_criterion_8_euler_characteristic(corpus, report):
    mismatches = []
    for name, (text, *_rest) in sorted(EXACT_FIXTURES.items()):
        q = P(text)
        if euler_characteristic(poincare_reeb_graph(DomainSpec2(q))) != pixel_euler(q, 512):
            mismatches.append(name)
    realized = [e[3] for e in corpus if e[2] == "ok"][:20]
    for k, q in enumerate(realized):
        if euler_characteristic(poincare_reeb_graph(DomainSpec2(q))) != pixel_euler(q, 512):
            mismatches.append(f"realized {k}")
    report(8, not mismatches and len(realized) == 20,
           f"{len(EXACT_FIXTURES)} fixtures and {len(realized)} realized outputs at 512x512; "
           f"mismatches {mismatches or 'none'}")


def test_criterion_9_taxonomy(report):
    seen = {}
    for text, exc in ((TWO_CIRCLES, NotStable), (POINT, Singular), (ELLIPTIC, NotCertifiablyCompact)):
        try:
            poincare_reeb_graph(DomainSpec2(P(text)))
            seen[text] = "accepted"
        except (NotStable, Singular, NotCertifiablyCompact) as e:
            seen[text] = type(e).__name__
    want = {TWO_CIRCLES: "NotStable", POINT: "Singular", ELLIPTIC: "NotCertifiablyCompact"}
    report(9, seen == want, ", ".join(f"{t!r} -> {n}" for t, n in seen.items()))
