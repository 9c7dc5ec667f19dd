import time
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from reebforge.errors import (DegenerateInput, NonRegularFiber, NotCertifiablyCompact, NotStable,
                              PrecisionExhausted, Singular)
from reebforge.graph import betti, is_good_orientation, ordered_isomorphic
from reebforge.poly import MultiPoly, evaluate, partial_derivative
from reebforge.reeb2d import (DomainSpec2, EventClass, ExtremumType, check_compact, check_nonsingular,
                              check_stable, classify_critical_point, critical_points,
                              euler_characteristic, fiber_components, poincare_reeb_graph)

from conftest import (ANNULUS, DISC, ELLIPTIC, EXACT_FIXTURES, POINT, TWO_CIRCLES, TWO_DISCS, P,
                      pixel_components, pixel_euler)


def D(text):
    return DomainSpec2(P(text))


def reparametrize(q: MultiPoly, a, b):
    """q((x - b) / a, y)."""
    lin = (P("x") - MultiPoly.const(2, b)) * MultiPoly.const(2, 1 / Fraction(a))
    out = MultiPoly.zero(2)
    for (i, j), c in q.items():
        out = out + MultiPoly.const(2, c) * lin ** i * P("y") ** j
    return out


def test_nonsingular_examples():
    assert check_nonsingular(D(DISC))
    assert not check_nonsingular(D(POINT))
    assert check_nonsingular(D(ANNULUS))
    assert not check_nonsingular(D("(1-x^2-y^2)*(1-(x-1)^2-y^2)"))   # circles crossing


def test_vertical_line_component_is_degenerate():
    with pytest.raises(DegenerateInput):
        check_nonsingular(D("x*(1-x^2-y^2)"))


def test_compact_examples():
    assert check_compact(D(DISC))
    assert not check_compact(D(ELLIPTIC))
    assert check_compact(D(ANNULUS))


def test_critical_points_of_the_disc():
    cps = critical_points(D(DISC))
    assert [c.extremum_type for c in cps] == [ExtremumType.XMIN, ExtremumType.XMAX]
    for c, x in zip(cps, (-1, 1)):
        assert c.x_root.lo <= x <= c.x_root.hi
        (a, b), (lo, hi) = c.box.x_interval, c.box.y_interval
        assert a <= x <= b and lo <= 0 <= hi


def test_critical_points_of_the_annulus():
    cps = critical_points(D(ANNULUS))
    assert len(cps) == 4
    for c, x in zip(cps, (-2, -1, 1, 2)):
        assert c.x_root.lo <= x <= c.x_root.hi
    assert [c.event_class for c in cps] == [EventClass.CAP_OPEN, EventClass.SPLIT,
                                            EventClass.MERGE, EventClass.CAP_CLOSE]


def test_critical_points_of_a_shifted_disc():
    cps = critical_points(D("1 - (x-3)^2 - y^2"))
    for c, x in zip(cps, (2, 4)):
        assert c.x_root.lo <= x <= c.x_root.hi


def test_critical_point_boxes_carry_certified_signs():
    q = P(ANNULUS)
    qx, qy = partial_derivative(q, 1), partial_derivative(q, 2)
    for c in critical_points(DomainSpec2(q)):
        (a, b), (lo, hi) = c.box.x_interval, c.box.y_interval
        corner = [a, lo]
        assert (evaluate(qx, corner) > 0) == (c.qx_sign > 0)
        # the implicit second derivative -q_yy / q_x decides min versus max
        assert (c.extremum_type is ExtremumType.XMIN) == (-c.second_derivative_sign * c.qx_sign > 0)
        assert evaluate(qy, [(a + b) / 2, (lo + hi) / 2]) == 0 or b > a


def test_classification_examples():
    cps = critical_points(D(DISC))
    assert classify_critical_point(D(DISC), cps[0]) is EventClass.CAP_OPEN
    assert classify_critical_point(D(DISC), cps[1]) is EventClass.CAP_CLOSE
    ann = D(ANNULUS)
    assert classify_critical_point(ann, critical_points(ann)[1]) is EventClass.SPLIT


def test_stability_examples():
    assert check_stable(D(ANNULUS))
    assert check_stable(D(DISC))
    assert not check_stable(D(TWO_CIRCLES))


def test_fiber_components():
    assert len(fiber_components(D(DISC), 0)) == 1
    lo, hi = fiber_components(D(DISC), 0)[0]
    assert lo.lo <= -1 <= lo.hi and hi.lo <= 1 <= hi.hi
    comps = fiber_components(D(ANNULUS), 0)
    assert len(comps) == 2
    for (lo, hi), (a, b) in zip(comps, [(-2, -1), (1, 2)]):
        assert lo.lo <= a <= lo.hi and hi.lo <= b <= hi.hi
    comps = fiber_components(D(ANNULUS), Fraction(3, 2))
    assert len(comps) == 1
    (lo, hi), = comps
    # the fibre is [-sqrt(7)/2, sqrt(7)/2]
    assert lo.lo ** 2 <= Fraction(7, 4) <= lo.hi ** 2 or lo.hi ** 2 <= Fraction(7, 4) <= lo.lo ** 2
    with pytest.raises(NonRegularFiber):
        fiber_components(D(DISC), 1)


def test_reeb_graph_examples():
    t = time.time()
    disc = poincare_reeb_graph(D(DISC))
    assert disc.degree_sequence() == [1, 1] and len(disc.edges) == 1
    ann = poincare_reeb_graph(D(ANNULUS))
    assert ann.degree_sequence() == [1, 3, 3, 1] and betti(ann.to_multigraph()) == (1, 1)
    two = poincare_reeb_graph(D(TWO_DISCS))
    assert len(two.vertices) == 4 and len(two.edges) == 2 and two.components == 2
    assert time.time() - t < 5


def test_critical_values_are_exactly_certified():
    ann = poincare_reeb_graph(D(ANNULUS))
    xs = [x for _, x, _ in ann.vertices]
    assert xs == sorted(xs)
    for (v, x, _), exact in zip(ann.vertices, (-2, -1, 1, 2)):
        lo, hi = ann.x_intervals[v]
        assert lo < x < hi and lo <= exact <= hi
    ivs = [ann.x_intervals[v] for v in ann.ids()]
    assert all(a[1] < b[0] for a, b in zip(ivs, ivs[1:]))


def test_euler_characteristic_examples():
    assert euler_characteristic(poincare_reeb_graph(D(DISC))) == 1
    assert euler_characteristic(poincare_reeb_graph(D(ANNULUS))) == 0
    assert euler_characteristic(poincare_reeb_graph(D(TWO_DISCS))) == 2


@pytest.mark.parametrize("text,exc", [(TWO_CIRCLES, NotStable), (POINT, Singular),
                                      (ELLIPTIC, NotCertifiablyCompact)])
def test_degenerate_inputs_are_rejected(text, exc):
    with pytest.raises(exc):
        poincare_reeb_graph(D(text))


def test_non_morse_or_tangent_inputs_are_rejected():
    # two discs touching at a point: singular zero set
    with pytest.raises(Singular):
        poincare_reeb_graph(D("-((x-1)^2+y^2-1)*((x+1)^2+y^2-1)"))


@pytest.mark.parametrize("name", sorted(EXACT_FIXTURES))
def test_fixture_invariants(name):
    text, nv, ne, degs = EXACT_FIXTURES[name]
    r = poincare_reeb_graph(D(text))
    assert (len(r.vertices), len(r.edges), r.degree_sequence()) == (nv, ne, degs)
    assert is_good_orientation(r.to_multigraph(), r.witness())
    assert set(r.degree_sequence()) <= {1, 3}
    cps = critical_points(D(text))
    opens = sum(c.event_class is EventClass.CAP_OPEN for c in cps)
    closes = sum(c.event_class is EventClass.CAP_CLOSE for c in cps)
    splits = sum(c.event_class is EventClass.SPLIT for c in cps)
    assert opens == closes
    assert len(r.vertices) - len(r.edges) == opens - splits
    assert r.components == pixel_components(P(text))
    assert euler_characteristic(r) == pixel_euler(P(text), 512)


@pytest.mark.parametrize("name", sorted(EXACT_FIXTURES))
@given(a=st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=8),
       b=st.fractions(min_value=-5, max_value=5, max_denominator=8))
def test_affine_reparametrization_invariance(name, a, b):
    q = P(EXACT_FIXTURES[name][0])
    r = poincare_reeb_graph(DomainSpec2(q))
    s = poincare_reeb_graph(DomainSpec2(reparametrize(q, a, b)))
    assert ordered_isomorphic(r, s)
    ivs_r = [r.x_intervals[v] for v in r.ids()]
    ivs_s = [s.x_intervals[v] for v in s.ids()]
    for (lo, hi), (slo, shi) in zip(ivs_r, ivs_s):
        # the critical values move by x -> a x + b, so the mapped enclosures overlap
        assert a * lo + b <= shi and slo <= a * hi + b


@pytest.mark.parametrize("name", sorted(EXACT_FIXTURES))
@given(k=st.fractions(min_value=Fraction(1, 100), max_value=100, max_denominator=100))
def test_positive_scaling_leaves_output_identical(name, k):
    q = P(EXACT_FIXTURES[name][0])
    r = poincare_reeb_graph(DomainSpec2(q))
    s = poincare_reeb_graph(DomainSpec2(q * MultiPoly.const(2, k)))
    assert r.to_json_obj() == s.to_json_obj()


small = st.fractions(min_value=Fraction(-1, 20), max_value=Fraction(1, 20), max_denominator=40)


@st.composite
def perturbed(draw):
    """A fixture plus small terms of lower degree, so the top form is kept."""
    name = draw(st.sampled_from(["disc", "annulus", "tilted_annulus", "ellipse"]))
    q = P(EXACT_FIXTURES[name][0])
    low = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda e: sum(e) < q.degree())
    return q + MultiPoly(2, draw(st.dictionaries(low, small, max_size=5)))


@settings(max_examples=25)
@given(perturbed())
def test_perturbed_domains_match_pixel_oracles(q):
    d = DomainSpec2(q)
    try:
        r = poincare_reeb_graph(d)
    except (NotStable, PrecisionExhausted):
        assume(False)
    assert is_good_orientation(r.to_multigraph(), r.witness())
    assert set(r.degree_sequence()) <= {1, 3}
    assert r.components == pixel_components(q)
    assert euler_characteristic(r) == pixel_euler(q, 512)
