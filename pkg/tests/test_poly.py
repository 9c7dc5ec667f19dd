from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from reebforge.errors import ArityError, NotIsolating, ParseError, ZeroPolynomial
from reebforge.poly import (Box2, IsolatingInterval, MultiPoly, Sign, UniPoly, evaluate,
                            format_poly, is_negdef_top_form_2d, isolate_real_roots,
                            parse_poly, partial_derivative, refine_root, resultant_wrt_second,
                            sign_on_box, squarefree_part, substitute_first, top_form)

from conftest import ANNULUS, P

X, Y = sp.symbols("x y")


def to_sympy(p: MultiPoly):
    syms = [X, Y, sp.Symbol("z")][:p.nvars]
    return sp.expand(sum(sp.Rational(c.numerator, c.denominator)
                         * sp.prod([s ** e for s, e in zip(syms, exps)])
                         for exps, c in p.items()))


def from_sympy(expr):
    poly = sp.Poly(expr, X, Y)
    return MultiPoly(2, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


def uni(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


def same_up_to_scale(a: MultiPoly, b: MultiPoly):
    ta, tb = dict(a.items()), dict(b.items())
    if ta.keys() != tb.keys():
        return False
    k = next(iter(ta))
    r = ta[k] / tb[k]
    return all(ta[e] == r * tb[e] for e in ta)


# parsing and printing

def test_parse_disc():
    assert P("1 - x^2 - y^2") == MultiPoly(2, {(0, 0): 1, (2, 0): -1, (0, 2): -1})


def test_parse_zero():
    assert P("0").is_zero()


def test_parse_annulus_matches_symbolic_expansion():
    expected = sp.expand((X**2 + Y**2 - 1) * (4 - X**2 - Y**2))
    p = P(ANNULUS)
    assert sp.expand(to_sympy(p) - expected) == 0
    assert P(format_poly(p)) == p


def test_format_examples():
    assert format_poly(MultiPoly.zero(2)) == "0"
    assert format_poly(MultiPoly(2, {(0, 1): -2})) == "-2*y"


@pytest.mark.parametrize("text", ["1 +", "x**2", "2x", "(x+1", "x^y", "x $ y", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, 2)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x + $", 2)
    assert info.value.position == 4


def test_arity_error_for_unknown_variable():
    with pytest.raises(ArityError):
        parse_poly("z + 1", 2)
    with pytest.raises(ArityError):
        parse_poly("x3 + 1", 2)


def test_indexed_variables():
    assert parse_poly("x1*x4 - 1/2", 4) == MultiPoly(4, {(1, 0, 0, 1): 1, (0, 0, 0, 0): Fraction(-1, 2)})


small_coef = st.fractions(min_value=-20, max_value=20, max_denominator=12)
terms2 = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small_coef, max_size=8)
terms3 = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                         small_coef, max_size=8)


@given(terms2)
def test_format_parse_round_trip(terms):
    p = MultiPoly(2, terms)
    assert parse_poly(format_poly(p), 2) == p


@given(terms3)
def test_format_parse_round_trip_three_vars(terms):
    p = MultiPoly(3, terms)
    assert parse_poly(format_poly(p), 3) == p


# calculus and evaluation

def test_partial_derivatives():
    assert partial_derivative(P("1 - x^2 - y^2"), 2) == P("-2*y")
    assert partial_derivative(P("7"), 1).is_zero()
    expected = P("2*x*(4-x^2-y^2) - 2*x*(x^2+y^2-1)")
    assert partial_derivative(P(ANNULUS), 1) == expected
    with pytest.raises(ArityError):
        partial_derivative(P("x"), 3)
    with pytest.raises(ArityError):
        partial_derivative(P("x"), 0)


@given(terms2, small_coef, small_coef, st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(1, 10)))
def test_derivative_matches_exact_difference_quotient(terms, a, b, h):
    # p(a+h, b) - p(a, b) - h * p_x(a, b) is divisible by h^2 as a polynomial in h,
    # so the remainder over h^2 is bounded by the exact second-order Taylor term
    p = MultiPoly(2, terms)
    t = sp.Symbol("t")
    e = to_sympy(p)
    taylor = sp.expand(e.subs({X: a + t, Y: b}) - e.subs({X: a, Y: b})
                       - t * to_sympy(partial_derivative(p, 1)).subs({X: a, Y: b}))
    assert sp.Poly(taylor, t).coeff_monomial(t) == 0
    assert sp.Poly(taylor, t).coeff_monomial(1) == 0
    diff = evaluate(p, [a + h, b]) - evaluate(p, [a, b])
    assert diff - h * evaluate(partial_derivative(p, 1), [a, b]) == taylor.subs(t, h)


def test_evaluate_examples():
    assert evaluate(P("1-x^2-y^2"), [0, 0]) == 1
    assert evaluate(P("1-x^2-y^2"), [1, 0]) == 0
    assert evaluate(P(ANNULUS), [Fraction(3, 2), 0]) == Fraction(35, 16)
    with pytest.raises(ArityError):
        evaluate(P("x"), [1])


def test_substitute_first_examples():
    assert substitute_first(P("1-x^2-y^2"), 0) == uni(1, 0, -1)
    assert substitute_first(P("1-x^2-y^2"), 1) == uni(0, 0, -1)
    # (y^2 - 1)(4 - y^2) = -4 + 5y^2 - y^4
    assert substitute_first(P(ANNULUS), 0) == uni(-4, 0, 5, 0, -1)
    with pytest.raises(ArityError):
        substitute_first(P("x", 3), 0)


def test_top_form_examples():
    assert top_form(P("1-x^2-y^2")) == P("-x^2-y^2")
    assert top_form(P("x^3-x-y^2")) == P("x^3")
    assert top_form(P(ANNULUS)) == P("-(x^2+y^2)^2")
    with pytest.raises(ZeroPolynomial):
        top_form(P("0"))


def test_negdef_examples():
    assert is_negdef_top_form_2d(P("1-x^2-y^2"))
    assert not is_negdef_top_form_2d(P("x^3-x-y^2"))
    assert is_negdef_top_form_2d(P(ANNULUS))
    assert not is_negdef_top_form_2d(P("1-x^2"))            # vanishes along the y axis
    assert not is_negdef_top_form_2d(P("-x^4+x^2*y^2-y^4+x^3*y-x*y^3+3*x^2*y^2"))
    with pytest.raises(ZeroPolynomial):
        is_negdef_top_form_2d(P("0"))


@given(terms2)
def test_negdef_means_negative_far_out(terms):
    p = MultiPoly(2, terms) - P("(x^2+y^2)^3")
    if not is_negdef_top_form_2d(p):
        return
    # the top form is at most -m on the unit circle, the rest at most C r^5 there
    size = sum(abs(c) for e, c in p.items() if sum(e) < 6)
    R = max(Fraction(2), 4 * size)
    for k in range(16):
        v = sp.cos(2 * sp.pi * k / 16), sp.sin(2 * sp.pi * k / 16)
        pt = [Fraction(str(sp.N(c * R, 30))).limit_denominator(10 ** 12) for c in v]
        assert evaluate(p, pt) < 0


# real roots

def test_isolate_examples():
    ivs = isolate_real_roots(uni(-2, 0, 1))
    assert len(ivs) == 2
    assert -2 <= ivs[0].lo and ivs[0].hi <= -1 and 1 <= ivs[1].lo and ivs[1].hi <= 2
    assert isolate_real_roots(uni(1, 0, 1)) == []
    ivs = isolate_real_roots(uni(-4, 0, 5, 0, -1))
    roots = [-2, -1, 1, 2]
    assert len(ivs) == 4
    for iv, r in zip(ivs, roots):
        assert iv.lo <= r <= iv.hi
    with pytest.raises(ZeroPolynomial):
        isolate_real_roots(UniPoly([]))


def test_isolate_reports_multiplicity():
    ivs = isolate_real_roots(uni(1, -2, 1))  # (y - 1)^2
    assert len(ivs) == 1 and not ivs[0].multiplicity_one


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=9))
def test_isolate_count_matches_sympy(coeffs):
    u = UniPoly([Fraction(c) for c in coeffs])
    if u.degree() < 1:
        return
    expr = sum(c * X ** i for i, c in enumerate(coeffs))
    expected = sorted(set(sp.Poly(expr, X).real_roots()))
    ivs = isolate_real_roots(u)
    assert len(ivs) == len(expected)
    for iv, r in zip(ivs, expected):
        assert iv.lo <= r <= iv.hi
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo


def test_refine_examples():
    u = uni(-2, 0, 1)
    iv = refine_root(u, IsolatingInterval(Fraction(1), Fraction(2)), Fraction(1, 16))
    assert iv.hi - iv.lo <= Fraction(1, 16) and iv.lo ** 2 <= 2 <= iv.hi ** 2
    third = refine_root(uni(Fraction(-1, 3), 1), IsolatingInterval(Fraction(0), Fraction(1)),
                        Fraction(1, 100))
    assert third.lo <= Fraction(1, 3) <= third.hi
    with pytest.raises(NotIsolating):
        refine_root(u, IsolatingInterval(Fraction(3), Fraction(4)), Fraction(1, 16))
    with pytest.raises(ValueError):
        refine_root(u, iv, 0)


@given(st.integers(1, 30))
def test_refine_nests(k):
    u = uni(-k, 0, 0, 1)
    iv = isolate_real_roots(u)[0]
    w = Fraction(1, 8)
    a = refine_root(u, iv, w)
    b = refine_root(u, a, w / 2)
    assert a.lo <= b.lo and b.hi <= a.hi and b.hi - b.lo <= w / 2
    assert b.lo ** 3 <= k <= b.hi ** 3


# resultants and squarefree parts

def sylvester_resultant(f, g, var):
    """Res(f, g) straight from the Sylvester determinant."""
    a = sp.Poly(f, var).all_coeffs()
    b = sp.Poly(g, var).all_coeffs()
    m, n = len(a) - 1, len(b) - 1
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    return sp.expand(sp.Matrix(rows).det())


def _as_sympy_uni(u: UniPoly):
    return sum(sp.Rational(c.numerator, c.denominator) * X ** i for i, c in enumerate(u.coeffs))


def test_resultant_examples():
    r = _as_sympy_uni(resultant_wrt_second(P("1-x^2-y^2"), P("-2*y")))
    assert sp.simplify(r / (1 - X ** 2)).is_constant() and r != 0
    r = _as_sympy_uni(resultant_wrt_second(P("y-x"), P("y+x")))
    assert sp.simplify(r / X).is_constant() and r != 0
    assert resultant_wrt_second(P("y^2"), P("y")).is_zero()
    with pytest.raises(ZeroPolynomial):
        resultant_wrt_second(P("y"), P("0"))


@given(terms2, terms2)
def test_resultant_matches_sympy(a, b):
    p, q = MultiPoly(2, a), MultiPoly(2, b)
    if p.is_zero() or q.is_zero():
        return
    if p.degree_in(1) == 0 or q.degree_in(1) == 0:
        return
    got = _as_sympy_uni(resultant_wrt_second(p, q))
    expected = sylvester_resultant(to_sympy(p), to_sympy(q), Y)
    assert sp.expand(got - expected) == 0


@given(terms2, terms2, small_coef)
def test_resultant_specializes(a, b, x0):
    p, q = MultiPoly(2, a), MultiPoly(2, b)
    if p.is_zero() or q.is_zero() or p.degree_in(1) == 0 or q.degree_in(1) == 0:
        return
    up, uq = substitute_first(p, x0), substitute_first(q, x0)
    if up.degree() != p.degree_in(1) or uq.degree() != q.degree_in(1):
        return
    r = resultant_wrt_second(p, q)
    ya = sum(sp.Rational(c.numerator, c.denominator) * Y ** i for i, c in enumerate(up.coeffs))
    yb = sum(sp.Rational(c.numerator, c.denominator) * Y ** i for i, c in enumerate(uq.coeffs))
    assert r(x0) == sylvester_resultant(ya, yb, Y)


def test_squarefree_examples():
    assert same_up_to_scale(squarefree_part(P("(1-x^2-y^2)^2")), P("1-x^2-y^2"))
    assert same_up_to_scale(squarefree_part(P(ANNULUS)), P(ANNULUS))
    assert same_up_to_scale(squarefree_part(P("(x-y)^3*(x+y)")), P("(x-y)*(x+y)"))
    with pytest.raises(ZeroPolynomial):
        squarefree_part(P("0"))


@given(terms2, st.integers(1, 3))
def test_squarefree_matches_sympy(terms, k):
    base = MultiPoly(2, terms)
    if base.is_zero() or base.is_constant():
        return
    p = base ** k
    expected = from_sympy(sp.sqf_part(to_sympy(p)))
    assert same_up_to_scale(squarefree_part(p), expected)


# signs on boxes

def test_sign_on_box_examples():
    q = Fraction(1, 4)
    assert sign_on_box(P("1-x^2-y^2"), Box2((-q, q), (-q, q))) is Sign.POSITIVE
    assert sign_on_box(P("x"), Box2((-q, q), (0, 1))) is Sign.ZERO_POSSIBLE
    tight = Box2((Fraction(-101, 100), Fraction(-99, 100)), (Fraction(-1, 100), Fraction(1, 100)))
    assert sign_on_box(P("-2*x"), tight) is Sign.POSITIVE
    assert sign_on_box(P("x^2+y^2-1"), Box2((q, q * 2), (q, q * 2))) is Sign.NEGATIVE


@given(terms2, small_coef, small_coef)
def test_certified_sign_is_never_wrong(terms, a, b):
    p = MultiPoly(2, terms)
    box = Box2((a, a + Fraction(1, 8)), (b, b + Fraction(1, 8)))
    s = sign_on_box(p, box, budget=16)
    if s is Sign.ZERO_POSSIBLE:
        return
    for u in range(5):
        for v in range(5):
            val = evaluate(p, [a + Fraction(u, 32), b + Fraction(v, 32)])
            assert (val > 0) if s is Sign.POSITIVE else (val < 0)
