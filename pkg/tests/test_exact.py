from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wronskian_brackets.errors import ParseError
from wronskian_brackets.exact import (
    NEG_INF,
    Monomial,
    Poly,
    monomial_derivative,
    parse_monomial,
    parse_poly,
    parse_poly_list,
    poly_compose,
    poly_derivative,
)

from conftest import polys, small_fractions

P = parse_poly


def compose_by_powers(p: Poly, q: Poly) -> Poly:
    """sum c_k q^k with q^k built by repeated multiplication."""
    out = Poly()
    power = Poly.const(1)
    for c in p.coeffs:
        out = out + power * c
        power = power * q
    return out


@pytest.mark.parametrize(
    "p, j, expected",
    [("x^2/2", 1, "x"), ("x^3/6", 3, "1"), ("7", 1, "0"), ("x^4", 0, "x^4")],
)
def test_poly_derivative_examples(p, j, expected):
    assert poly_derivative(P(p), j) == P(expected)


def test_poly_compose_examples():
    assert poly_compose(P("y^2", "y"), P("x^2")) == P("x^4")
    p = P("3*x^3 - x + 5")
    assert poly_compose(p, P("x")) == p
    assert poly_compose(P("y^2 + 1", "y"), P("x + 1")) == P("x^2 + 2*x + 2")
    assert compose_by_powers(P("x^2 + 1"), P("x + 1")) == P("x^2 + 2*x + 2")


def test_monomial_derivative_examples():
    assert monomial_derivative(Monomial(1, 5), 1) == Monomial(5, 4)
    assert monomial_derivative(Monomial(1, Fraction(1, 2)), 1) == Monomial(
        Fraction(1, 2), Fraction(-1, 2)
    )
    assert monomial_derivative(Monomial(1, 2), 3).is_zero()


def test_zero_degree_is_negative_infinity():
    assert Poly().degree == NEG_INF
    assert Poly([0, 0]).degree == NEG_INF
    assert (P("x") * Poly()).degree == NEG_INF


@given(polys(12), polys(12))
def test_leibniz(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys(4), polys(3), polys(3))
@settings(max_examples=60)
def test_compose_associative(p, q, r):
    assert p.compose(q).compose(r) == p.compose(q.compose(r))


@given(polys(5), polys(4))
@settings(max_examples=60)
def test_compose_matches_power_oracle(p, q):
    assert p.compose(q) == compose_by_powers(p, q)


@given(polys(6), polys(6))
def test_degree_of_product(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree
        assert p.compose(q).degree == p.degree * q.degree or q.degree == 0


@given(st.integers(0, 10), small_fractions, st.integers(0, 12))
def test_monomial_derivative_agrees_with_poly(k, c, j):
    m = Monomial(c, k)
    assert m.derivative(j).to_poly() == Poly.monomial(c, k).derivative(j)


@given(polys(6), polys(4))
def test_divmod_reconstructs(p, q):
    if q.is_zero():
        return
    quot, rem = divmod(p, q)
    assert quot * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


def test_divexact_rejects_remainder():
    with pytest.raises(ArithmeticError):
        P("x^2 + 1").divexact(P("x"))


@pytest.mark.parametrize(
    "text", ["3/2*x^2 - x + 1", "x^3/6", "-x^3/6 + 2", "0", "7", "-x", "12*x^5 - 1/3"]
)
def test_poly_render_round_trip(text):
    p = P(text)
    assert str(p) == text
    assert P(str(p)) == p


@given(polys(8))
def test_poly_round_trip_random(p):
    assert P(str(p)) == p


@pytest.mark.parametrize(
    "text, coeff, exponent",
    [
        ("5*x^(7/2)", 5, Fraction(7, 2)),
        ("x^(-1/2)/2", Fraction(1, 2), Fraction(-1, 2)),
        ("-3/4*x^(-2)", Fraction(-3, 4), -2),
        ("x", 1, 1),
        ("2", 2, 0),
    ],
)
def test_monomial_parse_and_render(text, coeff, exponent):
    m = parse_monomial(text)
    assert m == Monomial(coeff, exponent)
    assert str(m) == text
    assert parse_monomial(str(m)) == m


def test_parse_accepts_informal_spacing_and_products():
    assert P(" 2 * x * x + x^2/2 ") == P("5/2*x^2")


@pytest.mark.parametrize(
    "text, position",
    [("x^2 + * 3", 6), ("x^", 2), ("x^(1/2)", 0), ("y + 1", 0), ("", 0), ("x / x", 4)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.position == position


def test_parse_poly_list_positions_are_global():
    with pytest.raises(ParseError) as info:
        parse_poly_list("1, x, x^")
    assert info.value.position == 8
    assert parse_poly_list("1, x, x^2/2") == [P("1"), P("x"), P("x^2/2")]


def test_zero_monomials_compare_equal():
    assert Monomial(0, 3) == Monomial(0, Fraction(-1, 2))
    assert hash(Monomial(0, 3)) == hash(Monomial(0, 5))


def test_monomial_sum_requires_matching_exponents():
    assert Monomial(2, 3) + Monomial(1, 3) == Monomial(3, 3)
    assert Monomial(2, 3) + Monomial(0, 7) == Monomial(2, 3)
    with pytest.raises(ArithmeticError):
        Monomial(1, 2) + Monomial(1, 3)


def test_values_are_immutable():
    m = Monomial(1, 2)
    with pytest.raises(AttributeError):
        m.coeff = Fraction(3)
