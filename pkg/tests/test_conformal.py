import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wronskian_brackets.conformal import (
    CoordinateChange,
    conformal_weight,
    verify_conformal_grid,
    verify_conformal_law,
)
from wronskian_brackets.exact import Poly, parse_poly
from wronskian_brackets.verify import weight_is_unique
from wronskian_brackets.wronskian import wronskian

from conftest import nonzero_polys, polys, small_fractions

P = parse_poly


@pytest.mark.parametrize("n, w", [(1, 0), (2, 1), (3, 3), (4, 6)])
def test_conformal_weight(n, w):
    assert conformal_weight(n) == w


def test_conformal_weight_rejects_zero():
    with pytest.raises(ValueError):
        conformal_weight(0)


def test_square_change_example():
    r = verify_conformal_law([P("y", "y"), P("y^2", "y")], P("x^2"))
    assert r.lhs == r.rhs == P("2*x^5")
    assert r.equal


def test_quadratic_change_example():
    phis = [P("1", "y"), P("y", "y"), P("y^2", "y")]
    r = verify_conformal_law(phis, P("x + x^2"))
    assert r.equal
    assert r.lhs == P("2*x + 1") ** 3 * 2


@given(st.lists(polys(4), min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_identity_change_is_verbatim(phis):
    r = verify_conformal_law(phis, P("x"))
    assert r.lhs == r.rhs == wronskian(phis)


@given(st.lists(polys(3), min_size=2, max_size=4), nonzero_polys(3).filter(lambda p: p.degree >= 1))
@settings(max_examples=40, deadline=None)
def test_law_on_random_inputs(phis, y):
    assert verify_conformal_law(phis, y).equal


@given(
    st.lists(polys(4), min_size=2, max_size=4),
    small_fractions.filter(lambda a: a != 0),
    small_fractions,
)
@settings(max_examples=40, deadline=None)
def test_affine_change_ratio(phis, alpha, beta):
    change = Poly([beta, alpha])
    r = verify_conformal_law(phis, change)
    assert r.equal
    n = len(phis)
    plain = verify_conformal_law(phis, change, weight=0).rhs
    assert r.lhs == plain * alpha ** conformal_weight(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weight_is_unique(n):
    phis = [Poly.monomial(1, a) for a in range(1, n + 1)]
    change = P("x + x^2")
    assert weight_is_unique(n, change, phis)
    delta = conformal_weight(n)
    assert not verify_conformal_law(phis, change, delta + 1).equal
    assert not verify_conformal_law(phis, change, delta - 1).equal


def test_grid_small():
    r = verify_conformal_grid(n_values=(2,), max_exponent=3)
    assert r.passed
    assert r.checks == 4 * 16


def test_change_needs_positive_degree():
    with pytest.raises(ValueError):
        CoordinateChange(P("3"))
    with pytest.raises(ValueError):
        CoordinateChange(Poly())


def test_report_schema():
    r = verify_conformal_law([P("y", "y"), P("y^3", "y")], P("2*x + 1"))
    data = r.to_dict()
    assert set(data) == {"N", "phis", "change", "weight", "lhs", "rhs", "equal"}
    assert data["phis"] == ["y", "y^3"]
    assert data["change"] == "2*x + 1"
    json.dumps(data)


def test_pullback():
    cc = CoordinateChange(P("x + 1"))
    assert cc.pullback(P("y^2", "y")) == P("x^2 + 2*x + 1")
    assert cc.jacobian == 1
    assert CoordinateChange(P("x^3")).jacobian == P("3*x^2")


def test_affine_ratio_concrete():
    phis = [P("1", "y"), P("y", "y"), P("y^2", "y")]
    alpha = Fraction(3)
    r = verify_conformal_law(phis, P("3*x - 1"))
    assert r.lhs == Poly.const(2 * alpha**3)
