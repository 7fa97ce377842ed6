import itertools

import pytest
from sympy.polys.domains import QQ

from src.fiber_full.errors import ExponentOverflowError, InputError
from src.fiber_full.poly.orders import MonomialOrder, WeightVector, weight_degree
from src.fiber_full.poly.polynomials import (
    checked_monomial_mul,
    is_homogeneous,
    leading_monomial,
    lift_to_family,
    monomials_of_degree,
    omega_homogenize,
    omega_initial,
    polynomial_ring,
    substitute_parameter,
    total_degree,
)
from src.fiber_full.reports.polyformat import format_poly
from src.fiber_full.settings import MAX_EXPONENT


@pytest.fixture
def ring():
    return polynomial_ring(4, QQ)


ORDERS = [
    MonomialOrder.lex(),
    MonomialOrder.grevlex(),
    MonomialOrder.weight(WeightVector((8, 4, 2, 1))),
    MonomialOrder.weight(WeightVector((1, 1, 1, 1)), MonomialOrder.lex()),
]


def test_grevlex_prefers_fewer_trailing_variables():
    grevlex = MonomialOrder.grevlex()
    assert grevlex.compare((0, 2, 0, 0), (1, 0, 0, 1)) == 1
    assert grevlex.compare((0, 2, 0, 0), (1, 0, 1, 0)) == 1
    assert MonomialOrder.lex().compare((0, 2, 0, 0), (1, 0, 1, 0)) == -1


def test_weight_order_ties_break_by_grevlex():
    order = MonomialOrder.weight(WeightVector((1, 1, 1, 1)))
    assert order.compare((0, 2, 0, 0), (1, 0, 1, 0)) == 1
    assert order.compare((2, 0, 0, 0), (0, 0, 0, 1)) == 1


@pytest.mark.parametrize("order", ORDERS, ids=str)
def test_orders_are_total_and_multiplicative(order):
    monomials = [m for d in range(3) for m in monomials_of_degree(4, d)]
    shifts = monomials_of_degree(4, 1)
    for a, b in itertools.combinations(monomials, 2):
        assert order.compare(a, b) == -order.compare(b, a) != 0
        for c in shifts:
            ac, bc = checked_monomial_mul(a, c), checked_monomial_mul(b, c)
            assert order.compare(ac, bc) == order.compare(a, b)


@pytest.mark.parametrize("text, expected", [
    ("lex", "lex"),
    ("grevlex", "grevlex"),
    ("weight:8,4,2,1", "weight 8,4,2,1"),
    ("weight 3,2,1", "weight 3,2,1"),
])
def test_parse_orders(text, expected):
    assert str(MonomialOrder.parse(text)) == expected


@pytest.mark.parametrize("text", ["revlex", "weight:1,0,1", "weight:a,b"])
def test_parse_rejects_bad_orders(text):
    with pytest.raises(InputError):
        MonomialOrder.parse(text)


def test_weight_vector_must_be_positive():
    with pytest.raises(InputError):
        WeightVector((1, 0, 2))


def test_weight_order_length_mismatch():
    order = MonomialOrder.parse("weight:1,2")
    with pytest.raises(InputError):
        order.compare((1, 0, 0), (0, 1, 0))


def test_monomials_of_degree():
    monomials = monomials_of_degree(3, 2)
    assert len(monomials) == 6
    assert monomials[0] == (2, 0, 0)
    assert monomials[-1] == (0, 0, 2)
    assert monomials_of_degree(3, -1) == []


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        checked_monomial_mul((MAX_EXPONENT, 0), (1, 0))


def test_degrees_and_homogeneity(ring):
    x0, x1, x2, x3 = ring.gens
    assert total_degree(x0 * x2 - x1**2) == 2
    assert total_degree(ring.zero) == -1
    assert is_homogeneous(x0 * x2 - x1**2)
    assert not is_homogeneous(x0 * x2 - x1)


def test_leading_monomial_depends_on_order(ring):
    x0, x1, x2, x3 = ring.gens
    f = x0 * x2 - x1**2
    assert leading_monomial(f, MonomialOrder.lex()) == (1, 0, 1, 0)
    assert leading_monomial(f, MonomialOrder.grevlex()) == (0, 2, 0, 0)


def test_format_poly(ring):
    x0, x1, x2, x3 = ring.gens
    assert format_poly(x0 * x2 - x1**2) == "x0*x2 - x1^2"
    assert format_poly(3 * x3 - QQ(1, 2) * x0) == "-1/2*x0 + 3*x3"
    assert format_poly(ring.zero) == "0"


def test_omega_initial(ring):
    x0, x1, x2, x3 = ring.gens
    omega = WeightVector((8, 4, 2, 1))
    assert omega_initial(omega, x0 * x2 - x1**2) == x0 * x2
    assert omega_initial(WeightVector((1, 1, 1, 1)), x0 * x2 - x1**2) == x0 * x2 - x1**2


def test_omega_homogenize_and_fibers(ring):
    x0, x1, x2, x3 = ring.gens
    omega = WeightVector((8, 4, 2, 1))
    f = x0 * x2 - x1**2
    family = omega_homogenize(omega, f)
    assert format_poly(family) == "x0*x2 - t^2*x1^2"
    assert substitute_parameter(family, 1) == f
    assert substitute_parameter(family, 0) == x0 * x2
    assert substitute_parameter(family, 2) == x0 * x2 - 4 * x1**2


def test_omega_homogenize_checks_the_parameter_exponent(ring):
    x0, x1, x2, x3 = ring.gens
    with pytest.raises(ExponentOverflowError):
        omega_homogenize(WeightVector((MAX_EXPONENT + 2, 1, 1, 1)), x0 - x1)


def test_lift_to_family_is_constant(ring):
    x0, x1, x2, x3 = ring.gens
    family_ring = polynomial_ring(4, QQ, True)
    lifted = lift_to_family(x1 * x3 - x2**2, family_ring)
    for alpha in (0, 1, 5):
        assert substitute_parameter(lifted, alpha) == x1 * x3 - x2**2


def test_weight_degree():
    omega = WeightVector((8, 4, 2, 1))
    assert weight_degree(omega, (1, 0, 1, 0)) == 10
    assert weight_degree(omega, (0, 2, 0, 0)) == 8
    assert weight_degree((1, 2), (3, 1)) == 5
