import pytest
import sympy
from sympy.polys.domains import QQ

from src.fiber_full.errors import InputError, WindowError
from src.fiber_full.groebner.ideal import Ideal, initial_ideal
from src.fiber_full.groebner.monomial import MonomialIdeal
from src.fiber_full.hilbert.euler import euler_values
from src.fiber_full.hilbert.numerical import NumericalPolynomial, binomial, count
from src.fiber_full.hilbert.partitions import IntegerPartition, partition_polynomial, partitions
from src.fiber_full.hilbert.series import (
    HilbertSeries,
    count_standard_monomials,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
)
from src.fiber_full.poly.orders import MonomialOrder
from src.fiber_full.poly.polynomials import polynomial_ring


@pytest.fixture
def ring():
    return polynomial_ring(4, QQ)


@pytest.fixture
def twisted_cubic(ring):
    x0, x1, x2, x3 = ring.gens
    return Ideal([x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2], ring)


MONOMIAL_IDEALS = [
    MonomialIdeal(4, ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1))),
    MonomialIdeal(4, ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1))),
    MonomialIdeal(4, ((2, 0, 0, 0), (0, 2, 0, 0))),
    MonomialIdeal(3, ((2, 1, 0), (1, 2, 1), (0, 1, 3), (3, 0, 0))),
    MonomialIdeal(3),
]


def test_counting_conventions():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0
    assert count(2, 4) == 10
    assert count(-1, 4) == 0
    assert count(0, 0) == 1


@pytest.mark.parametrize("ideal", MONOMIAL_IDEALS, ids=str)
def test_series_matches_monomial_count(ideal):
    series = hilbert_series(ideal)
    for nu in range(-2, 8):
        assert series.value(nu) == count_standard_monomials(ideal, nu)


def test_twisted_cubic_hilbert_function(twisted_cubic):
    series = hilbert_series(twisted_cubic)
    assert series.numerator == {0: 1, 2: -3, 3: 2}
    assert [hilbert_function(twisted_cubic, nu) for nu in range(-1, 5)] == [0, 1, 4, 7, 10, 13]
    assert str(hilbert_polynomial(twisted_cubic)) == "3*m+1"
    assert series.dimension() == 2


def test_hilbert_function_is_order_independent(twisted_cubic):
    lex = hilbert_series(initial_ideal(twisted_cubic, MonomialOrder.lex()))
    grevlex = hilbert_series(initial_ideal(twisted_cubic, MonomialOrder.grevlex()))
    assert lex == grevlex


def test_embedded_point_changes_function_not_polynomial(ring):
    x0, x1, x2, x3 = ring.gens
    plane = Ideal([x0], ring)
    embedded = Ideal([x0**2, x0 * x1, x0 * x2, x0 * x3], ring)
    assert hilbert_function(embedded, 1) == hilbert_function(plane, 1) + 1
    assert hilbert_function(embedded, 2) == hilbert_function(plane, 2)
    assert hilbert_polynomial(embedded) == hilbert_polynomial(plane)


def test_series_edge_cases():
    assert HilbertSeries({}, 3).value(4) == 0
    assert HilbertSeries({}, 3).dimension() == -1
    artinian = hilbert_series(MonomialIdeal(2, ((2, 0), (0, 2))))
    assert artinian.dimension() == 0
    assert artinian.polynomial().degree == -1
    assert hilbert_series(MonomialIdeal(2, ((0, 0),))).is_zero()


def test_families_have_no_hilbert_series():
    ring = polynomial_ring(2, QQ, True)
    x0, x1, t = ring.gens
    with pytest.raises(InputError):
        hilbert_series(Ideal([x1 - t * x0], ring))


def test_numerical_polynomial_from_expr():
    m = sympy.Symbol("m")
    p = NumericalPolynomial.from_expr(m * (m - 1) / 2, m)
    assert p(5) == 10
    assert p(-1) == 1
    assert p.degree == 2
    with pytest.raises(ValueError):
        NumericalPolynomial.from_expr(m / 2, m)


def test_numerical_polynomial_fit_and_substitute():
    p = NumericalPolynomial.from_values([(0, 1), (1, 4), (2, 7)])
    assert str(p) == "3*m+1"
    assert p.substitute(1, -1)(4) == 10
    assert str(p.renamed("nu")) == "3*nu+1"
    assert (p - p).degree == -1
    with pytest.raises(ValueError):
        NumericalPolynomial.from_values([(0, 0), (1, 1), (2, 4)], max_degree=1)


@pytest.mark.parametrize("parts, expected", [
    ((1,), "1"),
    ((2,), "m+1"),
    ((2, 1), "m+2"),
    ((2, 2, 2, 1), "3*m+1"),
    ((3,), "m^2/2+3*m/2+1"),
])
def test_partition_polynomials(parts, expected):
    assert str(partition_polynomial(IntegerPartition(parts))) == expected


def test_partition_validation():
    assert IntegerPartition.parse("2, 1").parts == (2, 1)
    with pytest.raises(InputError):
        IntegerPartition((1, 2))
    with pytest.raises(InputError):
        IntegerPartition.parse("2,0")
    with pytest.raises(InputError):
        IntegerPartition.parse("a")


def test_partition_enumeration():
    assert [p.parts for p in partitions(4, 2)] == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert IntegerPartition((3, 1, 1)).exponents(3) == (2, 0, 1)


def test_euler_values():
    assert euler_values((0, 1), [[1, 4], [0, 0]]) == {0: 1, 1: 4}
    assert euler_values((0, 0), [[1], [3]]) == {0: -2}
    with pytest.raises(WindowError):
        euler_values((2, 1), [[], []])
    with pytest.raises(WindowError):
        euler_values((0, 1), [[1]])
