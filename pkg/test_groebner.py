import pytest
from sympy.polys.domains import QQ

from src.fiber_full.core.scalars import make_field
from src.fiber_full.errors import InputError
from src.fiber_full.groebner.ideal import (
    Ideal,
    colon,
    colon_variable,
    eliminate,
    ideal_intersect,
    initial_ideal,
    normal_form,
    reduced_groebner,
    saturate_irrelevant,
    saturate_variable,
)
from src.fiber_full.groebner.monomial import MonomialIdeal
from src.fiber_full.poly.orders import MonomialOrder
from src.fiber_full.poly.polynomials import polynomial_ring
from src.fiber_full.reports.polyformat import format_poly


@pytest.fixture
def ring():
    return polynomial_ring(4, QQ)


@pytest.fixture
def twisted_cubic(ring):
    x0, x1, x2, x3 = ring.gens
    return Ideal([x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2], ring)


def test_initial_ideals_of_twisted_cubic(twisted_cubic):
    lex = initial_ideal(twisted_cubic, MonomialOrder.lex())
    grevlex = initial_ideal(twisted_cubic, MonomialOrder.grevlex())
    assert set(lex.generators) == {(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)}
    assert str(lex) == "(x0*x2, x0*x3, x1*x3)"
    assert lex.is_squarefree()
    assert set(grevlex.generators) == {(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)}
    assert not grevlex.is_squarefree()


def test_reduced_basis_is_cached_per_order(twisted_cubic):
    first = twisted_cubic.groebner(MonomialOrder.lex())
    assert twisted_cubic.groebner(MonomialOrder.lex()) is first
    assert all(g.LC == 1 for g in first)


def test_membership_and_normal_form(ring, twisted_cubic):
    x0, x1, x2, x3 = ring.gens
    assert twisted_cubic.contains(x3 * (x0 * x2 - x1**2) + x0 * (x1 * x3 - x2**2))
    assert not twisted_cubic.contains(x0 * x1)
    assert not normal_form(x1**3 - x0 * x1 * x2, twisted_cubic)


def test_unit_and_zero_ideals(ring):
    x0, x1, x2, x3 = ring.gens
    assert Ideal([x0, x0 + 1], ring).is_unit()
    assert Ideal([], ring).is_zero()
    assert not Ideal([x0], ring).is_unit()


def test_same_ideal_ignores_generator_choice(ring, twisted_cubic):
    x0, x1, x2, x3 = ring.gens
    other = Ideal([
        2 * (x0 * x3 - x1 * x2),
        x1 * x3 - x2**2 + (x0 * x2 - x1**2),
        x0 * x2 - x1**2,
    ], ring)
    assert other.same_ideal(twisted_cubic)
    assert other.digest() == twisted_cubic.digest()
    assert other.digest() != Ideal([x0], ring).digest()


def test_saturation_removes_embedded_point(ring):
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0**2, x0 * x1, x0 * x2, x0 * x3], ring)
    saturated = saturate_irrelevant(ideal)
    assert saturated.same_ideal(Ideal([x0], ring))
    assert saturated.saturated
    assert ideal.saturated is False


def test_saturated_ideal_is_returned_unchanged(twisted_cubic):
    assert saturate_irrelevant(twisted_cubic).same_ideal(twisted_cubic)
    assert twisted_cubic.saturated is True


def test_saturate_and_colon_by_variable(ring):
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0**3 * x1, x2**2], ring)
    assert colon_variable(ideal, 0).same_ideal(Ideal([x0**2 * x1, x2**2], ring))
    assert saturate_variable(ideal, 0).same_ideal(Ideal([x1, x2**2], ring))


def test_saturation_needs_homogeneous_input(ring):
    x0, x1, x2, x3 = ring.gens
    with pytest.raises(InputError):
        saturate_irrelevant(Ideal([x0 - 1], ring))


def test_intersection_of_skew_lines(ring):
    x0, x1, x2, x3 = ring.gens
    meet = ideal_intersect(Ideal([x0, x1], ring), Ideal([x2, x3], ring))
    assert meet.same_ideal(Ideal([x0 * x2, x0 * x3, x1 * x2, x1 * x3], ring))


def test_intersection_of_non_monomial_ideals():
    ring = polynomial_ring(2, QQ)
    x0, x1 = ring.gens
    meet = ideal_intersect(Ideal([x0], ring), Ideal([x0 + x1], ring))
    assert meet.same_ideal(Ideal([x0**2 + x0 * x1], ring))


def test_colon(ring):
    x0, x1, x2, x3 = ring.gens
    assert colon(Ideal([x0**2], ring), x0).same_ideal(Ideal([x0], ring))
    assert colon(Ideal([x0 * x1, x0 * x2], ring), x0).same_ideal(Ideal([x1, x2], ring))
    with pytest.raises(InputError):
        colon(Ideal([x0], ring), ring.zero)


def test_eliminate(ring):
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0 - x1, x1 - x2], ring)
    assert eliminate(ideal, [0]).same_ideal(Ideal([x1 - x2], ring))


def test_prime_field_arithmetic():
    ring = polynomial_ring(2, make_field(2))
    x0, x1 = ring.gens
    ideal = Ideal([x0**2 + x1**2], ring)
    assert ideal.contains((x0 + x1) ** 2)


def test_monomial_ideal_operations():
    ideal = MonomialIdeal(3, ((2, 0, 0), (1, 1, 0), (2, 1, 0)))
    assert set(ideal.generators) == {(2, 0, 0), (1, 1, 0)}
    assert ideal.colon_monomial((1, 0, 0)).generators == ((1, 0, 0), (0, 1, 0))
    assert ideal.contains((3, 0, 1))
    assert not ideal.contains((0, 3, 3))
    meet = MonomialIdeal(3, ((1, 0, 0),)).intersect(MonomialIdeal(3, ((0, 1, 0),)))
    assert meet.generators == ((1, 1, 0),)
    assert str(MonomialIdeal(3)) == "(0)"
    assert MonomialIdeal(3, ((0, 0, 0),)).is_unit()


def test_reduced_groebner_basis(ring, twisted_cubic):
    basis = reduced_groebner(twisted_cubic, MonomialOrder.lex())
    assert {format_poly(g) for g in basis} == {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}
    assert not reduced_groebner(Ideal([], ring))


@pytest.mark.parametrize("order", [MonomialOrder.lex(), MonomialOrder.grevlex()], ids=str)
def test_later_generator_dividing_an_earlier_lead(ring, order):
    x0, x1, x2, x3 = ring.gens
    assert [format_poly(g) for g in Ideal([x0 * x1, x0], ring).groebner(order)] == ["x0"]
    basis = Ideal([x1 * x3, x2 * x3, x3, x0**3 + x1**3 + x2**3], ring).groebner(order)
    assert {format_poly(g) for g in basis} == {"x3", "x0^3 + x1^3 + x2^3"}


@pytest.mark.parametrize("order", [MonomialOrder.lex(), MonomialOrder.grevlex()], ids=str)
def test_basis_of_plane_cubic_union_point(ring, order):
    x0, x1, x2, x3 = ring.gens
    plane = Ideal([x3, x0**3 + x1**3 + x2**3], ring)
    ideal = saturate_irrelevant(ideal_intersect(plane, Ideal([x0, x1, x2], ring)))
    basis = {format_poly(g) for g in ideal.groebner(order)}
    assert basis == {"x0*x3", "x1*x3", "x2*x3", "x0^3 + x1^3 + x2^3"}
