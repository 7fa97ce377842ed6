import pytest
from sympy.polys.domains import QQ

from src.fiber_full.errors import InputError
from src.fiber_full.groebner.ideal import Ideal
from src.fiber_full.hilbert.series import hilbert_series
from src.fiber_full.poly.polynomials import polynomial_ring
from src.fiber_full.resolution.betti import MODULE, BettiTable
from src.fiber_full.resolution.complexes import DualComplex, complex_cohomology_dims, dual_complex
from src.fiber_full.resolution.modules import GradedModule
from src.fiber_full.resolution.minimize import minimize
from src.fiber_full.resolution.schreyer import free_resolution, schreyer_resolution


@pytest.fixture
def ring():
    return polynomial_ring(4, QQ)


@pytest.fixture
def twisted_cubic(ring):
    x0, x1, x2, x3 = ring.gens
    return Ideal([x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2], ring)


def alternating_numerator(resolution):
    numerator = {}
    for k, degrees in enumerate(resolution.modules):
        for d in degrees:
            numerator[d] = numerator.get(d, 0) + (-1) ** k
    return {d: c for d, c in sorted(numerator.items()) if c}


def test_twisted_cubic_betti_table(twisted_cubic):
    table = free_resolution(twisted_cubic).betti_table()
    assert table.to_json() == {"betti": {"0": {"2": 3}, "1": {"3": 2}}}
    assert table.regularity() == 1
    assert table.projective_dimension() == 2
    assert table.cm_type() == 2


def test_complete_intersection_betti_table(ring):
    x0, x1, x2, x3 = ring.gens
    table = free_resolution(Ideal([x0**2, x1**2], ring)).betti_table()
    assert table.betti == {0: {2: 2}, 1: {4: 1}}
    assert table.regularity() == 2
    assert table.cm_type() == 1


def test_skew_lines_betti_table(ring):
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0 * x2, x0 * x3, x1 * x2, x1 * x3], ring)
    table = free_resolution(ideal).betti_table()
    assert table.betti == {0: {2: 4}, 1: {3: 4}, 2: {4: 1}}
    assert table.projective_dimension() == 3
    assert table.regularity() == 1


@pytest.mark.parametrize("minimal", [True, False])
def test_resolution_is_an_exact_complex(twisted_cubic, minimal):
    resolution = free_resolution(twisted_cubic, minimal=minimal)
    resolution.check_complex()
    for nu in range(0, 6):
        resolution.check_exactness(nu)


def test_resolution_recovers_hilbert_series(ring, twisted_cubic):
    x0, x1, x2, x3 = ring.gens
    for ideal in (twisted_cubic, Ideal([x0**2, x0 * x1, x0 * x2, x0 * x3], ring)):
        expected = hilbert_series(ideal).numerator
        assert alternating_numerator(schreyer_resolution(ideal)) == expected
        assert alternating_numerator(free_resolution(ideal)) == expected


def test_minimal_resolution_is_not_larger(twisted_cubic):
    big = schreyer_resolution(twisted_cubic).betti_table().total_ranks()
    small = free_resolution(twisted_cubic).betti_table().total_ranks()
    assert len(small) <= len(big)
    assert all(s <= b for s, b in zip(small, big))


def test_inhomogeneous_ideal_is_rejected(ring):
    x0, x1, x2, x3 = ring.gens
    with pytest.raises(InputError):
        free_resolution(Ideal([x0 - 1], ring))


def test_dual_complex_of_cohen_macaulay_curve(twisted_cubic):
    dual = DualComplex(free_resolution(twisted_cubic))
    assert dual.cohomology_dims(-4) == {0: 0, 1: 0, 2: 0}
    assert dual.cohomology_dims(-3) == {0: 0, 1: 0, 2: 2}
    assert dual.cohomology_dims(0) == {0: 0, 1: 0, 2: 11}


def test_graded_module_series(ring):
    x0, x1, x2, x3 = ring.gens
    module = GradedModule([0, 1], [{0: x0}, {1: x1}], ring)
    assert module.hilbert_series().numerator == {0: 1, 2: -1}
    with pytest.raises(InputError):
        GradedModule([0], [{0: x0 - x1**2}], ring)


def test_module_resolution_uses_module_convention(ring):
    x0, x1, x2, x3 = ring.gens
    module = GradedModule([0], [{0: x0}, {0: x1}], ring)
    table = free_resolution(module).betti_table()
    assert table.convention == MODULE
    assert table.betti == {0: {0: 1}, 1: {1: 2}, 2: {2: 1}}
    assert table.regularity() == 0


def test_betti_table_frame():
    table = BettiTable({0: {2: 3}, 1: {3: 2}})
    frame = table.to_dataframe()
    assert frame.index.name == "j-i"
    assert frame.loc[2, 0] == 3
    assert frame.loc[2, 1] == 2
    assert BettiTable().to_text() == "(empty Betti table)"
    assert BettiTable().regularity() == 0


def test_minimize_schreyer_resolution(twisted_cubic):
    minimal, table = minimize(schreyer_resolution(twisted_cubic))
    assert table == free_resolution(twisted_cubic).betti_table()
    minimal.check_complex()
    assert isinstance(dual_complex(minimal), DualComplex)


def test_strand_cohomology_recovers_hilbert_function(twisted_cubic):
    complex_ = free_resolution(twisted_cubic).as_complex()
    assert complex_cohomology_dims(complex_, 2) == {-2: 0, -1: 0, 0: 7}
    assert complex_cohomology_dims(complex_, 3) == {-2: 0, -1: 0, 0: 10}
