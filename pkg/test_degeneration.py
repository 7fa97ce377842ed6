from fractions import Fraction
from pathlib import Path

import pytest
from sympy.polys.domains import QQ

from src.fiber_full.core.matrices import POLY_T, ExactMatrix
from src.fiber_full.core.unipoly import uni_poly, uni_ring
from src.fiber_full.degeneration.conca_varbaro import degeneration_fibers, verify_conca_varbaro
from src.fiber_full.degeneration.family import (
    FamilyIdeal,
    family_is_flat,
    fiber_dimensions,
    homogenize_ideal,
    presentation_matrix,
    specialize,
)
from src.fiber_full.degeneration.fiberfull import cohomology_is_free, default_window, fiber_full_family_check
from src.fiber_full.degeneration.fitting import fitting_stratify
from src.fiber_full.degeneration.weights import realize_weight, solve_constraints, special_fiber, verify_weight
from src.fiber_full.errors import InputError, InvariantViolation
from src.fiber_full.groebner.ideal import Ideal, initial_ideal
from src.fiber_full.poly.orders import MonomialOrder, WeightVector
from src.fiber_full.poly.polynomials import polynomial_ring
from src.fiber_full.reports.ideal_file import read_ideal_file
from src.fiber_full.reports.polyformat import format_poly
from src.fiber_full.strata.classify import same_stratum

INPUTS = Path(__file__).parent / "inputs"
LEX = MonomialOrder.lex()
GREVLEX = MonomialOrder.grevlex()


def load(name):
    return read_ideal_file(INPUTS / name).ideal


def load_family(name):
    return FamilyIdeal.from_ideal(load(name))


@pytest.fixture(scope="module")
def twisted_cubic():
    return load("twisted_cubic.ideal")


@pytest.fixture(scope="module")
def lex_family(twisted_cubic):
    return homogenize_ideal(twisted_cubic, realize_weight(twisted_cubic, LEX), LEX)


# -- weights --------------------------------------------------------------------------------------

def test_example_weight_realises_lex(twisted_cubic):
    omega = WeightVector((8, 4, 2, 1))
    assert verify_weight(twisted_cubic, LEX, omega)
    assert not verify_weight(twisted_cubic, LEX, WeightVector((1, 1, 1, 1)))
    assert special_fiber(twisted_cubic, LEX, omega) == initial_ideal(twisted_cubic, LEX)


def test_single_binomial_weight():
    ring = polynomial_ring(4, QQ)
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0 * x3 - x1 * x2], ring)
    assert verify_weight(ideal, LEX, WeightVector((2, 1, 1, 2)))
    assert not verify_weight(ideal, LEX, WeightVector((1, 2, 2, 1)))


@pytest.mark.parametrize("order", [LEX, GREVLEX], ids=str)
def test_realized_weight_gives_the_initial_ideal(twisted_cubic, order):
    omega = realize_weight(twisted_cubic, order)
    assert all(w >= 1 for w in omega)
    assert verify_weight(twisted_cubic, order, omega)
    assert special_fiber(twisted_cubic, order, omega) == initial_ideal(twisted_cubic, order)


def test_infeasible_constraints():
    system = [((Fraction(1),), Fraction(1)), ((Fraction(-1),), Fraction(1))]
    with pytest.raises(InvariantViolation):
        solve_constraints(system, 1)


def test_weights_are_not_realised_for_families():
    with pytest.raises(InputError):
        realize_weight(load("torsion.family"), LEX)


# -- families -------------------------------------------------------------------------------------

def test_homogenized_twisted_cubic():
    ideal = load("twisted_cubic.ideal")
    family = homogenize_ideal(ideal, WeightVector((8, 4, 2, 1)), LEX)
    assert {format_poly(g) for g in family.generators} == {
        "x0*x2 - t^2*x1^2",
        "x0*x3 - t^3*x1*x2",
        "x1*x3 - t*x2^2",
    }
    assert all(family.flatness.values())


@pytest.mark.parametrize("name", [
    "twisted_cubic.ideal",
    "skew_lines.ideal",
    "plane_cubic_point.ideal",
    "double_line.ideal",
    "complete_intersection.ideal",
])
@pytest.mark.parametrize("order", [LEX, GREVLEX], ids=str)
def test_degeneration_round_trip(name, order):
    ideal = load(name)
    family = homogenize_ideal(ideal, realize_weight(ideal, order), order)
    special = specialize(family, 0)
    assert set(initial_ideal(special, order).generators) == set(initial_ideal(ideal, order).generators)
    assert all(len(g) == 1 for g in special.generators)
    assert specialize(family, 1).same_ideal(ideal)


def test_family_validation():
    ring = polynomial_ring(2, QQ, True)
    x0, x1, t = ring.gens
    with pytest.raises(InputError):
        FamilyIdeal([x0 + x1**2], ring)
    with pytest.raises(InputError):
        FamilyIdeal([x0], polynomial_ring(2, QQ))
    with pytest.raises(InputError):
        homogenize_ideal(Ideal([x1 - t * x0], ring), WeightVector((1, 1)))


def test_presentation_matrix_of_rotating_line():
    family = load_family("rotating_line.family")
    matrix, labels = presentation_matrix(family, 1)
    t = uni_poly((0, 1), QQ)
    assert (matrix.nrows, matrix.ncols) == (1, 2)
    assert matrix.entry(0, 0) == -t
    assert matrix.entry(0, 1) == uni_ring(QQ).one
    assert labels == [(0, (0, 0))]
    assert family_is_flat(family, (0, 3))


def test_torsion_family_is_not_flat():
    family = load_family("torsion.family")
    assert not family_is_flat(family, (0, 2))
    assert family.flatness == {0: True, 1: False, 2: False}
    assert fiber_dimensions(family, 1, [0, 1, 5]) == {0: 1, 1: 0, 5: 0}


# -- Fitting stratification -------------------------------------------------------------------------

def test_torsion_family_has_two_strata():
    report = fitting_stratify(load_family("torsion.family"), (0, 2))
    assert [s.to_json() for s in report.strata] == [
        {"locus": "t", "h": {"0": 1, "1": 1, "2": 1}},
        {"locus": "generic", "h": {"0": 1, "1": 0, "2": 0}, "excluded": "t"},
    ]
    assert report.to_json()["invariant_factors"]["1"] == ["t"]


def test_flat_degeneration_has_one_stratum(lex_family):
    report = fitting_stratify(lex_family, (0, 3))
    assert len(report.strata) == 1
    assert report.generic.h == {0: 1, 1: 4, 2: 7, 3: 10}
    assert report.to_json()["strata"] == [{"locus": "generic", "h": {"0": 1, "1": 4, "2": 7, "3": 10}}]


# -- fiber-full check -----------------------------------------------------------------------------

def test_cohomology_freeness_over_truncations():
    t = uni_poly((0, 1), QQ)
    one = uni_ring(QQ).one
    assert cohomology_is_free(None, ExactMatrix.from_dense([[t]], QQ, POLY_T), 1, 2, QQ) == (False, 1)
    assert cohomology_is_free(None, ExactMatrix.from_dense([[one]], QQ, POLY_T), 1, 2, QQ) == (True, 0)
    assert cohomology_is_free(None, None, 2, 3, QQ) == (True, 6)
    image = ExactMatrix.from_dense([[t]], QQ, POLY_T)
    assert cohomology_is_free(image, None, 1, 2, QQ) == (False, 1)
    assert cohomology_is_free(image, None, 1, 1, QQ) == (True, 1)


def test_square_free_degeneration_is_fiber_full(lex_family):
    report = fiber_full_family_check(lex_family, 3, (-2, 1))
    assert report.flat
    assert report.verdicts == {1: True, 2: True, 3: True}
    assert report.fiber_full
    assert report.local_free
    assert report.first_failing_q is None
    assert report.failures == []


def test_rotating_line_is_fiber_full():
    report = fiber_full_family_check(load_family("rotating_line.family"), 2, (-2, 2))
    assert report.to_json()["verdicts"] == {"1": True, "2": True}
    assert report.to_json()["first_failing_q"] is None


def test_non_flat_family_is_reported():
    report = fiber_full_family_check(load_family("torsion.family"), 3, (-1, 1))
    assert not report.flat
    assert report.verdicts == {1: False, 2: False, 3: False}
    assert not report.fiber_full
    assert report.to_json()["flat"] is False


def test_fiber_full_check_validates_q():
    with pytest.raises(InputError):
        fiber_full_family_check(load_family("rotating_line.family"), 0)


def test_default_window_from_fibers(lex_family):
    assert default_window(lex_family) == (-7, 7)


# -- square-free degenerations --------------------------------------------------------------------

@pytest.fixture(scope="module")
def lex_report(twisted_cubic):
    return verify_conca_varbaro(twisted_cubic, LEX, (-4, 2))


def test_twisted_cubic_lex_degeneration(lex_report):
    assert lex_report.squarefree
    assert lex_report.signatures_equal
    assert lex_report.sheaf_equal
    report = lex_report.to_json()
    assert report["initial_ideal"] == ["x0*x2", "x0*x3", "x1*x3"]
    assert report["signatures_equal"] is True
    assert "mismatches" not in report
    assert report["tables"]["ideal"]["dims"] == report["tables"]["initial"]["dims"]


def test_grevlex_initial_ideal_is_not_square_free(twisted_cubic):
    report = verify_conca_varbaro(twisted_cubic, GREVLEX, (-2, 2))
    assert not report.squarefree
    assert report.to_json()["initial_ideal"] == ["x1^2", "x1*x2", "x2^2"]


def test_minors_degenerate_square_free():
    minors = load("minors_2x3.ideal")
    report = verify_conca_varbaro(minors, LEX, (-3, 1))
    assert report.squarefree
    assert report.signatures_equal


def test_fibers_of_square_free_degeneration(twisted_cubic, lex_report):
    fibers = degeneration_fibers(twisted_cubic, LEX, [0, 1, 2], lex_report)
    assert sorted(fibers) == [0, 1, 2]
    assert lex_report.fibers_same_stratum
    assert same_stratum(fibers[0], fibers[1])
    assert "fibers" in lex_report.to_json()


def test_degeneration_rejects_families_and_inhomogeneous_ideals():
    with pytest.raises(InputError):
        verify_conca_varbaro(load("torsion.family"), LEX)
    ring = polynomial_ring(3, QQ)
    x0, x1, x2 = ring.gens
    with pytest.raises(InputError):
        verify_conca_varbaro(Ideal([x0 * x1 - x2], ring), LEX)
