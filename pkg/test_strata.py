from dataclasses import replace
from pathlib import Path

import pytest
from sympy.polys.domains import QQ

from src.fiber_full.cohomology.sheaf import sheaf_cohomology_table
from src.fiber_full.errors import InputError, WindowError
from src.fiber_full.groebner.ideal import Ideal
from src.fiber_full.hilbert.partitions import IntegerPartition, partition_polynomial, partitions_up_to
from src.fiber_full.poly.polynomials import polynomial_ring
from src.fiber_full.reports.ideal_file import read_ideal_file
from src.fiber_full.strata.classify import (
    classify,
    common_window,
    depth_report,
    first_divergence,
    group_by_stratum,
    is_acm,
    is_ag,
    same_stratum,
)
from src.fiber_full.strata.detach import check_detach, detach
from src.fiber_full.strata.lex import lex_cohomology_closed_form, lex_ideal, lex_table, parse_partition

INPUTS = Path(__file__).parent / "inputs"
WINDOW = (-4, 4)


def load(name):
    return read_ideal_file(INPUTS / name).ideal


@pytest.fixture(scope="module")
def signatures():
    names = [
        "twisted_cubic.ideal",
        "plane_cubic_point.ideal",
        "skew_lines.ideal",
        "conic_point.ideal",
        "double_line.ideal",
        "meeting_lines_embedded.ideal",
        "double_line_embedded.ideal",
    ]
    return {name: sheaf_cohomology_table(load(name), WINDOW) for name in names}


# -- ACM / AG -----------------------------------------------------------------------------------

def test_twisted_cubic_is_acm_but_not_ag():
    ideal = load("twisted_cubic.ideal")
    report = depth_report(ideal)
    assert report.dimension == 2
    assert report.codimension == 2
    assert report.projective_dimension == 2
    assert report.ext_indices == [2]
    assert report.cm_type == 2
    assert is_acm(ideal)
    assert not is_ag(ideal)


def test_skew_lines_are_not_acm():
    ideal = load("skew_lines.ideal")
    assert not is_acm(ideal)
    assert not is_ag(ideal)
    assert depth_report(ideal).ext_indices == [2, 3]


def test_complete_intersection_is_ag():
    assert is_ag(load("complete_intersection.ideal"))


def test_empty_scheme_is_not_acm():
    ring = polynomial_ring(3, QQ)
    x0, x1, x2 = ring.gens
    ideal = Ideal([x0, x1, x2], ring)
    assert not is_acm(ideal)
    assert depth_report(ideal).unit


def test_classify_acm_curve_has_no_intermediate_cohomology():
    result = classify(load("twisted_cubic.ideal"), WINDOW)
    assert result.acm
    assert not result.ag
    assert result.to_json()["signature"]["P_h"] == "3*m+1"


def test_classification_needs_projective_input():
    with pytest.raises(InputError):
        is_acm(read_ideal_file(INPUTS / "torsion.family").ideal)


# -- strata ---------------------------------------------------------------------------------------

def test_twisted_cubic_and_plane_cubic_union_point(signatures):
    a = signatures["twisted_cubic.ideal"]
    b = signatures["plane_cubic_point.ideal"]
    assert a.hilbert_polynomial == b.hilbert_polynomial
    assert not same_stratum(a, b)
    assert first_divergence(a, b) == (0, 0)


def test_skew_lines_and_conic_union_point(signatures):
    a = signatures["skew_lines.ideal"]
    b = signatures["conic_point.ideal"]
    assert not same_stratum(a, b)
    assert first_divergence(a, b) == (0, -1)


def test_double_structures_fall_into_known_strata(signatures):
    assert same_stratum(signatures["skew_lines.ideal"], signatures["double_line.ideal"])
    assert same_stratum(signatures["conic_point.ideal"], signatures["meeting_lines_embedded.ideal"])
    assert same_stratum(signatures["conic_point.ideal"], signatures["double_line_embedded.ideal"])
    assert first_divergence(signatures["skew_lines.ideal"], signatures["double_line.ideal"]) is None


def test_group_by_stratum(signatures):
    names = ["skew_lines.ideal", "conic_point.ideal", "double_line.ideal", "double_line_embedded.ideal"]
    classes = group_by_stratum({name: signatures[name] for name in names})
    assert classes == [
        ["skew_lines.ideal", "double_line.ideal"],
        ["conic_point.ideal", "double_line_embedded.ideal"],
    ]


def test_same_stratum_compares_beyond_the_window(signatures):
    a = signatures["skew_lines.ideal"]
    b = signatures["conic_point.ideal"]
    narrow_a, narrow_b = a.on_window((2, 4)), b.on_window((2, 4))
    assert narrow_a.h == narrow_b.h
    assert not same_stratum(narrow_a, narrow_b)


@pytest.fixture(scope="module")
def plane_cubic_point():
    return sheaf_cohomology_table(load("plane_cubic_point.ideal"))


@pytest.mark.parametrize("window", [(2, 4), (-5, -1), (0, 1)])
def test_narrow_window_signature_is_in_its_own_stratum(plane_cubic_point, window):
    narrow = sheaf_cohomology_table(load("plane_cubic_point.ideal"), window)
    assert narrow.row(0, (-2, 4)) == [1, 1, 2, 4, 7, 10, 13]
    assert plane_cubic_point.row(0, (-2, 4)) == [1, 1, 2, 4, 7, 10, 13]
    assert same_stratum(plane_cubic_point, narrow)
    assert same_stratum(narrow, plane_cubic_point.on_window(window))
    assert first_divergence(plane_cubic_point, narrow) is None


def test_values_outside_the_window_need_the_series(plane_cubic_point):
    bare = replace(plane_cubic_point.on_window((0, 2)), quotient=None, ext=None)
    assert bare.value(0, 1) == 4
    with pytest.raises(WindowError):
        bare.value(0, 3)


def test_window_and_dimension_errors(signatures):
    a = signatures["skew_lines.ideal"]
    with pytest.raises(WindowError):
        common_window(a.on_window((-4, -2)), a.on_window((2, 4)))
    ring = polynomial_ring(3, QQ)
    x0, x1, x2 = ring.gens
    plane_curve = sheaf_cohomology_table(Ideal([x0], ring), (-2, 2))
    with pytest.raises(InputError):
        first_divergence(a, plane_curve)
    assert not same_stratum(a, plane_curve)


# -- lex ideals -----------------------------------------------------------------------------------

def test_lex_ideal_generators():
    assert str(lex_ideal(IntegerPartition((1,)), 3).monomials) == "(x0, x1, x2)"
    assert str(lex_ideal(IntegerPartition((2, 1)), 3).monomials) == "(x0, x1^2, x1*x2)"
    assert lex_ideal(IntegerPartition((4,)), 3).monomials.is_zero()
    with pytest.raises(InputError):
        lex_ideal(IntegerPartition((3,)), 1)
    with pytest.raises(InputError):
        lex_cohomology_closed_form(IntegerPartition((4,)), 3, 0)
    with pytest.raises(InputError):
        parse_partition("")


@pytest.mark.parametrize("partition", list(partitions_up_to(5, 3)), ids=str)
def test_lex_closed_form_matches_engine(partition):
    window = (-6, 6)
    data = lex_ideal(partition, 3)
    signature = sheaf_cohomology_table(data.ideal(), window)
    assert signature.h == lex_table(partition, 3, window)
    assert signature.hilbert_polynomial == partition_polynomial(partition)


# -- detach ---------------------------------------------------------------------------------------

def test_detach_splits_off_a_plane():
    ring = polynomial_ring(4, QQ)
    x0, x1, x2, x3 = ring.gens
    ideal = Ideal([x0 * x1, x0 * x2], ring)
    parts, signature, residual = check_detach(ideal, (-3, 3))
    assert parts.factor == x0
    assert parts.degree == 1
    assert parts.residual.same_ideal(Ideal([x1, x2], ring))
    assert str(residual.hilbert_polynomial) == "m+1"


def test_detach_without_common_factor():
    parts = detach(load("twisted_cubic.ideal"))
    assert parts.degree == 0


def test_detach_needs_a_surface_at_least():
    ring = polynomial_ring(2, QQ)
    x0, x1 = ring.gens
    with pytest.raises(InputError):
        check_detach(Ideal([x0 * x1], ring))
