"""
One-parameter families of ideals in k[t][x0..xr].

A family is given by x-homogeneous generators. Its degree-ν piece [R/F]_ν is the cokernel of the
presentation matrix whose rows are the products m * g of generators g with monomials m of degree
ν - deg_x(g), written in the basis of degree-ν monomials.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..core.matrices import FIELD, POLY_T, ExactMatrix, rank
from ..core.smith import SmithForm, smith_normal_form
from ..core.unipoly import evaluate, uni_ring
from ..errors import InputError, InvariantViolation
from ..groebner.ideal import Ideal
from ..poly.orders import MonomialOrder, WeightVector
from ..poly.polynomials import (
    has_parameter,
    lift_to_family,
    monomials_of_degree,
    omega_homogenize,
    polynomial_ring,
    substitute_parameter,
    to_ring,
    x_count,
)
from ..reports.polyformat import format_poly

logger = logging.getLogger(__name__)


def _x_degree(f) -> int:
    nx = x_count(f.ring)
    degrees = {sum(m[:nx]) for m in f.keys()}
    if len(degrees) != 1:
        raise InputError(f"Family generator {format_poly(f)} is not x-homogeneous.")
    return degrees.pop()


@dataclass
class FamilyIdeal:
    """
    Ideal of k[x0..xr, t] with x-homogeneous generators.

    ``source``, ``omega`` and ``order`` are set when the family is hom_ω(I).
    """

    generators: List[Any]
    ring: Any
    source: Optional[Ideal] = None
    omega: Optional[WeightVector] = None
    order: Optional[MonomialOrder] = None
    flatness: Dict[int, bool] = field(default_factory=dict)

    def __post_init__(self):
        if not has_parameter(self.ring):
            raise InputError("A family needs the parameter t in its ring.")
        self.generators = [to_ring(g, self.ring) for g in self.generators if g]
        self.degrees = [_x_degree(g) for g in self.generators]

    @classmethod
    def constant(cls, ideal: Ideal) -> "FamilyIdeal":
        """I x k[t]."""
        ring = polynomial_ring(ideal.nvars, ideal.domain, True)
        return cls([lift_to_family(g, ring) for g in ideal.generators], ring, source=ideal)

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "FamilyIdeal":
        """Wrap an ideal parsed from a family file."""
        return cls(list(ideal.generators), ideal.ring)

    @property
    def nvars(self) -> int:
        return x_count(self.ring)

    @property
    def r(self) -> int:
        return self.nvars - 1

    @property
    def domain(self):
        return self.ring.domain

    def default_window(self) -> Tuple[int, int]:
        top = max(self.degrees, default=0)
        return 0, top + 1

    def __str__(self) -> str:
        return "(" + ", ".join(format_poly(g) for g in self.generators) + ")"


def homogenize_ideal(ideal: Ideal, omega: WeightVector, order: Optional[MonomialOrder] = None,
                     window: Optional[Tuple[int, int]] = None) -> FamilyIdeal:
    """
    hom_ω(I), generated by hom_ω(g) over the reduced Groebner basis of I.

    Args:
        ideal: Homogeneous ideal over a field
        omega: Weight vector with one entry per variable
        order: Order whose basis is homogenised (the weight order refined by grevlex if omitted)
        window: Degrees for the flatness witness (0 .. max generator degree + 1 if omitted)

    Returns:
        FamilyIdeal with the flatness witness recorded per degree
    """
    if ideal.has_parameter:
        raise InputError("hom_ω needs an ideal over a field.")
    if not ideal.homogeneous:
        raise InputError("hom_ω needs a homogeneous ideal.")
    if len(omega) != ideal.nvars:
        raise InputError(f"Weight vector has {len(omega)} entries for {ideal.nvars} variables.")
    order = order or MonomialOrder.weight(omega)
    ring = polynomial_ring(ideal.nvars, ideal.domain, True)
    basis = [to_ring(g, ideal.ring) for g in ideal.groebner(order)]
    family = FamilyIdeal([omega_homogenize(omega, g, ring) for g in basis], ring,
                         source=ideal, omega=omega, order=order)
    window = window or family.default_window()
    if not family_is_flat(family, window):
        raise InvariantViolation(f"hom_ω(I) for ω = ({omega}) is not flat on {window}.")
    logger.info(f"Homogenised family: {family}")
    return family


def specialize(family: FamilyIdeal, alpha) -> Ideal:
    """The fiber at t = alpha, as an ideal of k[x0..xr]."""
    target = polynomial_ring(family.nvars, family.domain)
    return Ideal([substitute_parameter(g, alpha, target) for g in family.generators], target)


def presentation_matrix(family: FamilyIdeal, nu: int) -> Tuple[ExactMatrix, List[Tuple[int, Tuple[int, ...]]]]:
    """
    Presentation of [R/F]_ν over k[t].

    Returns:
        (matrix over k[t], row labels (generator index, multiplier monomial)); columns are the
        degree-ν monomials in ``monomials_of_degree`` order
    """
    nx = family.nvars
    columns = {m: j for j, m in enumerate(monomials_of_degree(nx, nu))}
    uni = uni_ring(family.domain)
    labels: List[Tuple[int, Tuple[int, ...]]] = []
    rows: Dict[int, Dict[int, Any]] = {}
    for s, (g, d) in enumerate(zip(family.generators, family.degrees)):
        for m in monomials_of_degree(nx, nu - d):
            cells: Dict[int, Dict[Tuple[int], Any]] = {}
            for monomial, coeff in g.items():
                x = tuple(a + b for a, b in zip(m, monomial[:nx]))
                cells.setdefault(columns[x], {})[(monomial[nx],)] = coeff
            row = {j: uni.from_dict(terms) for j, terms in cells.items()}
            row = {j: v for j, v in row.items() if v}
            if row:
                rows[len(labels)] = row
            labels.append((s, m))
    return ExactMatrix(len(labels), len(columns), family.domain, rows, POLY_T), labels


def fiber_rank(matrix: ExactMatrix, alpha) -> int:
    """Rank of a k[t]-matrix specialised at t = alpha."""
    return rank(matrix.map_entries(lambda f: evaluate(f, alpha), base=FIELD))


def degree_smith_forms(family: FamilyIdeal, window: Tuple[int, int]) -> Dict[int, Tuple[int, SmithForm]]:
    """ν -> (number of degree-ν monomials, Smith form of the presentation)."""
    lo, hi = window
    forms = {}
    for nu in tqdm(range(lo, hi + 1), desc="Presentations", unit="degree", disable=None, leave=False):
        matrix, _ = presentation_matrix(family, nu)
        forms[nu] = (matrix.ncols, smith_normal_form(matrix))
    return forms


def family_is_flat(family: FamilyIdeal, window: Tuple[int, int],
                   alphas: Sequence[int] = (0, 1, 2)) -> bool:
    """
    True iff every [R/F]_ν on the window is k[t]-free (all invariant factors are units).

    For flat degrees the fiber ranks at the sample points must equal the generic rank.
    """
    lo, hi = window
    flat = True
    for nu in range(lo, hi + 1):
        matrix, _ = presentation_matrix(family, nu)
        form = smith_normal_form(matrix)
        free = form.is_free_cokernel()
        family.flatness[nu] = free
        if free:
            for alpha in alphas:
                if fiber_rank(matrix, alpha) != form.rank:
                    raise InvariantViolation(
                        f"Fiber rank at t = {alpha} in degree {nu} differs from the generic rank {form.rank}."
                    )
        flat = flat and free
    logger.debug(f"Flatness witness on [{lo}, {hi}]: {family.flatness}")
    return flat


def fiber_dimensions(family: FamilyIdeal, nu: int, alphas: Iterable) -> Dict[Any, int]:
    """dim_k [R/F ⊗ k(α)]_ν for each sample α."""
    matrix, _ = presentation_matrix(family, nu)
    return {alpha: matrix.ncols - fiber_rank(matrix, alpha) for alpha in alphas}
