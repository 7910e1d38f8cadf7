"""Plane cubics in the Hesse pencil: forms, j-invariants, flexes and automorphisms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..config import settings
from ..domain.matrices import FieldMatrix, rref
from ..domain.number_field import NumberFieldElement, NumberFieldSpec, Scalar
from ..domain.polynomials import (
    BinaryForm,
    MultiPoly,
    dth_power_root,
    free_columns,
    restrict_to_subspace,
    substitute_linear,
)
from ..exceptions import (
    ClosureBudgetExceededError,
    DegenerateLineError,
    FlexExtractionFailedError,
    NotAnAutomorphismError,
    PostconditionError,
    PreconditionError,
    SingularCurveError,
)
from ..logging import get_logger

logger = get_logger("hesse_curves")

Point = Tuple[NumberFieldElement, NumberFieldElement, NumberFieldElement]

J_FERMAT = 0
J_SQUARE = 1728


def hesse_form(lam: NumberFieldElement) -> MultiPoly:
    """x0^3 + x1^3 + x2^3 - 3*lam*x0*x1*x2."""
    spec = lam.spec
    x0, x1, x2 = (MultiPoly.variable(spec, 3, i) for i in range(3))
    return x0**3 + x1**3 + x2**3 - (3 * lam) * x0 * x1 * x2


def is_smooth(lam: NumberFieldElement) -> bool:
    return lam**3 != 1


def j_invariant(lam: NumberFieldElement) -> NumberFieldElement:
    """j = 1728 * l^3 (l^3 + 8)^3 / (64 (l^3 - 1)^3) with l^3 = lam^3."""
    if not is_smooth(lam):
        raise SingularCurveError(str(lam))
    cube = lam**3
    return 1728 * cube * (cube + 8) ** 3 / (64 * (cube - 1) ** 3)


@dataclass(frozen=True)
class HesseCubic:
    """The smooth cubic curve x0^3 + x1^3 + x2^3 = 3*lam*x0*x1*x2."""

    lam: NumberFieldElement
    form: MultiPoly = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not is_smooth(self.lam):
            raise SingularCurveError(str(self.lam))
        object.__setattr__(self, "form", hesse_form(self.lam))

    @property
    def spec(self) -> NumberFieldSpec:
        return self.lam.spec

    def j_invariant(self) -> NumberFieldElement:
        return j_invariant(self.lam)

    def flexes(self) -> List["FlexDatum"]:
        return flex_table(self.lam)

    def aut_order(self) -> int:
        return aut_order(self.lam)


@dataclass(frozen=True)
class FlexDatum:
    """A flex point with its tangent line.

    When known, ``residue`` and ``constant`` record the identity
    F = constant * residue^d modulo the tangent form.
    """

    point: Point
    tangent: MultiPoly
    residue: Optional[MultiPoly] = None
    constant: Optional[NumberFieldElement] = None

    def scaled(self, factor: Scalar) -> "FlexDatum":
        """The same flex for the form factor * F."""
        if self.constant is None:
            return self
        return FlexDatum(self.point, self.tangent, self.residue, self.constant * factor)

    def normalized_point(self) -> Point:
        lead = next(c for c in self.point if c)
        return tuple(c / lead for c in self.point)  # type: ignore[return-value]


def flex_table(lam: NumberFieldElement) -> List[FlexDatum]:
    """The nine flexes of the Hesse cubic with their tangents.

    Each flex has one zero coordinate x_k, and modulo its tangent the form
    equals (1 - lam^3) * x_k^3. Needs a primitive cube root of unity in the field.
    """
    spec = lam.spec
    w = spec.omega()
    w2 = w * w
    kappa = 1 - lam**3
    table = [
        ((0, -1, 1), (lam, 1, 1)),
        ((0, -w, 1), (w * lam, w2, 1)),
        ((0, -w2, 1), (w2 * lam, w, 1)),
        ((1, 0, -1), (1, lam, 1)),
        ((1, 0, -w), (1, lam * w, w2)),
        ((1, 0, -w2), (1, lam * w2, w)),
        ((-1, 1, 0), (1, 1, lam)),
        ((-w, 1, 0), (w2, 1, lam * w)),
        ((-w2, 1, 0), (w, 1, lam * w2)),
    ]
    form = hesse_form(lam)
    flexes: List[FlexDatum] = []
    for point, tangent in table:
        coordinates = tuple(spec.coerce(c) for c in point)
        zero_index = next(k for k, c in enumerate(coordinates) if not c)
        datum = FlexDatum(
            point=coordinates,  # type: ignore[arg-type]
            tangent=MultiPoly.linear_form(spec, tangent),
            residue=MultiPoly.variable(spec, 3, zero_index),
            constant=kappa,
        )
        if not verify_flex(form, datum.point, datum.tangent, datum.residue, datum.constant):
            raise FlexExtractionFailedError(
                f"Tabulated flex {point} failed verification for lambda = {lam}"
            )
        flexes.append(datum)
    return flexes


def _tangent_system(tangent: MultiPoly) -> FieldMatrix:
    coefficients = tangent.linear_coefficients()
    if not any(coefficients):
        raise DegenerateLineError()
    return rref(FieldMatrix.from_rows(tangent.spec, [coefficients])).matrix


def verify_flex(
    form: MultiPoly,
    point: Sequence[Scalar],
    tangent: MultiPoly,
    residue: Optional[MultiPoly] = None,
    constant: Optional[NumberFieldElement] = None,
) -> bool:
    """Check that ``tangent`` meets the curve only at ``point``, with full multiplicity.

    Optionally also checks F = constant * residue^d on the line.
    """
    solved = _tangent_system(tangent)
    if form.evaluate(point) or tangent.evaluate(point):
        return False
    d = form.degree()
    restricted = restrict_to_subspace(form, solved)
    if restricted.is_zero():
        return False
    root = dth_power_root(BinaryForm.from_poly(restricted, d))
    if root is None:
        return False
    _, ell = root
    _, free = free_columns(solved)
    if ell.evaluate(point[free[0]], point[free[1]]):
        return False
    if residue is not None and constant is not None:
        if restricted != constant * restrict_to_subspace(residue, solved) ** d:
            return False
    return True


@dataclass(frozen=True)
class FlexResidue:
    """Linear form r and constant kappa with F = kappa * r^d on the tangent line."""

    residue: Tuple[NumberFieldElement, ...]
    constant: NumberFieldElement


def flex_residue(form: MultiPoly, flex: FlexDatum) -> FlexResidue:
    """Extract the residue of ``form`` along the tangent of ``flex``.

    Uses the tabulated residue when the datum carries one; otherwise lifts the
    monic root found on the line back to a linear form in three variables.
    """
    solved = _tangent_system(flex.tangent)
    d = form.degree()
    restricted = restrict_to_subspace(form, solved)
    root = None if restricted.is_zero() else dth_power_root(BinaryForm.from_poly(restricted, d))
    if root is None:
        raise FlexExtractionFailedError(
            f"Restriction of the form to the tangent at {flex.point} is not a {d}-th power"
        )
    if flex.residue is not None and flex.constant is not None:
        if restricted != flex.constant * restrict_to_subspace(flex.residue, solved) ** d:
            raise FlexExtractionFailedError(
                f"Tabulated residue at {flex.point} does not match the form"
            )
        return FlexResidue(flex.residue.linear_coefficients(), flex.constant)
    constant, ell = root
    _, free = free_columns(solved)
    lifted = [form.spec.zero()] * form.nvars
    lifted[free[0]] = ell.coefficients[1]
    lifted[free[1]] = ell.coefficients[0]
    return FlexResidue(tuple(lifted), constant)


@dataclass(frozen=True)
class AutGroup:
    """A finite matrix group, elements sorted by their coefficient vectors."""

    elements: Tuple[FieldMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def group_closure(
    generators: Sequence[FieldMatrix],
    form: MultiPoly,
    budget: Optional[int] = None,
) -> AutGroup:
    """Close ``generators`` under multiplication after checking each one preserves ``form``."""
    if not generators:
        raise PreconditionError("Group closure needs at least one generator")
    budget = budget or settings.geometry.closure_budget
    for index, g in enumerate(generators):
        if substitute_linear(form, g) != form:
            raise NotAnAutomorphismError(index)

    identity = FieldMatrix.identity(form.spec, form.nvars)
    seen = {identity}
    frontier = [identity]
    while frontier:
        discovered = []
        for element in frontier:
            for g in generators:
                product = element @ g
                if product in seen:
                    continue
                seen.add(product)
                discovered.append(product)
                if len(seen) > budget:
                    raise ClosureBudgetExceededError(budget)
        frontier = discovered

    group = AutGroup(tuple(sorted(seen, key=FieldMatrix.sort_key)))
    logger.debug("group_closure_done", order=group.order, generators=len(generators))
    if settings.postconditions_enabled:
        for element in group:
            if substitute_linear(form, element) != form:
                raise PostconditionError("Closure produced a matrix that does not preserve the form")
    return group


def _square_lattice_generator(lam: NumberFieldElement) -> Optional[FieldMatrix]:
    """The extra order-four symmetry of the j = 1728 member, if it exists over the field."""
    spec = lam.spec
    w = spec.omega()
    base = FieldMatrix.from_rows(spec, [[1, 1, 1], [1, w, w * w], [1, w * w, w]])
    form = hesse_form(lam)
    scale = spec.sqrt3().inverse()
    for sign in (-1, 1):
        candidate = (sign * scale) * base
        if substitute_linear(form, candidate) == form:
            return candidate
    return None


def _fermat_generator(lam: NumberFieldElement) -> Optional[FieldMatrix]:
    """diag(1, 1, w) carried over to a j = 0 member of the pencil.

    For lam * w^k = -2 the map T = diag(1, 1, w^k) * A, with A the Fourier
    matrix, satisfies F_lam(T x) = 9 (x0^3 + x1^3 + x2^3), so T diag(1, 1, w) T^-1
    preserves F_lam exactly.
    """
    spec = lam.spec
    w = spec.omega()
    w2 = w * w
    twist = FieldMatrix.diagonal(spec, [1, 1, w])
    if lam == 0:
        return twist
    k = next((k for k in range(3) if lam * w**k == -2), None)
    if k is None:
        return None
    fourier = FieldMatrix.from_rows(spec, [[1, 1, 1], [1, w, w2], [1, w2, w]])
    fourier_inverse = (spec.one() / 3) * FieldMatrix.from_rows(
        spec, [[1, 1, 1], [1, w2, w], [1, w, w2]]
    )
    model = FieldMatrix.diagonal(spec, [1, 1, w**k]) @ fourier
    model_inverse = fourier_inverse @ FieldMatrix.diagonal(spec, [1, 1, w ** (-k)])
    return model @ twist @ model_inverse


def standard_generators(lam: NumberFieldElement) -> List[FieldMatrix]:
    """Generators of Aut(F) for the Hesse cubic of parameter ``lam``.

    Always the coordinate permutations, diag(1, w, w^2) and w*I; for j = 0 also
    a conjugate of diag(1, 1, w) (diag(1, 1, w) itself at lam = 0); for j = 1728
    also the Fourier-type matrix scaled by 1/sqrt(3).
    """
    spec = lam.spec
    w = spec.omega()
    generators = [
        FieldMatrix.from_rows(spec, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        FieldMatrix.from_rows(spec, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        FieldMatrix.diagonal(spec, [1, w, w * w]),
        FieldMatrix.diagonal(spec, [w, w, w]),
    ]
    j = j_invariant(lam)
    if j == J_FERMAT:
        extra = _fermat_generator(lam)
        if extra is None:
            logger.warning("fermat_generator_unavailable", lam=str(lam))
        else:
            generators.append(extra)
    elif j == J_SQUARE:
        extra = _square_lattice_generator(lam)
        if extra is None:
            logger.warning("square_generator_unavailable", lam=str(lam))
        else:
            generators.append(extra)
    return generators


def aut_group(lam: NumberFieldElement) -> AutGroup:
    return group_closure(standard_generators(lam), hesse_form(lam))


def aut_order_from_j(j: NumberFieldElement) -> int:
    if j == J_FERMAT:
        return 162
    if j == J_SQUARE:
        return 108
    return 54


def aut_order(lam: NumberFieldElement) -> int:
    """|Aut(F)| from the j-invariant: 162 for j = 0, 108 for j = 1728, else 54.

    With postconditions enabled and cube roots of unity available, the order is
    cross-checked against the generator closure.
    """
    expected = aut_order_from_j(j_invariant(lam))
    if settings.postconditions_enabled and lam.spec.roots_of_unity % 3 == 0:
        closed = aut_group(lam).order
        if closed != expected:
            raise PostconditionError(
                f"Generator closure has order {closed}, j-invariant predicts {expected}"
            )
    return expected
