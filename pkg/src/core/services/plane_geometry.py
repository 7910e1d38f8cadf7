"""Planes on split hypersurfaces F1(x) = F2(y) in P^5."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import settings
from ..domain.matrices import FieldMatrix, field_rank, rref
from ..domain.number_field import NumberFieldElement, Scalar, rational_dth_root
from ..domain.polynomials import MultiPoly, restrict_to_subspace
from ..exceptions import (
    DimensionMismatchError,
    FieldTooSmallError,
    FlexExtractionFailedError,
    FormsNotEqualError,
    IllegalRankError,
    MissingAutOrderError,
    MixedFieldError,
    PlaneNotContainedError,
    PostconditionError,
    PreconditionError,
)
from ..logging import get_logger, log_performance
from .hesse_curves import (
    AutGroup,
    FlexDatum,
    aut_group,
    aut_order,
    aut_order_from_j,
    flex_residue,
    flex_table,
    hesse_form,
    j_invariant,
)

logger = get_logger("plane_geometry")

# rank of the stacked 6x6 system -> intersection number of the two planes
INTERSECTION_BY_RANK = {6: 0, 5: 1, 4: -1, 3: 3}


class PlaneRank(int, Enum):
    RANK2 = 2
    RANK3 = 3


@dataclass(frozen=True, eq=False)
class Plane:
    """The plane {A x = B y} in P^5, compared through its canonical reduced form."""

    A: FieldMatrix
    B: FieldMatrix
    canonical: FieldMatrix = field(init=False)

    def __post_init__(self) -> None:
        if (self.A.rows, self.A.cols, self.B.rows, self.B.cols) != (3, 3, 3, 3):
            raise DimensionMismatchError("A plane in P^5 is cut out by two 3x3 blocks")
        if self.A.spec != self.B.spec:
            raise MixedFieldError(self.A.spec.label, self.B.spec.label)
        reduced = rref(self.A.hstack(-self.B))
        if reduced.rank != 3:
            raise IllegalRankError(
                f"System [A | -B] has rank {reduced.rank}, a plane needs rank 3",
                "ILLEGAL_RANK",
            )
        object.__setattr__(self, "canonical", reduced.matrix)

    @classmethod
    def from_equations(cls, rows: Sequence[Sequence[Scalar]], spec=None) -> "Plane":
        """Build from three rows (a | c) meaning a.x + c.y = 0."""
        spec = spec or next(e.spec for r in rows for e in r if isinstance(e, NumberFieldElement))
        system = FieldMatrix.from_rows(spec, rows)
        if system.cols != 6:
            raise DimensionMismatchError("Plane equations need six coordinates")
        return cls(system.columns(0, 3), -system.columns(3, 6))

    @property
    def spec(self):
        return self.canonical.spec

    def with_y_substitution(self, h: FieldMatrix) -> "Plane":
        """Rewrite the plane after the coordinate change y_old = h y_new."""
        return Plane(self.A, self.B @ h)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Plane):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def sort_key(self):
        return self.canonical.sort_key()


@dataclass(frozen=True)
class SplitHypersurface:
    """X = {F1(x) - F2(y) = 0} for ternary forms of a common degree d >= 3."""

    F1: MultiPoly
    F2: MultiPoly
    d: int = field(init=False)

    def __post_init__(self) -> None:
        for form in (self.F1, self.F2):
            if form.nvars != 3 or not form.is_homogeneous() or form.is_zero():
                raise DimensionMismatchError("Split hypersurfaces need nonzero ternary forms")
        if self.F1.spec != self.F2.spec:
            raise MixedFieldError(self.F1.spec.label, self.F2.spec.label)
        if self.F1.degree() != self.F2.degree() or self.F1.degree() < 3:
            raise DimensionMismatchError("Both forms must share a degree d >= 3")
        object.__setattr__(self, "d", self.F1.degree())

    @property
    def spec(self):
        return self.F1.spec

    @property
    def form(self) -> MultiPoly:
        return self.F1.embed(6, 0) - self.F2.embed(6, 3)

    def balanced(self, scale: Scalar) -> "SplitHypersurface":
        """The same hypersurface written as F1(x) = (scale * F2)(y)."""
        return SplitHypersurface(self.F1, scale * self.F2)


def classify_rank(plane: Plane) -> PlaneRank:
    """Rank3 when the x-block A is invertible, Rank2 when it has rank 2."""
    rank_a = field_rank(plane.canonical.columns(0, 3))
    rank_b = field_rank(plane.canonical.columns(3, 6))
    if rank_a not in (2, 3) or rank_b < 2:
        raise IllegalRankError(
            f"Block ranks ({rank_a}, {rank_b}) do not occur on a smooth split hypersurface",
            "ILLEGAL_RANK",
            {"rank_a": rank_a, "rank_b": rank_b},
        )
    return PlaneRank(rank_a)


def contains(hypersurface: SplitHypersurface, plane: Plane) -> bool:
    """True when F1(x) - F2(y) vanishes identically on the plane."""
    return restrict_to_subspace(hypersurface.form, plane.canonical).is_zero()


def _ratio_root(ratio: NumberFieldElement, d: int) -> NumberFieldElement:
    if ratio == 1:
        return ratio.spec.one()
    if ratio.is_rational():
        root = rational_dth_root(ratio.rational_value(), d)
        if root is not None:
            return ratio.spec.coerce(root)
    raise FieldTooSmallError(ratio.spec.label, f"a {d}-th root of {ratio}")


def rank2_planes(
    flexes1: Sequence[FlexDatum],
    flexes2: Sequence[FlexDatum],
    d: int,
    hypersurface: SplitHypersurface,
) -> List[Plane]:
    """Planes spanned by a flex of each curve, d per pair of flexes.

    For flexes with F1 = k1 r1^d mod l0 and F2 = k2 r2^d mod m2 the planes are
    l0(x) = 0, r1(x) = zeta * rho * r2(y), m2(y) = 0 with rho^d = k2 / k1 and
    zeta running over the d-th roots of unity.
    """
    spec = hypersurface.spec
    roots = spec.roots_of_unity_of_order(d)
    zero = [spec.zero()] * 3
    residues1 = [flex_residue(hypersurface.F1, f) for f in flexes1]
    residues2 = [flex_residue(hypersurface.F2, f) for f in flexes2]
    planes: Dict[Plane, None] = {}
    for f1, res1 in zip(flexes1, residues1):
        tangent1 = list(f1.tangent.linear_coefficients())
        for f2, res2 in zip(flexes2, residues2):
            tangent2 = list(f2.tangent.linear_coefficients())
            rho = _ratio_root(res2.constant / res1.constant, d)
            for zeta in roots:
                rows = [
                    tangent1 + zero,
                    list(res1.residue) + [-(zeta * rho) * r for r in res2.residue],
                    zero + tangent2,
                ]
                plane = Plane.from_equations(rows, spec)
                if not contains(hypersurface, plane):
                    raise FlexExtractionFailedError(
                        f"Plane through flexes {f1.point} and {f2.point} is not on the hypersurface"
                    )
                planes.setdefault(plane, None)
    logger.debug("rank2_planes_built", count=len(planes))
    return list(planes)


def rank3_planes(group: AutGroup, hypersurface: SplitHypersurface) -> List[Plane]:
    """Graphs y = g x of the automorphisms of F, for the presentation F1 = F2 = F."""
    if hypersurface.F1 != hypersurface.F2:
        raise FormsNotEqualError()
    spec = hypersurface.spec
    identity = FieldMatrix.identity(spec, 3)
    planes: Dict[Plane, None] = {}
    for g in group:
        plane = Plane(g, identity)
        if not contains(hypersurface, plane):
            raise PostconditionError(f"Graph of {g.to_rows()} is not on the hypersurface")
        planes.setdefault(plane, None)
    if len(planes) != group.order:
        raise PostconditionError("Graphs of distinct automorphisms coincide")
    return list(planes)


def intersection_number(
    first: Plane,
    second: Plane,
    hypersurface: Optional[SplitHypersurface] = None,
    strict: Optional[bool] = None,
) -> int:
    """Intersection number of two planes on a smooth cubic fourfold.

    Read off from the rank of the stacked system: disjoint planes give 0, a
    point gives 1, a line gives -1 and equal planes give 3 (self-intersection).
    """
    strict = settings.geometry.strict_membership if strict is None else strict
    if strict and hypersurface is not None:
        for plane in (first, second):
            if not contains(hypersurface, plane):
                raise PlaneNotContainedError("Plane does not lie on the hypersurface")
    rank = field_rank(first.canonical.vstack(second.canonical))
    return INTERSECTION_BY_RANK[rank]


def count_planes(
    d: int,
    nu1: int,
    nu2: int,
    aut_order: Optional[int] = None,
    equivalent: bool = False,
) -> int:
    """d * nu1 * nu2 rank-2 planes, plus |Aut| rank-3 planes for equivalent forms."""
    if equivalent:
        if aut_order is None:
            raise MissingAutOrderError()
        if nu1 != nu2:
            raise PreconditionError("Equivalent forms have the same number of flexes")
        return d * nu1 * nu2 + aut_order
    return d * nu1 * nu2


def cubic_plane_count(lam1: NumberFieldElement, lam2: NumberFieldElement) -> int:
    """Number of planes on the split cubic fourfold of two Hesse cubics."""
    if lam1.spec != lam2.spec:
        raise MixedFieldError(lam1.spec.label, lam2.spec.label)
    equivalent = j_invariant(lam1) == j_invariant(lam2)
    if equivalent:
        return count_planes(3, 9, 9, aut_order(lam1), equivalent=True)
    return count_planes(3, 9, 9)


@dataclass(frozen=True)
class PlaneEnumeration:
    hypersurface: SplitHypersurface
    rank2: Tuple[Plane, ...]
    rank3: Tuple[Plane, ...]

    @property
    def total(self) -> int:
        return len(self.rank2) + len(self.rank3)

    def planes(self) -> List[Plane]:
        return sorted(self.rank2 + self.rank3, key=Plane.sort_key)


@log_performance("plane_geometry")
def enumerate_planes(lam1: NumberFieldElement, lam2: NumberFieldElement) -> PlaneEnumeration:
    """Construct every plane of the split cubic fourfold of two Hesse cubics.

    Unequal parameters are handled in the balanced presentation
    F1(x) = (k1 / k2) F2(y), which keeps the residue constants equal. Rank-3
    planes are built only when lam1 = lam2; isomorphic curves with different
    parameters raise FormsNotEqualError.
    """
    if lam1.spec != lam2.spec:
        raise MixedFieldError(lam1.spec.label, lam2.spec.label)
    j1 = j_invariant(lam1)
    equivalent = j1 == j_invariant(lam2)
    flexes1 = flex_table(lam1)
    flexes2 = flex_table(lam2)
    F1, F2 = hesse_form(lam1), hesse_form(lam2)

    if lam1 == lam2:
        hypersurface = SplitHypersurface(F1, F1)
        rank2 = rank2_planes(flexes1, flexes2, 3, hypersurface)
        rank3 = rank3_planes(aut_group(lam1), hypersurface)
    elif equivalent:
        raise FormsNotEqualError()
    else:
        scale = flexes1[0].constant / flexes2[0].constant  # type: ignore[operator]
        hypersurface = SplitHypersurface(F1, F2).balanced(scale)
        rank2 = rank2_planes(flexes1, [f.scaled(scale) for f in flexes2], 3, hypersurface)
        rank3 = []

    enumeration = PlaneEnumeration(hypersurface, tuple(rank2), tuple(rank3))
    expected = count_planes(
        3, len(flexes1), len(flexes2), aut_order_from_j(j1) if equivalent else None, equivalent
    )
    if enumeration.total != expected:
        raise PostconditionError(
            f"Enumerated {enumeration.total} planes, the count formula gives {expected}"
        )
    logger.info(
        "planes_enumerated",
        lam1=str(lam1),
        lam2=str(lam2),
        rank2=len(rank2),
        rank3=len(rank3),
    )
    return enumeration
