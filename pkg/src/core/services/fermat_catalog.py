"""The planes on the Fermat cubic fourfold and their intersection lattice.

The fourfold is z0^3 + ... + z5^3 = 0, written as the split hypersurface
F(x) = -F(y) with F the Fermat cubic curve and (x | y) = (z0, z1, z2 | z3, z4, z5).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..domain.matrices import (
    FieldMatrix,
    IntMatrix,
    det_bareiss,
    rational_kernel_primitive,
)
from ..domain.number_field import Q_ZETA3, NumberFieldElement, NumberFieldSpec
from ..exceptions import (
    IndexNotInKError,
    KernelRankUnexpectedError,
    NonIntegralKernelError,
    ParseError,
    PostconditionError,
)
from ..logging import get_logger, log_performance
from .hesse_curves import aut_group, flex_table, hesse_form
from .plane_geometry import (
    Plane,
    SplitHypersurface,
    contains,
    intersection_number,
    rank2_planes,
    rank3_planes,
)

logger = get_logger("fermat_catalog")

FERMAT_FIELD = Q_ZETA3


@dataclass(frozen=True)
class PlaneIndex:
    """A pairing of {0, ..., 5} into three ordered pairs (j, k)."""

    pairs: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]

    def __post_init__(self) -> None:
        flat = sorted(i for pair in self.pairs for i in pair)
        if len(self.pairs) != 3 or flat != list(range(6)):
            raise ParseError(f"{self.pairs} is not a pairing of 0..5", "BAD_INDEX")

    @property
    def name(self) -> str:
        for name, index in K_INDICES.items():
            if index.pairs == self.pairs:
                return name
        return "[" + "|".join(f"{j}{k}" for j, k in self.pairs) + "]"

    @property
    def in_k(self) -> bool:
        return self.pairs in {index.pairs for index in K_INDICES.values()}


K_INDICES: Dict[str, PlaneIndex] = {
    "J1": PlaneIndex(((0, 1), (2, 3), (4, 5))),
    "J2": PlaneIndex(((0, 1), (2, 4), (3, 5))),
    "J3": PlaneIndex(((0, 2), (1, 3), (4, 5))),
    "J4": PlaneIndex(((0, 2), (1, 4), (3, 5))),
}


@dataclass(frozen=True)
class BetaTriple:
    """Three cube roots of unity, stored as exponents of omega."""

    exponents: Tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.exponents) != 3 or any(e not in (0, 1, 2) for e in self.exponents):
            raise ParseError(f"{self.exponents} are not omega exponents", "BAD_BETA")

    def values(self, spec: NumberFieldSpec = FERMAT_FIELD) -> Tuple[NumberFieldElement, ...]:
        w = spec.omega()
        return tuple(w**e for e in self.exponents)

    @property
    def label(self) -> str:
        names = {0: "1", 1: "w", 2: "w^2"}
        return "(" + ",".join(names[e] for e in self.exponents) + ")"


@dataclass(frozen=True)
class LPlaneLabel:
    index: PlaneIndex
    beta: BetaTriple

    @property
    def label(self) -> str:
        return f"{self.index.name}{self.beta.label}"


def L_plane(index: PlaneIndex, beta: BetaTriple, spec: NumberFieldSpec = FERMAT_FIELD) -> Plane:
    """The plane z_k + beta_i z_j = 0 for the i-th pair (j, k) of the index."""
    rows = []
    for (j, k), b in zip(index.pairs, beta.values(spec)):
        row = [spec.zero()] * 6
        row[k] = spec.one()
        row[j] = b
        rows.append(row)
    return Plane.from_equations(rows, spec)


def all_labels() -> List[LPlaneLabel]:
    """The 108 labels, ordered by index name and then by beta exponents."""
    return [
        LPlaneLabel(index, BetaTriple((a, b, c)))
        for index in K_INDICES.values()
        for a in range(3)
        for b in range(3)
        for c in range(3)
    ]


def build_L_planes(spec: NumberFieldSpec = FERMAT_FIELD) -> List[Plane]:
    planes = [L_plane(label.index, label.beta, spec) for label in all_labels()]
    if len(set(planes)) != len(planes):
        raise PostconditionError("L-planes are not pairwise distinct")
    return planes


# The 19 planes whose classes form a basis of the algebraic lattice
BASIS_TABLE: Tuple[Tuple[str, Tuple[int, int, int]], ...] = (
    ("J1", (0, 0, 0)),
    ("J1", (0, 0, 1)),
    ("J1", (0, 0, 2)),
    ("J1", (0, 1, 0)),
    ("J1", (0, 1, 1)),
    ("J1", (1, 0, 0)),
    ("J1", (1, 0, 1)),
    ("J1", (1, 1, 0)),
    ("J1", (1, 1, 1)),
    ("J2", (0, 0, 0)),
    ("J2", (0, 0, 1)),
    ("J2", (1, 0, 0)),
    ("J2", (1, 0, 1)),
    ("J3", (0, 0, 0)),
    ("J3", (0, 0, 1)),
    ("J3", (0, 1, 0)),
    ("J3", (0, 1, 1)),
    ("J4", (0, 0, 0)),
    ("J4", (0, 0, 1)),
)


def basis_labels() -> List[LPlaneLabel]:
    return [LPlaneLabel(K_INDICES[name], BetaTriple(exps)) for name, exps in BASIS_TABLE]


def build_S_basis(spec: NumberFieldSpec = FERMAT_FIELD) -> List[Plane]:
    return [L_plane(label.index, label.beta, spec) for label in basis_labels()]


def gram_matrix(planes: Sequence[Plane]) -> IntMatrix:
    """Symmetric matrix of pairwise intersection numbers."""
    n = len(planes)
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = intersection_number(planes[i], planes[j])
            entries[i][j] = entries[j][i] = value
    return IntMatrix.from_rows(entries, n)


@dataclass(frozen=True)
class DecompositionRecord:
    label: LPlaneLabel
    coefficients: Tuple[int, ...]


def decompose(
    plane: Plane,
    basis: Sequence[Plane],
    basis_gram: IntMatrix,
    label: str = "plane",
) -> Tuple[int, ...]:
    """Integer coordinates of a plane class in the basis.

    Borders the basis Gram matrix with the intersections v of the plane and
    reads m from the kernel vector (m, 1): then M m = -v, so the class of the
    plane equals -(sum m_i S_i).
    """
    n = len(basis)
    v = [intersection_number(plane, s) for s in basis]
    rows = [list(basis_gram.row(i)) + [v[i]] for i in range(n)]
    rows.append(v + [intersection_number(plane, plane)])
    bordered = IntMatrix.from_rows(rows, n + 1)
    determinant = det_bareiss(bordered)
    kernel = rational_kernel_primitive(bordered)
    if determinant != 0 or len(kernel) != 1:
        raise KernelRankUnexpectedError(label, len(kernel))
    vector = kernel[0]
    if vector[-1] != 1:
        raise NonIntegralKernelError(label, vector[-1])
    m = vector[:-1]
    if basis_gram.apply(m) != tuple(-x for x in v):
        raise PostconditionError(f"Kernel vector for {label} is inconsistent with the Gram matrix")
    return tuple(m)


@log_performance("fermat_catalog")
def decompose_all(spec: NumberFieldSpec = FERMAT_FIELD) -> List[DecompositionRecord]:
    """Decompose each of the 108 L-planes in the 19-plane basis."""
    basis = build_S_basis(spec)
    gram = gram_matrix(basis)
    records = []
    for label in all_labels():
        plane = L_plane(label.index, label.beta, spec)
        m = decompose(plane, basis, gram, label.label)
        records.append(DecompositionRecord(label, m))
    return records


def fermat_hypersurface(spec: NumberFieldSpec = FERMAT_FIELD) -> SplitHypersurface:
    fermat = hesse_form(spec.zero())
    return SplitHypersurface(fermat, -fermat)


@log_performance("fermat_catalog")
def all_fermat_planes(spec: NumberFieldSpec = FERMAT_FIELD) -> Tuple[List[Plane], List[Plane]]:
    """The 243 rank-2 and 162 rank-3 planes of the Fermat cubic fourfold.

    Rank-2 planes come from flex pairs with residue constants 1 and -1; rank-3
    planes are the graphs y = -g x of the automorphisms g of the Fermat curve.
    """
    hypersurface = fermat_hypersurface(spec)
    flexes = flex_table(spec.zero())
    rank2 = rank2_planes(flexes, [f.scaled(-1) for f in flexes], 3, hypersurface)

    equal_forms = SplitHypersurface(hypersurface.F1, hypersurface.F1)
    minus_identity = -FieldMatrix.identity(spec, 3)
    rank3 = [
        plane.with_y_substitution(minus_identity)
        for plane in rank3_planes(aut_group(spec.zero()), equal_forms)
    ]
    for plane in rank3:
        if not contains(hypersurface, plane):
            raise PostconditionError("Rank-3 graph is not on the Fermat fourfold")
    if set(rank2) & set(rank3):
        raise PostconditionError("A plane was classified with both ranks")
    logger.info("fermat_planes_built", rank2=len(rank2), rank3=len(rank3))
    return rank2, rank3


_INDEX_PATTERN = re.compile(
    r"^\s*(?P<index>J[1-4])\s*,?\s*\(\s*(?P<b0>[^,()]+)\s*,\s*(?P<b1>[^,()]+)\s*,\s*(?P<b2>[^,()]+)\s*\)\s*$"
)
_BETA_WORDS = {"1": 0, "w": 1, "omega": 1, "w^2": 2, "w2": 2, "omega^2": 2}


def parse_index(text: str) -> LPlaneLabel:
    """Parse labels such as ``J1,(w,1,1)`` or ``J3(1,w^2,w)``."""
    match = _INDEX_PATTERN.match(text)
    if match is None:
        raise ParseError(f"Cannot parse plane label {text!r}", "BAD_LABEL")
    name = match.group("index")
    if name not in K_INDICES:
        raise IndexNotInKError(name)
    exponents = []
    for key in ("b0", "b1", "b2"):
        word = match.group(key).strip().lower().replace(" ", "")
        if word not in _BETA_WORDS:
            raise ParseError(f"{word!r} is not a cube root of unity", "BAD_BETA")
        exponents.append(_BETA_WORDS[word])
    return LPlaneLabel(K_INDICES[name], BetaTriple(tuple(exponents)))  # type: ignore[arg-type]
