"""The group ring Z[t1..t5]/(t_i^2 + t_i + 1) and the torsion test on the rho relations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from ..config import settings
from ..domain.matrices import IntMatrix, det_bareiss, snf
from ..domain.number_field import NumberFieldElement, Scalar
from ..exceptions import DimensionMismatchError, IndexNotInKError
from ..logging import get_logger
from .fermat_catalog import K_INDICES, PlaneIndex

logger = get_logger("ds_module")

GENERATORS = 5
BASIS_SIZE = 2**GENERATORS

# raw polynomials: exponent vector over t1..t5 -> integer coefficient
RawPolynomial = Mapping[Tuple[int, ...], int]

# columns of the 4x4 witness table: 1, t3, t1*t3, t1*t3*t5
SUB_TABLE_MASKS = (0b00000, 0b00100, 0b00101, 0b10101)


def mask_of(exponent: Sequence[int]) -> int:
    """Bit i-1 set when t_i divides a square-free monomial."""
    return sum(1 << i for i, e in enumerate(exponent) if e)


def monomial_name(mask: int) -> str:
    if not mask:
        return "1"
    return "*".join(f"t{i + 1}" for i in range(GENERATORS) if mask >> i & 1)


@dataclass(frozen=True)
class GroupRingElement:
    """Coefficients on the 32 square-free monomials, indexed by bit mask."""

    coefficients: Tuple[int, ...] = (0,) * BASIS_SIZE

    def __post_init__(self) -> None:
        if len(self.coefficients) != BASIS_SIZE:
            raise DimensionMismatchError(f"Group ring elements have {BASIS_SIZE} coefficients")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "GroupRingElement":
        coefficients = [0] * BASIS_SIZE
        for mask, value in terms.items():
            coefficients[mask] += value
        return cls(tuple(coefficients))

    def __getitem__(self, mask: int) -> int:
        return self.coefficients[mask]

    def terms(self) -> Iterator[Tuple[int, int]]:
        for mask, value in enumerate(self.coefficients):
            if value:
                yield mask, value

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, factor: int) -> "GroupRingElement":
        return GroupRingElement(tuple(factor * a for a in self.coefficients))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        raw: Dict[Tuple[int, ...], int] = {}
        for m1, c1 in self.terms():
            for m2, c2 in other.terms():
                exponent = tuple((m1 >> i & 1) + (m2 >> i & 1) for i in range(GENERATORS))
                raw[exponent] = raw.get(exponent, 0) + c1 * c2
        return reduce(raw)

    def evaluate(self, values: Sequence[Scalar]) -> NumberFieldElement:
        return evaluate_raw(self.as_raw(), values)

    def as_raw(self) -> Dict[Tuple[int, ...], int]:
        return {
            tuple(mask >> i & 1 for i in range(GENERATORS)): value for mask, value in self.terms()
        }

    def __str__(self) -> str:
        parts = [f"{value}*{monomial_name(mask)}" for mask, value in self.terms()]
        return " + ".join(parts) if parts else "0"


def _check_exponent(exponent: Sequence[int]) -> Tuple[int, ...]:
    exponent = tuple(int(e) for e in exponent)
    if len(exponent) != GENERATORS or any(e < 0 for e in exponent):
        raise DimensionMismatchError(f"Exponent {exponent} is not a monomial in t1..t5")
    return exponent


def reduce(raw: RawPolynomial) -> GroupRingElement:
    """Rewrite t_i^2 -> -t_i - 1 until every monomial is square-free."""
    coefficients = [0] * BASIS_SIZE
    pending: List[Tuple[Tuple[int, ...], int]] = [
        (_check_exponent(e), int(c)) for e, c in raw.items()
    ]
    while pending:
        exponent, value = pending.pop()
        if not value:
            continue
        high = next((i for i, e in enumerate(exponent) if e >= 2), None)
        if high is None:
            coefficients[mask_of(exponent)] += value
            continue
        for drop in (1, 2):
            lowered = list(exponent)
            lowered[high] -= drop
            pending.append((tuple(lowered), -value))
    return GroupRingElement(tuple(coefficients))


def evaluate_raw(raw: RawPolynomial, values: Sequence[Scalar]) -> NumberFieldElement:
    """Evaluate a raw polynomial at t_i = values[i-1]."""
    if len(values) != GENERATORS:
        raise DimensionMismatchError(f"Need {GENERATORS} values")
    spec = next(v.spec for v in values if isinstance(v, NumberFieldElement))
    points = [spec.coerce(v) for v in values]
    total = spec.zero()
    for exponent, value in raw.items():
        term = spec.coerce(value)
        for point, e in zip(points, _check_exponent(exponent)):
            term = term * point**e
        total = total + term
    return total


def _factor(j: int, k: int) -> Dict[Tuple[int, ...], int]:
    """1 + t_j + t_j t_k as a raw polynomial."""
    def unit(*indices: int) -> Tuple[int, ...]:
        return tuple(1 if i + 1 in indices else 0 for i in range(GENERATORS))

    return {unit(): 1, unit(j): 1, unit(j, k): 1}


def rho(index: PlaneIndex) -> GroupRingElement:
    """(1 + t_j1 + t_j1 t_k1)(1 + t_j2 + t_j2 t_k2) for the second and third pairs of J."""
    if not index.in_k:
        raise IndexNotInKError(index.name)
    (j1, k1), (j2, k2) = index.pairs[1], index.pairs[2]
    raw: Dict[Tuple[int, ...], int] = {}
    for e1, c1 in _factor(j1, k1).items():
        for e2, c2 in _factor(j2, k2).items():
            exponent = tuple(a + b for a, b in zip(e1, e2))
            raw[exponent] = raw.get(exponent, 0) + c1 * c2
    return reduce(raw)


@dataclass(frozen=True)
class RhoRelation:
    index: PlaneIndex
    element: GroupRingElement


def relations() -> List[RhoRelation]:
    return [RhoRelation(index, rho(index)) for index in K_INDICES.values()]


def relation_matrix(scale: int = 1) -> IntMatrix:
    """4 x 32 matrix of the rho relations over the monomial basis ordered by mask."""
    return IntMatrix.from_rows(
        [list(relation.element.scale(scale).coefficients) for relation in relations()]
    )


@dataclass(frozen=True)
class TorsionCertificate:
    invariant_factors: Tuple[int, ...]
    sub_table: IntMatrix
    sub_table_det: int

    @property
    def is_torsion_free(self) -> bool:
        return all(f == 1 for f in self.invariant_factors)


def torsion_free_certificate(scale: int = 1) -> TorsionCertificate:
    """SNF of the relation matrix, plus the 4x4 witness table on 1, t3, t1t3, t1t3t5."""
    matrix = relation_matrix(scale)
    factors = snf(matrix, verify=settings.postconditions_enabled).invariant_factors
    sub_table = matrix.submatrix(range(matrix.rows), SUB_TABLE_MASKS)
    certificate = TorsionCertificate(factors, sub_table, det_bareiss(sub_table))
    logger.info(
        "torsion_certificate",
        invariant_factors=list(factors),
        sub_table_det=certificate.sub_table_det,
    )
    return certificate
