"""Invariants and certificates for integral lattices."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..config import settings
from ..domain.matrices import (
    Definiteness,
    IntMatrix,
    definiteness,
    det_bareiss,
    int_rank,
    snf,
)
from ..exceptions import (
    NotPositiveDefiniteError,
    NotSquareError,
    NotSymmetricError,
    PreconditionError,
    SizeMismatchError,
)
from ..logging import get_logger

logger = get_logger("lattice_tools")


@dataclass(frozen=True)
class GramMatrix:
    """A symmetric integer matrix read as the Gram matrix of a lattice."""

    matrix: IntMatrix

    def __post_init__(self) -> None:
        if not self.matrix.is_square:
            raise NotSquareError(self.matrix.rows, self.matrix.cols)
        if not self.matrix.is_symmetric():
            raise NotSymmetricError()

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GramMatrix":
        return cls(IntMatrix.from_rows(rows))

    @property
    def size(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class LatticeReport:
    rank: int
    determinant: int
    snf_diagonal: Tuple[int, ...]
    definiteness: Definiteness

    @property
    def discriminant_group(self) -> Tuple[int, ...]:
        """Nontrivial invariant factors, i.e. the cyclic orders of G^*/G."""
        return tuple(d for d in self.snf_diagonal if d != 1)


def lattice_invariants(gram: GramMatrix) -> LatticeReport:
    g = gram.matrix
    return LatticeReport(
        rank=int_rank(g),
        determinant=det_bareiss(g),
        snf_diagonal=snf(g, verify=settings.postconditions_enabled).invariant_factors,
        definiteness=definiteness(g),
    )


def u_lattice(scale: int = 1) -> GramMatrix:
    """The hyperbolic plane U(n) = [[0, n], [n, 0]]."""
    return GramMatrix.from_rows([[0, scale], [scale, 0]])


def direct_sum(blocks: Sequence[GramMatrix]) -> GramMatrix:
    size = sum(b.size for b in blocks)
    rows = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i in range(block.size):
            for j in range(block.size):
                rows[offset + i][offset + j] = block.matrix[i, j]
        offset += block.size
    return GramMatrix(IntMatrix.from_rows(rows, size))


def im_phi_gram(d: int) -> GramMatrix:
    """Gram matrix of the image of the cylinder map for the split surface of degree d.

    Block diagonal with 2g^2 copies of [[0, -d], [-d, 0]], g = (d-1)(d-2)/2.
    """
    if d < 3:
        raise PreconditionError(f"Degree {d} is below 3", "DEGREE_TOO_SMALL")
    genus = (d - 1) * (d - 2) // 2
    return direct_sum([u_lattice(-d)] * (2 * genus * genus))


def block_flip(blocks: int) -> IntMatrix:
    """diag(1, -1) repeated: conjugates each U(-d) block into U(d)."""
    return IntMatrix.diagonal([1, -1] * blocks)


def congruence_check(change: IntMatrix, first: GramMatrix, second: GramMatrix) -> bool:
    """True when B is unimodular and B^T G1 B = G2."""
    if not (change.rows == change.cols == first.size == second.size):
        raise SizeMismatchError(
            f"Sizes {change.rows}x{change.cols}, {first.size}, {second.size} do not agree",
            "SIZE_MISMATCH",
        )
    if abs(det_bareiss(change)) != 1:
        return False
    return change.transpose() @ first.matrix @ change == second.matrix


def complement_disc_check(
    det_l: int, det_t: int, rank_l: int, rank_t: int, ambient_rank: int
) -> bool:
    """Numeric consistency of a primitive sublattice L and its complement T in a unimodular lattice.

    Their discriminants agree up to sign and their ranks add up to the ambient rank.
    """
    return abs(det_l) == abs(det_t) and rank_l + rank_t == ambient_rank


def _square_free(n: int) -> Tuple[int, int]:
    """Split n = q^2 * D with D square-free; returns (q, D)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    q = 1
    k = 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
            q *= k
        k += 1
    return q, sign * n


@dataclass(frozen=True)
class QuadraticSurd:
    """p + q * sqrt(D) with rationals p, q and square-free integer D."""

    p: Fraction
    q: Fraction
    D: int

    def __post_init__(self) -> None:
        p, q = Fraction(self.p), Fraction(self.q)
        factor, radicand = _square_free(self.D) if self.D else (1, 0)
        q *= factor
        if radicand == 1:
            p, q, radicand = p + q, Fraction(0), 0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q if radicand else Fraction(0))
        object.__setattr__(self, "D", radicand)

    def __str__(self) -> str:
        if not self.q:
            return str(self.p)
        root = "i" if self.D == -1 else f"sqrt({self.D})"
        if self.q == 1:
            surd = root
        elif self.q == -1:
            surd = f"-{root}"
        else:
            surd = f"{self.q}*{root}"
        if not self.p:
            return surd
        return f"({self.p}+{surd})".replace("+-", "-")


@dataclass(frozen=True)
class BinaryQuadraticInput:
    """The even binary form [[2a, b], [b, 2c]]; must be positive definite."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.discriminant >= 0:
            raise NotPositiveDefiniteError(self.a, self.b, self.c)

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def gram(self) -> GramMatrix:
        return GramMatrix.from_rows([[2 * self.a, self.b], [self.b, 2 * self.c]])


@dataclass(frozen=True)
class ShiodaMitaniResult:
    tau1: QuadraticSurd
    tau2: QuadraticSurd
    discriminant: int
    transcendental: GramMatrix


def shioda_mitani(a: int, b: int, c: int) -> ShiodaMitaniResult:
    """Period points of the product of elliptic curves with transcendental lattice [[2a, b], [b, 2c]].

    tau1 = (-b + sqrt(b^2 - 4ac)) / (2a) and tau2 = (b + sqrt(b^2 - 4ac)) / 2.
    The twisted lattice T(-3) is [[-6a, -3b], [-3b, -6c]].
    """
    delta = BinaryQuadraticInput(a, b, c).discriminant
    tau1 = QuadraticSurd(Fraction(-b, 2 * a), Fraction(1, 2 * a), delta)
    tau2 = QuadraticSurd(Fraction(b, 2), Fraction(1, 2), delta)
    twisted = GramMatrix.from_rows([[-6 * a, -3 * b], [-3 * b, -6 * c]])
    logger.debug("shioda_mitani", a=a, b=b, c=c, discriminant=delta)
    return ShiodaMitaniResult(tau1, tau2, delta, twisted)

