"""Custom exceptions for the split cubic fourfold toolkit."""
from __future__ import annotations

from typing import Any, Dict, Optional


class SplitCubicError(Exception):
    """Base exception for all toolkit errors."""

    exit_code: int = 1

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.details = details or {}
        super().__init__(self.message)


class DomainError(SplitCubicError):
    """Raised when an input lies outside the domain of an operation."""

    exit_code = 2


class VerificationError(SplitCubicError):
    """Raised when a computed certificate disagrees with its expectation."""

    exit_code = 1


class UsageError(SplitCubicError):
    """Raised for malformed command lines."""

    exit_code = 64


# Exact arithmetic


class ZeroInverseError(DomainError):
    """Raised when inverting zero."""

    def __init__(self, label: str):
        super().__init__(f"Cannot invert zero in {label}", "ZERO_INVERSE")


class NotInvertibleError(DomainError):
    """Raised when the modulus shares a factor with the element (reducible modulus)."""

    def __init__(self, label: str, gcd_degree: int):
        super().__init__(
            f"Element is not invertible in {label}: gcd with modulus has degree {gcd_degree}",
            "NOT_INVERTIBLE",
            {"gcd_degree": gcd_degree},
        )


class MixedFieldError(DomainError):
    """Raised when values from different number fields are combined."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Cannot mix {left} and {right}", "MIXED_FIELD")


class NotSquareError(DomainError):
    """Raised when a square matrix is required."""

    def __init__(self, rows: int, cols: int):
        super().__init__(f"Matrix is {rows}x{cols}, expected square", "NOT_SQUARE")


class NotSymmetricError(DomainError):
    """Raised when a symmetric matrix is required."""

    def __init__(self) -> None:
        super().__init__("Matrix is not symmetric", "NOT_SYMMETRIC")


class DimensionMismatchError(DomainError):
    """Raised when shapes or variable counts disagree."""
    pass


class SizeMismatchError(DomainError):
    """Raised when matrices passed together have incompatible sizes."""
    pass


class InconsistentSystemError(DomainError):
    """Raised when a linear system is not in solved (reduced echelon) form."""
    pass


class PreconditionError(DomainError):
    """Raised when a documented precondition does not hold."""
    pass


class ParseError(DomainError):
    """Raised when user supplied text cannot be parsed."""

    exit_code = 64


class PostconditionError(VerificationError):
    """Raised when a self-check of an exact algorithm fails."""
    pass


# Curves and planes


class SingularCurveError(DomainError):
    """Raised for Hesse parameters with lambda^3 = 1."""

    def __init__(self, value: str):
        super().__init__(f"Hesse cubic is singular for lambda = {value}", "SINGULAR_CURVE")


class FieldTooSmallError(DomainError):
    """Raised when a required algebraic number is not representable in the field."""

    def __init__(self, label: str, needed: str):
        super().__init__(f"{label} does not contain {needed}", "FIELD_TOO_SMALL", {"needed": needed})


class DegenerateLineError(DomainError):
    """Raised when a line is given by the zero linear form."""

    def __init__(self) -> None:
        super().__init__("Line is given by the zero linear form", "DEGENERATE_LINE")


class NotAnAutomorphismError(DomainError):
    """Raised when a proposed generator does not preserve the form."""

    def __init__(self, index: int):
        super().__init__(
            f"Generator {index} does not preserve the form", "NOT_AN_AUTOMORPHISM", {"index": index}
        )
        self.index = index


class ClosureBudgetExceededError(DomainError):
    """Raised when generator closure grows beyond the configured budget."""

    def __init__(self, budget: int):
        super().__init__(
            f"Group closure exceeded {budget} elements", "CLOSURE_BUDGET_EXCEEDED", {"budget": budget}
        )


class IllegalRankError(DomainError):
    """Raised when a plane system has a rank that cannot occur on a smooth split hypersurface."""
    pass


class FlexExtractionFailedError(DomainError):
    """Raised when a tangent restriction is not a perfect power."""
    pass


class FormsNotEqualError(DomainError):
    """Raised when rank-3 planes are requested for unequal forms."""

    def __init__(self) -> None:
        super().__init__("Rank-3 planes need the equal-form presentation F1 = F2", "FORMS_NOT_EQUAL")


class MissingAutOrderError(DomainError):
    """Raised when an equivalent pair is counted without an automorphism order."""

    def __init__(self) -> None:
        super().__init__("Equivalent forms need the automorphism order", "MISSING_AUT_ORDER")


class PlaneNotContainedError(DomainError):
    """Raised in strict mode when a plane does not lie on the hypersurface."""
    pass


# Lattices and the Fermat catalog


class NotPositiveDefiniteError(DomainError):
    """Raised when a binary form is not even positive definite."""

    def __init__(self, a: int, b: int, c: int):
        super().__init__(
            f"Form [[{2 * a}, {b}], [{b}, {2 * c}]] is not positive definite",
            "NOT_POSITIVE_DEFINITE",
            {"a": a, "b": b, "c": c},
        )


class IndexNotInKError(DomainError):
    """Raised when a plane index is outside the four-element index set."""

    def __init__(self, name: str):
        super().__init__(f"Index {name} is not one of J1..J4", "INDEX_NOT_IN_K")


class KernelRankUnexpectedError(VerificationError):
    """Raised when a bordered Gram matrix does not have a one-dimensional kernel."""

    def __init__(self, label: str, dimension: int):
        super().__init__(
            f"Kernel of bordered Gram for {label} has dimension {dimension}",
            "KERNEL_RANK_UNEXPECTED",
            {"dimension": dimension},
        )


class NonIntegralKernelError(VerificationError):
    """Raised when the primitive kernel vector cannot be normalised to last coordinate 1."""

    def __init__(self, label: str, last: int):
        super().__init__(
            f"Kernel vector for {label} ends in {last}, not 1",
            "NON_INTEGRAL_KERNEL",
            {"last": last},
        )


class GoldenMismatchError(VerificationError):
    """Raised when a recomputed matrix differs from its golden copy."""
    pass
