"""Sparse multivariate polynomials over a number field."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import DimensionMismatchError, InconsistentSystemError, MixedFieldError
from .matrices import FieldMatrix
from .number_field import NumberFieldElement, NumberFieldSpec, Scalar

Exponent = Tuple[int, ...]


def _term_key(exponent: Exponent) -> Tuple[int, Exponent]:
    # graded lex, highest first: larger total degree, then larger leading exponents
    return (-sum(exponent), tuple(-e for e in exponent))


@dataclass(frozen=True, eq=False)
class MultiPoly:
    """A polynomial as a map from exponent tuples to nonzero coefficients."""

    spec: NumberFieldSpec
    nvars: int
    terms: Mapping[Exponent, NumberFieldElement]

    def __post_init__(self) -> None:
        clean: Dict[Exponent, NumberFieldElement] = {}
        for exponent, coefficient in self.terms.items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != self.nvars or any(e < 0 for e in exponent):
                raise DimensionMismatchError(
                    f"Exponent {exponent} does not fit {self.nvars} variables"
                )
            value = self.spec.coerce(coefficient)
            if value:
                clean[exponent] = value
        object.__setattr__(self, "terms", MappingProxyType(clean))

    # Constructors

    @classmethod
    def zero(cls, spec: NumberFieldSpec, nvars: int) -> "MultiPoly":
        return cls(spec, nvars, {})

    @classmethod
    def constant(cls, spec: NumberFieldSpec, nvars: int, value: Scalar) -> "MultiPoly":
        return cls(spec, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, spec: NumberFieldSpec, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise DimensionMismatchError(f"Variable {index} out of range for {nvars} variables")
        exponent = tuple(int(i == index) for i in range(nvars))
        return cls(spec, nvars, {exponent: 1})

    @classmethod
    def linear_form(cls, spec: NumberFieldSpec, coefficients: Sequence[Scalar]) -> "MultiPoly":
        n = len(coefficients)
        return cls(
            spec,
            n,
            {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coefficients)},
        )

    # Inspection

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: Exponent) -> NumberFieldElement:
        return self.terms.get(tuple(exponent), self.spec.zero())

    def sorted_terms(self) -> Iterator[Tuple[Exponent, NumberFieldElement]]:
        for exponent in sorted(self.terms, key=_term_key):
            yield exponent, self.terms[exponent]

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def linear_coefficients(self) -> Tuple[NumberFieldElement, ...]:
        """Coefficient vector of a linear form."""
        if not self.is_homogeneous() or self.degree() > 1 or self.degree() == 0:
            raise DimensionMismatchError("Polynomial is not a linear form")
        return tuple(
            self.coefficient(tuple(int(i == j) for j in range(self.nvars)))
            for i in range(self.nvars)
        )

    # Arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if other.spec != self.spec:
            raise MixedFieldError(self.spec.label, other.spec.label)
        if other.nvars != self.nvars:
            raise DimensionMismatchError(
                f"Cannot combine polynomials in {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other: object) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            return MultiPoly.constant(self.spec, self.nvars, other)
        return None

    def __add__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in rhs.terms.items():
            terms[exponent] = terms.get(exponent, self.spec.zero()) + coefficient
        return MultiPoly(self.spec, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.spec, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: Dict[Exponent, NumberFieldElement] = {}
        zero = self.spec.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in rhs.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, zero) + c1 * c2
        return MultiPoly(self.spec, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not defined")
        result = MultiPoly.constant(self.spec, self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return (
                self.spec == other.spec
                and self.nvars == other.nvars
                and dict(self.terms) == dict(other.terms)
            )
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec.label, self.nvars, frozenset(self.terms.items())))

    # Evaluation and substitution

    def evaluate(self, point: Sequence[Scalar]) -> NumberFieldElement:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"Point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        values = [self.spec.coerce(p) for p in point]
        total = self.spec.zero()
        for exponent, coefficient in self.terms.items():
            term = coefficient
            for value, e in zip(values, exponent):
                if e:
                    term = term * value**e
            total = total + term
        return total

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f"Need {self.nvars} images, got {len(images)}"
            )
        if not images:
            return self
        target = images[0]
        if target.spec != self.spec:
            raise MixedFieldError(self.spec.label, target.spec.label)
        for image in images:
            target._check(image)
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        result = MultiPoly.zero(self.spec, target.nvars)
        for exponent, coefficient in self.terms.items():
            term = MultiPoly.constant(self.spec, target.nvars, coefficient)
            for i, e in enumerate(exponent):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def embed(self, nvars: int, offset: int) -> "MultiPoly":
        """Rename variable i to variable offset + i inside ``nvars`` variables."""
        if offset < 0 or offset + self.nvars > nvars:
            raise DimensionMismatchError("Embedding does not fit the target variables")
        return MultiPoly(
            self.spec,
            nvars,
            {
                (0,) * offset + e + (0,) * (nvars - offset - self.nvars): c
                for e, c in self.terms.items()
            },
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for exponent, coefficient in self.sorted_terms():
            monomial = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exponent) if e
            )
            coeff = str(coefficient)
            if not monomial:
                parts.append(f"({coeff})")
            elif coefficient == 1:
                parts.append(monomial)
            else:
                parts.append(f"({coeff})*{monomial}")
        return " + ".join(parts)


def substitute_linear(form: MultiPoly, g: FieldMatrix) -> MultiPoly:
    """Return F(g x), each variable x_i replaced by sum_j g[i, j] x_j."""
    if g.rows != form.nvars or g.cols != form.nvars:
        raise DimensionMismatchError(
            f"Substitution matrix is {g.rows}x{g.cols}, form has {form.nvars} variables"
        )
    if g.spec != form.spec:
        raise MixedFieldError(form.spec.label, g.spec.label)
    images = [MultiPoly.linear_form(form.spec, g.row(i)) for i in range(g.rows)]
    return form.compose(images)


def free_columns(solved: FieldMatrix) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Pivot and free columns of a reduced row echelon matrix.

    Raises InconsistentSystemError when ``solved`` is not in reduced form.
    """
    pivots: List[int] = []
    for i in range(solved.rows):
        row = solved.row(i)
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            continue
        if row[lead] != 1 or (pivots and lead <= pivots[-1]):
            raise InconsistentSystemError("Constraint matrix is not in reduced row echelon form")
        if any(solved[k, lead] for k in range(solved.rows) if k != i):
            raise InconsistentSystemError("Pivot column is not cleared")
        pivots.append(lead)
    free = tuple(j for j in range(solved.cols) if j not in pivots)
    return tuple(pivots), free


def restrict_to_subspace(form: MultiPoly, solved: FieldMatrix) -> MultiPoly:
    """Restrict F to the kernel of a reduced row echelon system.

    The result is a polynomial in the free variables of ``solved``, in their
    original order; each pivot variable is replaced by minus its row's free part.
    """
    if solved.cols != form.nvars:
        raise DimensionMismatchError(
            f"System has {solved.cols} columns, form has {form.nvars} variables"
        )
    pivots, free = free_columns(solved)
    spec = form.spec
    n_free = len(free)
    position = {column: k for k, column in enumerate(free)}
    images: List[Optional[MultiPoly]] = [None] * form.nvars
    for column in free:
        images[column] = MultiPoly.variable(spec, n_free, position[column])
    nonzero_rows = [i for i in range(solved.rows) if any(solved.row(i))]
    for i, pivot in zip(nonzero_rows, pivots):
        images[pivot] = MultiPoly.linear_form(spec, [-solved[i, column] for column in free])
    return form.compose(images)  # type: ignore[arg-type]


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form in (x, y): ``coefficients[i]`` multiplies x^i y^(d-i)."""

    spec: NumberFieldSpec
    coefficients: Tuple[NumberFieldElement, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise DimensionMismatchError("A binary form needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(self.spec.coerce(c) for c in self.coefficients)
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_poly(cls, poly: MultiPoly, degree: Optional[int] = None) -> "BinaryForm":
        if poly.nvars != 2:
            raise DimensionMismatchError("A binary form has exactly two variables")
        if not poly.is_homogeneous():
            raise DimensionMismatchError("A binary form must be homogeneous")
        d = poly.degree() if degree is None else degree
        if d < 0:
            raise DimensionMismatchError("Degree of the zero form must be given")
        return cls(poly.spec, tuple(poly.coefficient((i, d - i)) for i in range(d + 1)))

    def to_poly(self) -> MultiPoly:
        d = self.degree
        return MultiPoly(self.spec, 2, {(i, d - i): c for i, c in enumerate(self.coefficients)})

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def evaluate(self, x: Scalar, y: Scalar) -> NumberFieldElement:
        return self.to_poly().evaluate((x, y))

    def __str__(self) -> str:
        return str(self.to_poly()).replace("x0", "x").replace("x1", "y")


def dth_power_root(phi: BinaryForm) -> Optional[Tuple[NumberFieldElement, BinaryForm]]:
    """Write phi = c * l^d with l monic in its leading variable, if possible.

    With c_d the x^d coefficient: when c_d != 0, l = x + k y where k = c_{d-1} / (d c_d);
    when c_d = 0 the only candidate is c_0 y^d. Returns None when phi is not a
    d-th power (the zero form included).
    """
    d = phi.degree
    spec = phi.spec
    top = phi.coefficients[d]
    if d == 0:
        return (phi.coefficients[0], phi) if top else None
    if top:
        k = phi.coefficients[d - 1] / (d * top)
        ell = BinaryForm(spec, (k, 1))
        expansion = tuple(math.comb(d, i) * top * k ** (d - i) for i in range(d + 1))
        if expansion == phi.coefficients:
            return top, ell
        return None
    if phi.coefficients[0] and not any(phi.coefficients[1:]):
        return phi.coefficients[0], BinaryForm(spec, (1, 0))
    return None
