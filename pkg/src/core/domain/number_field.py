"""Exact arithmetic in small cyclotomic number fields.

Elements are polynomials in one generator with rational coefficients, reduced
modulo a monic irreducible polynomial. Rationals are :class:`fractions.Fraction`
throughout, so every comparison in the package is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..exceptions import (
    FieldTooSmallError,
    MixedFieldError,
    NotInvertibleError,
    ZeroInverseError,
)

Rational = Fraction
Scalar = Union[int, Fraction, "NumberFieldElement"]


def _trim(poly: List[Fraction]) -> List[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]
    return _trim(out)


def _poly_divmod(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    """Long division of coefficient lists (lowest degree first)."""
    rem = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, coeff in enumerate(b):
            rem[shift + i] -= factor * coeff
        _trim(rem)
    return _trim(quot), rem


def _poly_xgcd(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    """Return (g, s) with s*a = g (mod b) and g the monic gcd of a and b."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0: List[Fraction] = [Fraction(1)]
    s1: List[Fraction] = []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


@dataclass(frozen=True)
class NumberFieldSpec:
    """A number field Q[t]/(m(t)).

    ``modulus`` lists the coefficients of m, lowest degree first; m must be monic.
    ``roots_of_unity`` is the order N of a known root of unity whose coefficient
    vector is ``unity_generator``; it lets the field hand out d-th roots of unity
    for every d dividing N.
    """

    modulus: Tuple[Fraction, ...]
    label: str
    generator: str = "t"
    roots_of_unity: int = 2
    unity_generator: Tuple[Fraction, ...] = (Fraction(-1),)

    def __post_init__(self) -> None:
        modulus = tuple(Fraction(c) for c in self.modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError(f"Modulus of {self.label} must be monic of degree >= 1")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(
            self, "unity_generator", tuple(Fraction(c) for c in self.unity_generator)
        )

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def element(self, coefficients: Iterable[Union[int, Fraction]]) -> "NumberFieldElement":
        return NumberFieldElement(self, tuple(Fraction(c) for c in coefficients))

    def zero(self) -> "NumberFieldElement":
        return self.element(())

    def one(self) -> "NumberFieldElement":
        return self.element((1,))

    def gen(self) -> "NumberFieldElement":
        return self.element((0, 1))

    def coerce(self, value: Scalar) -> "NumberFieldElement":
        """Lift an int or Fraction into this field; elements must already belong to it."""
        if isinstance(value, NumberFieldElement):
            if value.spec != self:
                raise MixedFieldError(value.spec.label, self.label)
            return value
        if isinstance(value, (int, Fraction)):
            return self.element((value,))
        raise TypeError(f"Cannot coerce {type(value).__name__} into {self.label}")

    def roots_of_unity_of_order(self, d: int) -> List["NumberFieldElement"]:
        """All d-th roots of unity, as powers of a primitive one starting with 1."""
        if d < 1:
            raise ValueError("Order of a root of unity must be positive")
        if self.roots_of_unity % d:
            raise FieldTooSmallError(self.label, f"primitive {d}-th roots of unity")
        primitive = self.element(self.unity_generator) ** (self.roots_of_unity // d)
        return [primitive**k for k in range(d)]

    def omega(self) -> "NumberFieldElement":
        """A primitive cube root of unity."""
        return self.roots_of_unity_of_order(3)[1]

    def sqrt3(self) -> "NumberFieldElement":
        """The square root of 3, written as zeta12 + zeta12^-1."""
        zeta = self.roots_of_unity_of_order(12)[1]
        return zeta + zeta.inverse()

    def sqrt_minus3(self) -> "NumberFieldElement":
        """The square root of -3, written as 2*omega + 1."""
        return 2 * self.omega() + 1

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, eq=False)
class NumberFieldElement:
    """An element of a :class:`NumberFieldSpec`, stored reduced and zero-padded."""

    spec: NumberFieldSpec
    coefficients: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        coeffs = _trim([Fraction(c) for c in self.coefficients])
        if len(coeffs) > self.spec.degree:
            _, coeffs = _poly_divmod(coeffs, self.spec.modulus)
        coeffs = coeffs + [Fraction(0)] * (self.spec.degree - len(coeffs))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # Coercion

    def _other(self, other: object) -> Optional["NumberFieldElement"]:
        if isinstance(other, NumberFieldElement):
            if other.spec != self.spec:
                raise MixedFieldError(self.spec.label, other.spec.label)
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.element((other,))
        return None

    # Arithmetic

    def __add__(self, other: object) -> "NumberFieldElement":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        return NumberFieldElement(
            self.spec, tuple(a + b for a, b in zip(self.coefficients, rhs.coefficients))
        )

    __radd__ = __add__

    def __neg__(self) -> "NumberFieldElement":
        return NumberFieldElement(self.spec, tuple(-a for a in self.coefficients))

    def __sub__(self, other: object) -> "NumberFieldElement":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "NumberFieldElement":
        lhs = self._other(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "NumberFieldElement":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        return NumberFieldElement(
            self.spec, tuple(_poly_mul(self.coefficients, rhs.coefficients))
        )

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if not self:
            raise ZeroInverseError(self.spec.label)
        g, s = _poly_xgcd(self.coefficients, self.spec.modulus)
        if len(g) > 1:
            raise NotInvertibleError(self.spec.label, len(g) - 1)
        return NumberFieldElement(self.spec, tuple(s))

    def __truediv__(self, other: object) -> "NumberFieldElement":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "NumberFieldElement":
        lhs = self._other(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "NumberFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NumberFieldElement):
            return self.spec == other.spec and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        # rationals compare equal to int and Fraction, so they must hash alike
        if self.is_rational():
            return hash(self.coefficients[0])
        return hash((self.spec.label, self.coefficients))

    def __bool__(self) -> bool:
        return any(self.coefficients)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    # Rendering

    def __str__(self) -> str:
        parts: List[str] = []
        for power, coeff in enumerate(self.coefficients):
            if coeff == 0:
                continue
            if power == 0:
                monomial = ""
            elif power == 1:
                monomial = self.spec.generator
            else:
                monomial = f"{self.spec.generator}^{power}"
            if not monomial:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(monomial)
            elif coeff == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{coeff}*{monomial}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"NumberFieldElement({self.spec.label}: {self})"


def nf_inv(x: NumberFieldElement) -> NumberFieldElement:
    """Inverse of ``x`` in its field."""
    return x.inverse()


def _integer_root(n: int, d: int) -> Optional[int]:
    """Exact non-negative integer d-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 0, 1
    while hi**d <= n:
        hi *= 2
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**d <= n:
            lo = mid
        else:
            hi = mid
    return lo if lo**d == n else None


def rational_dth_root(q: Fraction, d: int) -> Optional[Fraction]:
    """Return a rational r with r**d == q, or None when no such r exists.

    For odd d the root carries the sign of q; for even d the non-negative root
    is returned and negative q has none.
    """
    q = Fraction(q)
    if d < 1:
        raise ValueError("Root order must be positive")
    if q < 0 and d % 2 == 0:
        return None
    sign = -1 if q < 0 else 1
    num = _integer_root(abs(q.numerator), d)
    den = _integer_root(q.denominator, d)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


# Presets

Q = NumberFieldSpec(modulus=(-1, 1), label="Q", generator="1")

# omega = w with w^2 + w + 1 = 0; the primitive sixth root -w^2 equals 1 + w
Q_ZETA3 = NumberFieldSpec(
    modulus=(1, 1, 1),
    label="Q(zeta3)",
    generator="w",
    roots_of_unity=6,
    unity_generator=(1, 1),
)

# z = zeta12 with z^4 - z^2 + 1 = 0
Q_ZETA12 = NumberFieldSpec(
    modulus=(1, 0, -1, 0, 1),
    label="Q(zeta12)",
    generator="z",
    roots_of_unity=12,
    unity_generator=(0, 1),
)

PRESETS = {"Q": Q, "Qzeta3": Q_ZETA3, "Qzeta12": Q_ZETA12}


def lift(value: Scalar, spec: NumberFieldSpec) -> NumberFieldElement:
    """Move a rational value (or a rational element of another field) into ``spec``."""
    if isinstance(value, NumberFieldElement) and value.spec != spec:
        if not value.is_rational():
            raise MixedFieldError(value.spec.label, spec.label)
        return spec.element((value.rational_value(),))
    return spec.coerce(value)
