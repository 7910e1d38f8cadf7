"""Parsing and validation of command-line values."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError, field_validator

from ...core.domain.matrices import IntMatrix
from ...core.domain.number_field import (
    PRESETS,
    Q_ZETA3,
    Q_ZETA12,
    NumberFieldElement,
    NumberFieldSpec,
)
from ...core.exceptions import FieldTooSmallError, ParseError, UsageError

_RATIONAL = r"\d+(?:/\d+)?"
_LAMBDA = re.compile(
    rf"^(?P<a>[+-]?{_RATIONAL})?"
    rf"(?:(?P<sign>[+-])?(?:(?P<b>{_RATIONAL})\*?)?sqrt\(?(?P<n>-?3)\)?)?$"
)


class LambdaParser:
    """Parses Hesse parameters: integers, p/q, and a+b*sqrtN with N in {3, -3}."""

    @staticmethod
    def has_surd(text: str) -> bool:
        return "sqrt" in text.replace(" ", "").lower()

    @staticmethod
    def parse(text: str, spec: NumberFieldSpec) -> NumberFieldElement:
        """
        Parse a parameter into ``spec``.

        Args:
            text: Parameter text such as ``2``, ``-3/2``, ``1+sqrt3`` or ``1-2*sqrt(-3)``
            spec: Field the value should live in

        Returns:
            The parsed element
        """
        compact = text.replace(" ", "").lower()
        match = _LAMBDA.match(compact)
        if not compact or match is None:
            raise ParseError(f"Cannot parse parameter {text!r}", "BAD_LAMBDA")
        a, sign, b, n = match.group("a", "sign", "b", "n")
        if a is None and n is None:
            raise ParseError(f"Cannot parse parameter {text!r}", "BAD_LAMBDA")
        if a is not None and n is not None and sign is None:
            raise ParseError(f"Missing sign before the surd in {text!r}", "BAD_LAMBDA")
        try:
            value = spec.coerce(Fraction(a) if a is not None else 0)
            if n is not None:
                coefficient = Fraction(b) if b is not None else Fraction(1)
                if sign == "-":
                    coefficient = -coefficient
                root = spec.sqrt3() if n == "3" else spec.sqrt_minus3()
                value = value + coefficient * root
        except ZeroDivisionError:
            raise ParseError(f"Zero denominator in {text!r}", "BAD_LAMBDA")
        except FieldTooSmallError as e:
            raise UsageError(f"Field {spec.label} cannot hold {text!r}: {e.message}")
        return value


def resolve_field(texts: Sequence[str], preset: Optional[str] = None) -> NumberFieldSpec:
    """Pick the field for a set of parameters.

    Surds go to Q(zeta12); everything else to Q(zeta3), which the flex and
    automorphism computations need. An explicit preset wins when it is large enough.
    """
    if preset is not None:
        if preset not in PRESETS:
            raise UsageError(f"Unknown field preset {preset!r}; choose from {', '.join(PRESETS)}")
        return PRESETS[preset]
    if any(LambdaParser.has_surd(t) for t in texts):
        return Q_ZETA12
    return Q_ZETA3


def require_cube_roots(spec: NumberFieldSpec, command: str) -> None:
    if spec.roots_of_unity % 3:
        raise UsageError(f"{command} needs cube roots of unity; {spec.label} is too small")


class MatrixInput(BaseModel):
    """An integer matrix file: ``{"matrix": [[...], ...]}`` or a bare list of rows."""

    matrix: List[List[Union[int, str]]]

    @field_validator("matrix")
    @classmethod
    def validate_rectangular(cls, rows: List[List[Union[int, str]]]) -> List[List[Union[int, str]]]:
        if not rows:
            raise ValueError("Matrix has no rows")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("Matrix rows have different lengths")
        return rows

    def to_int_matrix(self) -> IntMatrix:
        rows = []
        for row in self.matrix:
            values = []
            for entry in row:
                value = Fraction(entry)
                if value.denominator != 1:
                    raise ParseError(f"Entry {entry} is not an integer", "NOT_INTEGRAL")
                values.append(int(value))
            rows.append(values)
        return IntMatrix.from_rows(rows)


def load_matrix_file(path: Path) -> IntMatrix:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}", "BAD_JSON")
    if isinstance(data, list):
        data = {"matrix": data}
    try:
        return MatrixInput.model_validate(data).to_int_matrix()
    except (ValidationError, ValueError) as e:
        raise ParseError(f"{path} does not hold a matrix: {e}", "BAD_MATRIX")
