"""
Report models for command output.

Every report knows how to print itself as plain text and as CSV rows; JSON
comes from pydantic. Integers and rationals are decimal strings in JSON so
consumers never lose precision.
"""
from __future__ import annotations

from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ...core.domain.matrices import IntMatrix
from ...core.domain.number_field import NumberFieldElement
from ...core.services.lattice_tools import QuadraticSurd

CsvRows = List[List[str]]


def int_rows(matrix: IntMatrix) -> List[List[str]]:
    return [[str(v) for v in row] for row in matrix.to_rows()]


def bracket(rows: Sequence[Sequence[str]]) -> str:
    return "[" + ",".join("[" + ",".join(row) + "]" for row in rows) + "]"


class FieldElementModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: str
    coefficients: List[str]
    text: str

    @classmethod
    def from_element(cls, value: NumberFieldElement) -> "FieldElementModel":
        return cls(
            spec=value.spec.label,
            coefficients=[str(c) for c in value.coefficients],
            text=str(value),
        )


class SurdModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    rational: str
    surd: str
    radicand: int
    text: str

    @classmethod
    def from_surd(cls, value: QuadraticSurd) -> "SurdModel":
        return cls(rational=str(value.p), surd=str(value.q), radicand=value.D, text=str(value))


class Report(BaseModel):
    """Base class for command results."""

    model_config = ConfigDict(frozen=True)

    def render_plain(self) -> str:
        raise NotImplementedError

    def csv_rows(self) -> CsvRows:
        raise NotImplementedError


class CountReport(Report):
    lambda1: str
    lambda2: str
    field: str
    j1: FieldElementModel
    j2: FieldElementModel
    equivalent: bool
    aut_order: Optional[int] = None
    plane_count: int
    rank2: Optional[int] = None
    rank3: Optional[int] = None

    def render_plain(self) -> str:
        lines = [
            f"j1={self.j1.text}",
            f"j2={self.j2.text}",
            f"equivalent={'true' if self.equivalent else 'false'}",
        ]
        if self.aut_order is not None:
            lines.append(f"aut_order={self.aut_order}")
        if self.rank2 is not None:
            lines.append(f"rank2={self.rank2} rank3={self.rank3}")
        lines.append(f"planes={self.plane_count}")
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        return [
            ["lambda1", "lambda2", "j1", "j2", "equivalent", "aut_order", "planes"],
            [
                self.lambda1,
                self.lambda2,
                self.j1.text,
                self.j2.text,
                str(self.equivalent).lower(),
                "" if self.aut_order is None else str(self.aut_order),
                str(self.plane_count),
            ],
        ]


class PlaneModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    rank: int
    equations: List[List[List[str]]] = Field(
        description="Canonical reduced rows of [A | -B], each entry a coefficient array"
    )
    text: List[List[str]]


class PlanesReport(Report):
    field: str
    total: int
    rank2: int
    rank3: int
    planes: List[PlaneModel]

    def render_plain(self) -> str:
        lines = [f"planes={self.total} rank2={self.rank2} rank3={self.rank3}"]
        for plane in self.planes:
            rows = "; ".join(" ".join(row) for row in plane.text)
            lines.append(f"rank{plane.rank}: {rows}")
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        header = ["index", "rank"] + [f"e{r}{c}" for r in range(3) for c in range(6)]
        rows = [header]
        for i, plane in enumerate(self.planes):
            rows.append([str(i), str(plane.rank)] + [e for row in plane.text for e in row])
        return rows


class GramReport(Report):
    size: int
    determinant: str
    matrix: List[List[str]]

    def render_plain(self) -> str:
        width = max(len(e) for row in self.matrix for e in row)
        lines = [" ".join(e.rjust(width) for e in row) for row in self.matrix]
        lines.append(f"det={self.determinant}")
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        return [list(row) for row in self.matrix]


class CellDiffModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    row: int
    col: int
    expected: str
    actual: str


class AppendixReport(Report):
    ok: bool
    size: int
    determinant: str
    mismatches: List[CellDiffModel]

    def render_plain(self) -> str:
        shape = f"{self.size}x{self.size}"
        if self.ok:
            return f"{shape} OK, det={self.determinant}"
        lines = [f"{shape} MISMATCH in {len(self.mismatches)} cells, det={self.determinant}"]
        lines.extend(
            f"({d.row},{d.col}): expected {d.expected}, got {d.actual}" for d in self.mismatches
        )
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        rows = [["row", "col", "expected", "actual"]]
        rows.extend([str(d.row), str(d.col), d.expected, d.actual] for d in self.mismatches)
        return rows


class DecompositionEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    coefficients: List[str]


class DecompositionReport(Report):
    entries: List[DecompositionEntry]

    def render_plain(self) -> str:
        return "\n".join(f"{e.label}: {' '.join(e.coefficients)}" for e in self.entries)

    def csv_rows(self) -> CsvRows:
        size = len(self.entries[0].coefficients) if self.entries else 0
        rows = [["label"] + [f"m{i + 1}" for i in range(size)]]
        rows.extend([e.label] + e.coefficients for e in self.entries)
        return rows


class TorsionReport(Report):
    torsion_free: bool
    invariant_factors: List[str]
    sub_table_columns: List[str]
    sub_table: List[List[str]]
    sub_table_det: str

    def render_plain(self) -> str:
        verdict = "true" if self.torsion_free else "false"
        lines = [f"torsion-free: {verdict}; invariants {','.join(self.invariant_factors)}"]
        lines.append("sub-table on " + ", ".join(self.sub_table_columns) + ":")
        lines.extend("  " + " ".join(e.rjust(3) for e in row) for row in self.sub_table)
        lines.append(f"sub-table det={self.sub_table_det}")
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        rows = [["relation"] + self.sub_table_columns]
        rows.extend([f"J{i + 1}"] + row for i, row in enumerate(self.sub_table))
        return rows


class LatticeReportModel(Report):
    rank: int
    determinant: str
    snf_diagonal: List[str]
    discriminant_group: List[str]
    definiteness: str

    def render_plain(self) -> str:
        return (
            f"rank={self.rank} det={self.determinant} "
            f"snf={','.join(self.snf_diagonal)} definiteness={self.definiteness}"
        )

    def csv_rows(self) -> CsvRows:
        return [
            ["rank", "det", "snf", "definiteness"],
            [str(self.rank), self.determinant, " ".join(self.snf_diagonal), self.definiteness],
        ]


class ImPhiReport(Report):
    degree: int
    size: int
    determinant: str
    matrix: List[List[str]]

    def render_plain(self) -> str:
        lines = [f"d={self.degree} size={self.size} det={self.determinant}"]
        lines.extend(" ".join(e.rjust(3) for e in row) for row in self.matrix)
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        return [list(row) for row in self.matrix]


class CertifyReport(Report):
    ok: bool
    congruent: bool
    im_phi_det: str
    fermat_det: str
    complement_ok: bool
    fermat_positive_definite: bool
    base_change: List[List[str]]

    def render_plain(self) -> str:
        def flag(value: bool) -> str:
            return "true" if value else "false"

        return "\n".join(
            [
                f"Im(phi) ~ U(3)+U(3): {flag(self.congruent)}",
                f"|det Im(phi)|={self.im_phi_det.lstrip('-')} |det M|={self.fermat_det.lstrip('-')}",
                f"complement check: {flag(self.complement_ok)}",
                f"M positive definite: {flag(self.fermat_positive_definite)}",
                f"certified: {flag(self.ok)}",
            ]
        )

    def csv_rows(self) -> CsvRows:
        return [
            ["congruent", "im_phi_det", "fermat_det", "complement_ok", "positive_definite", "ok"],
            [
                str(self.congruent).lower(),
                self.im_phi_det,
                self.fermat_det,
                str(self.complement_ok).lower(),
                str(self.fermat_positive_definite).lower(),
                str(self.ok).lower(),
            ],
        ]


class ShiodaMitaniReport(Report):
    a: int
    b: int
    c: int
    discriminant: str
    tau1: SurdModel
    tau2: SurdModel
    twisted: List[List[str]]

    def render_plain(self) -> str:
        return f"tau1={self.tau1.text} tau2={self.tau2.text}; T(-3)={bracket(self.twisted)}"

    def csv_rows(self) -> CsvRows:
        return [
            ["a", "b", "c", "discriminant", "tau1", "tau2", "twisted"],
            [
                str(self.a),
                str(self.b),
                str(self.c),
                self.discriminant,
                self.tau1.text,
                self.tau2.text,
                bracket(self.twisted),
            ],
        ]


class FlexRowModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    point: List[FieldElementModel]
    tangent_coefficients: List[FieldElementModel]
    residue_constant: Optional[FieldElementModel] = None
    verified: bool


class FlexTableReport(Report):
    lambda_: str = Field(alias="lambda")
    field: str
    rows: List[FlexRowModel]

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    def render_plain(self) -> str:
        lines = []
        for row in self.rows:
            point = ":".join(e.text for e in row.point)
            tangent = ",".join(e.text for e in row.tangent_coefficients)
            status = "verified" if row.verified else "FAILED"
            lines.append(f"[{point}] tangent ({tangent}) {status}")
        return "\n".join(lines)

    def csv_rows(self) -> CsvRows:
        rows = [["x0", "x1", "x2", "a0", "a1", "a2", "verified"]]
        for row in self.rows:
            rows.append(
                [e.text for e in row.point]
                + [e.text for e in row.tangent_coefficients]
                + [str(row.verified).lower()]
            )
        return rows


class AutOrderReport(Report):
    lambda_: str = Field(alias="lambda")
    field: str
    j: FieldElementModel
    order: int
    closure_order: Optional[int] = None

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    def render_plain(self) -> str:
        line = f"j={self.j.text} |Aut|={self.order}"
        if self.closure_order is not None:
            line += f" closure={self.closure_order}"
        return line

    def csv_rows(self) -> CsvRows:
        return [
            ["lambda", "j", "order", "closure_order"],
            [
                self.lambda_,
                self.j.text,
                str(self.order),
                "" if self.closure_order is None else str(self.closure_order),
            ],
        ]
