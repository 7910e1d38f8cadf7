"""Command handlers: parse arguments, call the services, build a report.

Each handler returns the report and the exit code. Errors propagate as
SplitCubicError subclasses and are mapped to exit codes by the entry point.
"""
from __future__ import annotations

import argparse
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from ...application import CertificationService
from ...core.domain.matrices import det_bareiss
from ...core.logging import get_logger
from ...core.services.ds_module import SUB_TABLE_MASKS, monomial_name
from ...core.services.fermat_catalog import FERMAT_FIELD, parse_index
from ...core.services.hesse_curves import (
    aut_group,
    aut_order,
    flex_table,
    hesse_form,
    j_invariant,
    verify_flex,
)
from ...core.services.lattice_tools import (
    GramMatrix,
    im_phi_gram,
    lattice_invariants,
    shioda_mitani,
)
from ...core.services.plane_geometry import Plane, classify_rank, count_planes
from .schemas import (
    AppendixReport,
    AutOrderReport,
    CellDiffModel,
    CertifyReport,
    CountReport,
    DecompositionEntry,
    DecompositionReport,
    FieldElementModel,
    FlexRowModel,
    FlexTableReport,
    GramReport,
    ImPhiReport,
    LatticeReportModel,
    PlaneModel,
    PlanesReport,
    Report,
    ShiodaMitaniReport,
    SurdModel,
    TorsionReport,
    int_rows,
)
from .validators import LambdaParser, load_matrix_file, require_cube_roots, resolve_field

logger = get_logger("cli")

Result = Tuple[Report, int]
Handler = Callable[[argparse.Namespace], Result]

# the Hesse pencil carries nine flexes
HESSE_FLEXES = 9


def _service(args: argparse.Namespace) -> CertificationService:
    golden_dir = getattr(args, "golden_dir", None)
    return CertificationService(golden_dir=Path(golden_dir) if golden_dir else None)


def _plane_model(plane: Plane) -> PlaneModel:
    rows = plane.canonical.to_rows()
    return PlaneModel(
        rank=int(classify_rank(plane)),
        equations=[[[str(c) for c in e.coefficients] for e in row] for row in rows],
        text=[[str(e) for e in row] for row in rows],
    )


def handle_count(args: argparse.Namespace) -> Result:
    spec = resolve_field([args.l1, args.l2], args.field)
    lam1 = LambdaParser.parse(args.l1, spec)
    lam2 = LambdaParser.parse(args.l2, spec)
    j1, j2 = j_invariant(lam1), j_invariant(lam2)
    equivalent = j1 == j2
    order = aut_order(lam1) if equivalent else None
    total = count_planes(3, HESSE_FLEXES, HESSE_FLEXES, order, equivalent)

    rank2 = rank3 = None
    if args.enumerate:
        require_cube_roots(spec, "count --enumerate")
        enumeration = _service(args).plane_census(lam1, lam2)
        rank2, rank3 = len(enumeration.rank2), len(enumeration.rank3)

    logger.info("count_finished", lam1=args.l1, lam2=args.l2, planes=total)
    report = CountReport(
        lambda1=args.l1,
        lambda2=args.l2,
        field=spec.label,
        j1=FieldElementModel.from_element(j1),
        j2=FieldElementModel.from_element(j2),
        equivalent=equivalent,
        aut_order=order,
        plane_count=total,
        rank2=rank2,
        rank3=rank3,
    )
    return report, 0


def handle_fermat_planes(args: argparse.Namespace) -> Result:
    rank2, rank3 = _service(args).fermat_planes()
    planes = sorted(rank2 + rank3, key=Plane.sort_key)
    report = PlanesReport(
        field=FERMAT_FIELD.label,
        total=len(planes),
        rank2=len(rank2),
        rank3=len(rank3),
        planes=[_plane_model(p) for p in planes],
    )
    return report, 0


def handle_fermat_gram(args: argparse.Namespace) -> Result:
    gram = _service(args).basis_gram()
    return GramReport(size=gram.rows, determinant=str(det_bareiss(gram)), matrix=int_rows(gram)), 0


def handle_fermat_verify_appendix(args: argparse.Namespace) -> Result:
    verification = _service(args).verify_appendix()
    report = AppendixReport(
        ok=verification.ok,
        size=verification.size,
        determinant=str(verification.determinant),
        mismatches=[
            CellDiffModel(row=d.row, col=d.col, expected=str(d.expected), actual=str(d.actual))
            for d in verification.mismatches
        ],
    )
    return report, 0 if verification.ok else 1


def handle_fermat_decompose(args: argparse.Namespace) -> Result:
    service = _service(args)
    if args.index:
        records = [service.decompose_label(parse_index(args.index))]
    else:
        records = service.decomposition_sweep()
    entries = [
        DecompositionEntry(label=r.label.label, coefficients=[str(m) for m in r.coefficients])
        for r in records
    ]
    return DecompositionReport(entries=entries), 0


def handle_ds_torsion(args: argparse.Namespace) -> Result:
    certificate = _service(args).torsion(args.scale)
    report = TorsionReport(
        torsion_free=certificate.is_torsion_free,
        invariant_factors=[str(f) for f in certificate.invariant_factors],
        sub_table_columns=[monomial_name(mask) for mask in SUB_TABLE_MASKS],
        sub_table=int_rows(certificate.sub_table),
        sub_table_det=str(certificate.sub_table_det),
    )
    return report, 0


def handle_lattice_invariants(args: argparse.Namespace) -> Result:
    gram = GramMatrix(load_matrix_file(Path(args.input)))
    report = lattice_invariants(gram)
    model = LatticeReportModel(
        rank=report.rank,
        determinant=str(report.determinant),
        snf_diagonal=[str(d) for d in report.snf_diagonal],
        discriminant_group=[str(d) for d in report.discriminant_group],
        definiteness=report.definiteness.value,
    )
    return model, 0


def handle_lattice_im_phi(args: argparse.Namespace) -> Result:
    gram = im_phi_gram(args.degree)
    report = lattice_invariants(gram)
    model = ImPhiReport(
        degree=args.degree,
        size=gram.size,
        determinant=str(report.determinant),
        matrix=int_rows(gram.matrix),
    )
    return model, 0


def handle_lattice_certify(args: argparse.Namespace) -> Result:
    certificate = _service(args).transcendental_certificate()
    report = CertifyReport(
        ok=certificate.ok,
        congruent=certificate.congruent,
        im_phi_det=str(certificate.im_phi_det),
        fermat_det=str(certificate.fermat_det),
        complement_ok=certificate.complement_ok,
        fermat_positive_definite=certificate.fermat_positive_definite,
        base_change=int_rows(certificate.base_change),
    )
    return report, 0 if certificate.ok else 1


def handle_shioda_mitani(args: argparse.Namespace) -> Result:
    result = shioda_mitani(args.a, args.b, args.c)
    report = ShiodaMitaniReport(
        a=args.a,
        b=args.b,
        c=args.c,
        discriminant=str(result.discriminant),
        tau1=SurdModel.from_surd(result.tau1),
        tau2=SurdModel.from_surd(result.tau2),
        twisted=int_rows(result.transcendental.matrix),
    )
    return report, 0


def handle_flex_table(args: argparse.Namespace) -> Result:
    spec = resolve_field([args.lam], args.field)
    require_cube_roots(spec, "flex-table")
    lam = LambdaParser.parse(args.lam, spec)
    form = hesse_form(lam)
    rows: List[FlexRowModel] = []
    for flex in flex_table(lam):
        verified = verify_flex(form, flex.point, flex.tangent, flex.residue, flex.constant)
        rows.append(
            FlexRowModel(
                point=[FieldElementModel.from_element(c) for c in flex.normalized_point()],
                tangent_coefficients=[
                    FieldElementModel.from_element(c) for c in flex.tangent.linear_coefficients()
                ],
                residue_constant=(
                    FieldElementModel.from_element(flex.constant) if flex.constant is not None else None
                ),
                verified=verified,
            )
        )
    report = FlexTableReport(lambda_=args.lam, field=spec.label, rows=rows)
    return report, 0 if all(r.verified for r in rows) else 1


def handle_aut_order(args: argparse.Namespace) -> Result:
    spec = resolve_field([args.lam], args.field)
    lam = LambdaParser.parse(args.lam, spec)
    order = aut_order(lam)
    closure_order = None
    if args.closure:
        require_cube_roots(spec, "aut-order --closure")
        closure_order = aut_group(lam).order
    report = AutOrderReport(
        lambda_=args.lam,
        field=spec.label,
        j=FieldElementModel.from_element(j_invariant(lam)),
        order=order,
        closure_order=closure_order,
    )
    if closure_order is not None and closure_order != order:
        logger.warning("closure_order_differs", order=order, closure=closure_order)
        return report, 1
    return report, 0


HANDLERS: Dict[str, Handler] = {
    "count": handle_count,
    "fermat planes": handle_fermat_planes,
    "fermat gram": handle_fermat_gram,
    "fermat verify-appendix": handle_fermat_verify_appendix,
    "fermat decompose": handle_fermat_decompose,
    "ds-torsion": handle_ds_torsion,
    "lattice invariants": handle_lattice_invariants,
    "lattice im-phi": handle_lattice_im_phi,
    "lattice certify": handle_lattice_certify,
    "shioda-mitani": handle_shioda_mitani,
    "flex-table": handle_flex_table,
    "aut-order": handle_aut_order,
}
