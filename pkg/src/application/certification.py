"""Certification workflows that combine the catalog, lattice and torsion services."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from ..core.domain.matrices import IntMatrix, det_bareiss, is_positive_definite
from ..core.domain.number_field import NumberFieldElement
from ..core.logging import LoggerMixin, log_performance
from ..core.services.ds_module import TorsionCertificate, torsion_free_certificate
from ..core.services.fermat_catalog import (
    DecompositionRecord,
    LPlaneLabel,
    all_fermat_planes,
    all_labels,
    build_S_basis,
    decompose,
    gram_matrix,
    L_plane,
)
from ..core.services.lattice_tools import (
    GramMatrix,
    block_flip,
    complement_disc_check,
    congruence_check,
    direct_sum,
    im_phi_gram,
    lattice_invariants,
    u_lattice,
)
from ..core.services.plane_geometry import Plane, PlaneEnumeration, enumerate_planes
from ..infrastructure.golden import load_appendix_matrix

# rank of H^4 of a cubic fourfold
H4_RANK = 23


@dataclass(frozen=True)
class CellDiff:
    row: int
    col: int
    expected: int
    actual: int


@dataclass(frozen=True)
class AppendixVerification:
    gram: IntMatrix
    determinant: int
    mismatches: Tuple[CellDiff, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def size(self) -> int:
        return self.gram.rows


@dataclass(frozen=True)
class TranscendentalCertificate:
    im_phi: GramMatrix
    target: GramMatrix
    base_change: IntMatrix
    congruent: bool
    im_phi_det: int
    fermat_det: int
    complement_ok: bool
    fermat_positive_definite: bool

    @property
    def ok(self) -> bool:
        return (
            self.congruent
            and abs(self.im_phi_det) == abs(self.fermat_det)
            and self.complement_ok
            and self.fermat_positive_definite
        )


@dataclass
class CertificationService(LoggerMixin):
    """Runs the Fermat-catalog certificates, caching the basis and its Gram matrix."""

    golden_dir: Optional[Path] = None
    _basis: List[Plane] = field(default_factory=list, init=False, repr=False)
    _gram: Optional[IntMatrix] = field(default=None, init=False, repr=False)

    def basis(self) -> List[Plane]:
        if not self._basis:
            self._basis = build_S_basis()
        return self._basis

    @log_performance("certification")
    def basis_gram(self) -> IntMatrix:
        if self._gram is None:
            self._gram = gram_matrix(self.basis())
            self.logger.info(
                "gram_matrix_built", size=self._gram.rows, det=det_bareiss(self._gram)
            )
        return self._gram

    def verify_appendix(self) -> AppendixVerification:
        """Recompute the basis Gram matrix and diff it against the golden appendix."""
        gram = self.basis_gram()
        golden = load_appendix_matrix(self.golden_dir).restored()
        mismatches = tuple(
            CellDiff(i + 1, j + 1, golden[i, j], gram[i, j])
            for i in range(gram.rows)
            for j in range(gram.cols)
            if golden[i, j] != gram[i, j]
        )
        if mismatches:
            self.logger.warning("appendix_mismatch", cells=len(mismatches))
        return AppendixVerification(gram, det_bareiss(gram), mismatches)

    def decompose_label(self, label: LPlaneLabel) -> DecompositionRecord:
        plane = L_plane(label.index, label.beta)
        coefficients = decompose(plane, self.basis(), self.basis_gram(), label.label)
        return DecompositionRecord(label, coefficients)

    @log_performance("certification")
    def decomposition_sweep(self) -> List[DecompositionRecord]:
        return [self.decompose_label(label) for label in all_labels()]

    def fermat_planes(self) -> Tuple[List[Plane], List[Plane]]:
        return all_fermat_planes()

    def plane_census(self, lam1: NumberFieldElement, lam2: NumberFieldElement) -> PlaneEnumeration:
        return enumerate_planes(lam1, lam2)

    def torsion(self, scale: int = 1) -> TorsionCertificate:
        return torsion_free_certificate(scale)

    def transcendental_certificate(self) -> TranscendentalCertificate:
        """Im(phi) for d = 3 against U(3) + U(3) and the Fermat algebraic lattice.

        The flip diag(1, -1, 1, -1) carries the -3 blocks to +3 blocks, both
        sides have |det| 81, and ranks 19 + 4 fill H^4.
        """
        im_phi = im_phi_gram(3)
        target = direct_sum([u_lattice(3), u_lattice(3)])
        flip = block_flip(2)
        gram = self.basis_gram()
        im_phi_report = lattice_invariants(im_phi)
        fermat_det = det_bareiss(gram)
        certificate = TranscendentalCertificate(
            im_phi=im_phi,
            target=target,
            base_change=flip,
            congruent=congruence_check(flip, im_phi, target),
            im_phi_det=im_phi_report.determinant,
            fermat_det=fermat_det,
            complement_ok=complement_disc_check(
                fermat_det, im_phi_report.determinant, gram.rows, im_phi_report.rank, H4_RANK
            ),
            fermat_positive_definite=is_positive_definite(gram),
        )
        self.logger.info("transcendental_certificate", ok=certificate.ok)
        return certificate
