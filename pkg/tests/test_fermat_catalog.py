"""Tests for the Fermat cubic fourfold catalog and its certification."""
import json

import pytest

from src.core.domain.matrices import det_bareiss, is_positive_definite
from src.core.exceptions import GoldenMismatchError, ParseError
from src.core.services.fermat_catalog import (
    K_INDICES,
    BetaTriple,
    L_plane,
    all_labels,
    basis_labels,
    build_L_planes,
    build_S_basis,
    fermat_hypersurface,
    parse_index,
)
from src.core.services.lattice_tools import GramMatrix, lattice_invariants
from src.core.services.plane_geometry import contains, intersection_number
from src.infrastructure.golden import APPENDIX_FILE, load_appendix_matrix


class TestLabels:
    def test_label_counts(self):
        assert len(all_labels()) == 108
        assert len(basis_labels()) == 19
        assert [label.label for label in basis_labels()[:2]] == ["J1(1,1,1)", "J1(1,1,w)"]

    def test_only_four_indices_in_k(self):
        assert set(K_INDICES) == {"J1", "J2", "J3", "J4"}
        assert all(index.in_k for index in K_INDICES.values())

    @pytest.mark.parametrize(
        "text, name, exponents",
        [
            ("J1,(w,1,1)", "J1", (1, 0, 0)),
            ("J3(1,w^2,w)", "J3", (0, 2, 1)),
            (" J4 , (omega, omega^2, 1) ", "J4", (1, 2, 0)),
        ],
    )
    def test_parse_index(self, text, name, exponents):
        label = parse_index(text)
        assert label.index.name == name
        assert label.beta == BetaTriple(exponents)

    @pytest.mark.parametrize("text", ["J5,(1,1,1)", "J1,(2,1,1)", "J1,(1,1)", ""])
    def test_parse_index_rejects(self, text):
        with pytest.raises(ParseError):
            parse_index(text)


class TestPlanes:
    def test_l_planes_distinct_and_on_fourfold(self):
        hypersurface = fermat_hypersurface()
        planes = build_L_planes()
        assert len(set(planes)) == 108
        assert all(contains(hypersurface, plane) for plane in planes)

    def test_basis_is_subset_of_catalog(self):
        assert set(build_S_basis()) <= set(build_L_planes())


class TestAppendix:
    def test_recomputed_gram_matches_golden(self, certification):
        verification = certification.verify_appendix()
        assert verification.ok
        assert verification.size == 19
        assert verification.determinant == 81

    def test_gram_invariants(self, certification):
        gram = certification.basis_gram()
        assert all(gram[i, i] == 3 for i in range(19))
        assert is_positive_definite(gram)
        report = lattice_invariants(GramMatrix(gram))
        assert report.rank == 19
        assert report.determinant == 81
        assert report.discriminant_group == (3, 3, 3, 3)

    def test_golden_file_offset(self):
        golden = load_appendix_matrix()
        assert golden.offset == 1
        assert det_bareiss(golden.restored()) == 81

    def test_mismatch_reports_cells(self, certification, tmp_path):
        golden = load_appendix_matrix()
        data = golden.model_dump()
        data["matrix"][0][1] += 5
        data["matrix"][1][0] += 5
        (tmp_path / APPENDIX_FILE).write_text(json.dumps(data), encoding="utf-8")

        from src.application import CertificationService

        service = CertificationService(golden_dir=tmp_path)
        service._gram = certification.basis_gram()
        verification = service.verify_appendix()
        assert not verification.ok
        assert [(d.row, d.col) for d in verification.mismatches] == [(1, 2), (2, 1)]

    def test_missing_golden_file(self, tmp_path):
        with pytest.raises(GoldenMismatchError):
            load_appendix_matrix(tmp_path)


class TestDecomposition:
    def test_basis_plane_is_minus_unit_vector(self, certification):
        record = certification.decompose_label(parse_index("J1,(1,1,1)"))
        assert record.coefficients == (-1,) + (0,) * 18

    def test_single_label(self, certification):
        record = certification.decompose_label(parse_index("J1,(w,1,1)"))
        assert len(record.coefficients) == 19
        assert record.coefficients == (0,) * 5 + (-1,) + (0,) * 13

    def test_non_basis_label_is_consistent(self, certification):
        label = parse_index("J4,(w^2,w,w)")
        record = certification.decompose_label(label)
        plane = L_plane(label.index, label.beta)
        v = [intersection_number(plane, s) for s in certification.basis()]
        gram = certification.basis_gram()
        assert gram.apply(record.coefficients) == tuple(-x for x in v)

    @pytest.mark.slow
    def test_full_sweep(self, certification):
        records = certification.decomposition_sweep()
        assert len(records) == 108
        assert len({r.label.label for r in records}) == 108
