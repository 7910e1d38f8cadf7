"""Tests for lattice invariants and the transcendental lattice certificate."""
from fractions import Fraction

import pytest

from src.core.domain.matrices import Definiteness, IntMatrix, int_inverse_unimodular
from src.core.exceptions import (
    NotPositiveDefiniteError,
    NotSymmetricError,
    PreconditionError,
    SizeMismatchError,
)
from src.core.services.lattice_tools import (
    GramMatrix,
    QuadraticSurd,
    block_flip,
    complement_disc_check,
    congruence_check,
    direct_sum,
    im_phi_gram,
    lattice_invariants,
    shioda_mitani,
    u_lattice,
)


class TestGram:
    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            GramMatrix.from_rows([[1, 2], [3, 1]])

    def test_hyperbolic_plane(self):
        report = lattice_invariants(u_lattice(3))
        assert report.rank == 2
        assert report.determinant == -9
        assert report.snf_diagonal == (3, 3)
        assert report.definiteness == Definiteness.INDEFINITE

    def test_direct_sum(self):
        total = direct_sum([u_lattice(3), u_lattice(3)])
        assert total.size == 4
        assert lattice_invariants(total).discriminant_group == (3, 3, 3, 3)


class TestImPhi:
    def test_cubic_case(self):
        gram = im_phi_gram(3)
        report = lattice_invariants(gram)
        assert gram.size == 4
        assert report.determinant == 81
        assert report.snf_diagonal == (3, 3, 3, 3)

    def test_quartic_case(self):
        gram = im_phi_gram(4)
        assert gram.size == 36
        assert lattice_invariants(gram).determinant == 16**18

    def test_degree_too_small(self):
        with pytest.raises(PreconditionError):
            im_phi_gram(2)


class TestCongruence:
    def test_flip_carries_u_minus_3_to_u_3(self):
        target = direct_sum([u_lattice(3), u_lattice(3)])
        assert congruence_check(block_flip(2), im_phi_gram(3), target)

    def test_identity_does_not(self):
        target = direct_sum([u_lattice(3), u_lattice(3)])
        assert not congruence_check(IntMatrix.identity(4), im_phi_gram(3), target)

    def test_non_unimodular_change(self):
        g = GramMatrix.from_rows([[2, 0], [0, 2]])
        h = GramMatrix.from_rows([[8, 0], [0, 8]])
        assert not congruence_check(IntMatrix.diagonal([2, 2]), g, h)

    def test_symmetric_under_inverse(self):
        change = IntMatrix.from_rows([[1, 1], [0, 1]])
        g = GramMatrix.from_rows([[2, 1], [1, 2]])
        h = GramMatrix(change.transpose() @ g.matrix @ change)
        assert congruence_check(change, g, h)
        assert congruence_check(int_inverse_unimodular(change), h, g)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            congruence_check(IntMatrix.identity(2), u_lattice(1), im_phi_gram(3))

    def test_complement_check(self):
        assert complement_disc_check(81, 81, 19, 4, 23)
        assert complement_disc_check(81, -81, 19, 4, 23)
        assert not complement_disc_check(81, 27, 19, 4, 23)
        assert not complement_disc_check(81, 81, 19, 3, 23)


class TestShiodaMitani:
    def test_square_form(self):
        result = shioda_mitani(1, 0, 1)
        assert str(result.tau1) == "i"
        assert str(result.tau2) == "i"
        assert result.discriminant == -4
        assert result.transcendental.matrix.to_rows() == [[-6, 0], [0, -6]]

    def test_hexagonal_form(self):
        result = shioda_mitani(1, 1, 1)
        assert str(result.tau1) == "(-1/2+1/2*sqrt(-3))"
        assert str(result.tau2) == "(1/2+1/2*sqrt(-3))"
        assert result.transcendental.matrix.to_rows() == [[-6, -3], [-3, -6]]

    @pytest.mark.parametrize("a, b, c", [(1, 0, -1), (0, 1, 1), (1, 2, 1), (-1, 0, -1)])
    def test_rejects_non_positive_forms(self, a, b, c):
        with pytest.raises(NotPositiveDefiniteError):
            shioda_mitani(a, b, c)

    def test_surd_normalisation(self):
        assert QuadraticSurd(Fraction(1), Fraction(1), 4) == QuadraticSurd(
            Fraction(3), Fraction(0), 0
        )
        assert str(QuadraticSurd(Fraction(0), Fraction(1), -12)) == "2*sqrt(-3)"
        assert str(QuadraticSurd(Fraction(1), Fraction(-1), 2)) == "(1-sqrt(2))"


class TestTranscendentalCertificate:
    def test_fermat_certificate(self, certification):
        certificate = certification.transcendental_certificate()
        assert certificate.congruent
        assert certificate.im_phi_det == 81
        assert certificate.fermat_det == 81
        assert certificate.complement_ok
        assert certificate.fermat_positive_definite
        assert certificate.ok
