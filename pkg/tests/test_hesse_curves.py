"""Tests for the Hesse pencil: j-invariants, flexes and automorphism groups."""
from fractions import Fraction

import pytest

from src.core.domain.matrices import FieldMatrix
from src.core.domain.polynomials import MultiPoly
from src.core.exceptions import (
    ClosureBudgetExceededError,
    DegenerateLineError,
    NotAnAutomorphismError,
    SingularCurveError,
)
from src.core.services.hesse_curves import (
    FlexDatum,
    HesseCubic,
    aut_group,
    aut_order,
    flex_residue,
    flex_table,
    group_closure,
    hesse_form,
    is_smooth,
    j_invariant,
    standard_generators,
    verify_flex,
)


@pytest.fixture
def lam_sqrt(zeta12_field, sqrt3):
    return 1 + sqrt3


class TestJInvariant:
    def test_fermat_curve(self, zeta3_field):
        assert j_invariant(zeta3_field.zero()) == 0

    def test_square_lattice_member(self, lam_sqrt):
        assert j_invariant(lam_sqrt) == 1728

    def test_depends_on_cube_only(self, zeta3_field, omega):
        two = zeta3_field.element((2,))
        assert j_invariant(two) == j_invariant(two * omega)
        assert j_invariant(two) != j_invariant(zeta3_field.element((3,)))

    @pytest.mark.parametrize("exponent", [0, 1, 2])
    def test_singular_members(self, omega, exponent):
        lam = omega**exponent
        assert not is_smooth(lam)
        with pytest.raises(SingularCurveError):
            j_invariant(lam)
        with pytest.raises(SingularCurveError):
            HesseCubic(lam)


class TestFlexes:
    @pytest.mark.parametrize("value", [2, 3])
    def test_rational_parameters(self, zeta3_field, value):
        lam = zeta3_field.element((value,))
        form = hesse_form(lam)
        table = flex_table(lam)
        assert len(table) == 9
        assert len({flex.normalized_point() for flex in table}) == 9
        for flex in table:
            assert verify_flex(form, flex.point, flex.tangent, flex.residue, flex.constant)
            assert flex.constant == 1 - lam**3

    def test_surd_parameter(self, lam_sqrt):
        form = hesse_form(lam_sqrt)
        table = HesseCubic(lam_sqrt).flexes()
        assert len(table) == 9
        assert all(verify_flex(form, f.point, f.tangent) for f in table)

    def test_residue_matches_table(self, zeta3_field):
        lam = zeta3_field.element((2,))
        form = hesse_form(lam)
        for flex in flex_table(lam):
            residue = flex_residue(form, flex)
            assert residue.constant == -7
            assert residue.residue == flex.residue.linear_coefficients()

    def test_residue_recomputed_without_table(self, zeta3_field):
        lam = zeta3_field.element((2,))
        form = hesse_form(lam)
        constants = []
        for flex in flex_table(lam):
            residue = flex_residue(form, FlexDatum(flex.point, flex.tangent))
            lifted = MultiPoly.linear_form(zeta3_field, residue.residue)
            assert verify_flex(form, flex.point, flex.tangent, lifted, residue.constant)
            constants.append(residue.constant)
        assert sorted(c.rational_value() for c in constants) == [-7] * 6 + [Fraction(7, 8)] * 3

    def test_wrong_tangent_is_rejected(self, zeta3_field):
        lam = zeta3_field.element((2,))
        point = (0, -1, 1)
        not_tangent = MultiPoly.variable(zeta3_field, 3, 0)
        assert not verify_flex(hesse_form(lam), point, not_tangent)

    def test_degenerate_line(self, zeta3_field):
        lam = zeta3_field.element((2,))
        with pytest.raises(DegenerateLineError):
            verify_flex(hesse_form(lam), (0, -1, 1), MultiPoly.linear_form(zeta3_field, (0, 0, 0)))


class TestAutomorphisms:
    def test_generic_order(self, zeta3_field):
        lam = zeta3_field.element((2,))
        assert aut_order(lam) == 54
        assert aut_group(lam).order == 54

    def test_fermat_order(self, zeta3_field):
        assert aut_order(zeta3_field.zero()) == 162
        assert HesseCubic(zeta3_field.zero()).aut_order() == 162

    def test_square_lattice_order(self, lam_sqrt):
        assert aut_order(lam_sqrt) == 108
        group = aut_group(lam_sqrt)
        assert group.order == 108
        assert FieldMatrix.identity(lam_sqrt.spec, 3) in group

    @pytest.mark.parametrize("exponent", [0, 1, 2])
    def test_other_fermat_members(self, zeta3_field, omega, exponent):
        lam = -2 * omega**exponent
        assert j_invariant(lam) == 0
        assert len(standard_generators(lam)) == 5
        assert aut_group(lam).order == 162
        assert aut_order(lam) == 162

    def test_generators_preserve_form(self, zeta3_field):
        lam = zeta3_field.element((3,))
        assert len(standard_generators(lam)) == 4

    def test_non_automorphism_rejected(self, zeta3_field):
        lam = zeta3_field.element((2,))
        scale = FieldMatrix.diagonal(zeta3_field, [2, 1, 1])
        with pytest.raises(NotAnAutomorphismError):
            group_closure([scale], hesse_form(lam))

    def test_closure_budget(self, zeta3_field):
        lam = zeta3_field.element((2,))
        with pytest.raises(ClosureBudgetExceededError):
            group_closure(standard_generators(lam), hesse_form(lam), budget=10)
