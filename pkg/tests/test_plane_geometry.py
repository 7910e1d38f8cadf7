"""Tests for planes on split cubic fourfolds."""
import pytest

from src.core.domain.matrices import FieldMatrix
from src.core.exceptions import (
    FormsNotEqualError,
    IllegalRankError,
    MissingAutOrderError,
    PlaneNotContainedError,
)
from src.core.services.fermat_catalog import (
    K_INDICES,
    BetaTriple,
    L_plane,
    build_L_planes,
    fermat_hypersurface,
)
from src.core.services.hesse_curves import FlexDatum, flex_table, hesse_form
from src.core.services.plane_geometry import (
    Plane,
    PlaneRank,
    SplitHypersurface,
    classify_rank,
    contains,
    count_planes,
    cubic_plane_count,
    enumerate_planes,
    intersection_number,
    rank2_planes,
)


class TestCountFormula:
    @pytest.mark.parametrize(
        "aut, expected",
        [(162, 405), (108, 351), (54, 297)],
    )
    def test_equivalent_forms(self, aut, expected):
        assert count_planes(3, 9, 9, aut, equivalent=True) == expected

    def test_non_equivalent_forms(self):
        assert count_planes(3, 9, 9) == 243

    def test_general_degree(self):
        assert count_planes(4, 12, 12) == 576
        assert count_planes(5, 15, 15, 150, equivalent=True) == 5 * 225 + 150

    def test_missing_aut_order(self):
        with pytest.raises(MissingAutOrderError):
            count_planes(3, 9, 9, equivalent=True)

    def test_cubic_counts(self, zeta3_field, zeta12_field, sqrt3):
        zero = zeta3_field.zero()
        two, three = zeta3_field.element((2,)), zeta3_field.element((3,))
        assert cubic_plane_count(zero, zero) == 405
        assert cubic_plane_count(two, two) == 297
        assert cubic_plane_count(two, three) == 243
        assert cubic_plane_count(1 + sqrt3, 1 + sqrt3) == 351


class TestPlane:
    def test_canonical_equality(self, zeta3_field):
        rows = [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]]
        shuffled = [rows[2], [2, 0, 0, 2, 0, 0], rows[1]]
        assert Plane.from_equations(rows, zeta3_field) == Plane.from_equations(
            shuffled, zeta3_field
        )

    def test_rank_deficient_system(self, zeta3_field):
        rows = [[1, 0, 0, 1, 0, 0], [2, 0, 0, 2, 0, 0], [0, 0, 1, 0, 0, 1]]
        with pytest.raises(IllegalRankError):
            Plane.from_equations(rows, zeta3_field)

    def test_membership(self, zeta3_field):
        hypersurface = fermat_hypersurface()
        on = L_plane(K_INDICES["J1"], BetaTriple((0, 0, 0)))
        off = Plane.from_equations(
            [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]], zeta3_field
        )
        assert contains(hypersurface, on)
        assert not contains(hypersurface, off)
        with pytest.raises(PlaneNotContainedError):
            intersection_number(on, off, hypersurface, strict=True)

    def test_graph_of_doubling_is_not_on_fermat(self, zeta3_field):
        # the Fermat fourfold is written F(x) + F(y) = 0
        identity = FieldMatrix.identity(zeta3_field, 3)
        assert contains(fermat_hypersurface(), Plane(identity, -identity))
        assert not contains(fermat_hypersurface(), Plane(identity, 2 * identity))


class TestClassifyRank:
    def test_graph_is_rank3(self, zeta3_field):
        identity = FieldMatrix.identity(zeta3_field, 3)
        assert classify_rank(Plane(identity, identity)) == PlaneRank.RANK3

    def test_l_planes_are_rank2(self):
        assert all(classify_rank(p) == PlaneRank.RANK2 for p in build_L_planes())

    def test_classified_by_x_block(self, zeta3_field):
        a = FieldMatrix.diagonal(zeta3_field, [1, 1, 0])
        b = FieldMatrix.identity(zeta3_field, 3)
        assert classify_rank(Plane(a, b)) == PlaneRank.RANK2

    def test_zero_x_block_is_illegal(self, zeta3_field):
        plane = Plane.from_equations(
            [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]], zeta3_field
        )
        with pytest.raises(IllegalRankError):
            classify_rank(plane)

    def test_degenerate_y_block_is_illegal(self, zeta3_field):
        a = FieldMatrix.identity(zeta3_field, 3)
        b = FieldMatrix.diagonal(zeta3_field, [1, 0, 0])
        with pytest.raises(IllegalRankError):
            classify_rank(Plane(a, b))


class TestIntersections:
    def test_basis_pair(self):
        s1 = L_plane(K_INDICES["J1"], BetaTriple((0, 0, 0)))
        s2 = L_plane(K_INDICES["J1"], BetaTriple((0, 0, 1)))
        assert intersection_number(s1, s1) == 3
        assert intersection_number(s1, s2) == -1

    @pytest.mark.slow
    def test_symmetric_over_all_fermat_planes(self, fermat_planes):
        planes = fermat_planes[0] + fermat_planes[1]
        assert len(planes) == 405
        for i, a in enumerate(planes):
            assert intersection_number(a, a) == 3
            for b in planes[i + 1 :]:
                value = intersection_number(a, b)
                assert value == intersection_number(b, a)
                assert value in (0, 1, -1)


class TestEnumeration:
    def test_fermat_planes(self, fermat_planes):
        rank2, rank3 = fermat_planes
        assert len(rank2) == 243
        assert len(rank3) == 162
        assert len(set(rank2) | set(rank3)) == 405
        assert all(classify_rank(p) == PlaneRank.RANK2 for p in rank2)
        assert all(classify_rank(p) == PlaneRank.RANK3 for p in rank3)

    def test_l_planes_are_fermat_rank2_planes(self, fermat_planes):
        assert set(build_L_planes()) <= set(fermat_planes[0])

    @pytest.mark.slow
    def test_fermat_planes_lie_on_fourfold(self, fermat_planes):
        hypersurface = fermat_hypersurface()
        assert all(contains(hypersurface, p) for p in fermat_planes[0] + fermat_planes[1])

    @pytest.mark.slow
    def test_non_equivalent_pair(self, zeta3_field):
        enumeration = enumerate_planes(zeta3_field.element((2,)), zeta3_field.element((3,)))
        assert len(enumeration.rank2) == 243
        assert enumeration.rank3 == ()
        assert enumeration.total == 243

    @pytest.mark.slow
    def test_equal_generic_pair(self, zeta3_field):
        two = zeta3_field.element((2,))
        enumeration = enumerate_planes(two, two)
        assert (len(enumeration.rank2), len(enumeration.rank3)) == (243, 54)
        assert len(enumeration.planes()) == 297

    @pytest.mark.slow
    def test_square_lattice_pair(self, sqrt3):
        lam = 1 + sqrt3
        enumeration = enumerate_planes(lam, lam)
        assert (len(enumeration.rank2), len(enumeration.rank3)) == (243, 108)
        assert enumeration.total == 351

    @pytest.mark.slow
    def test_other_fermat_member(self, zeta3_field, omega):
        lam = -2 * omega
        enumeration = enumerate_planes(lam, lam)
        assert (len(enumeration.rank2), len(enumeration.rank3)) == (243, 162)
        assert enumeration.total == 405

    @pytest.mark.slow
    def test_rank2_planes_from_recomputed_residues(self, zeta3_field):
        two = zeta3_field.element((2,))
        form = hesse_form(two)
        bare = [FlexDatum(f.point, f.tangent) for f in flex_table(two)]
        hypersurface = SplitHypersurface(form, form)
        planes = rank2_planes(bare, bare, 3, hypersurface)
        tabulated = rank2_planes(flex_table(two), flex_table(two), 3, hypersurface)
        assert len(planes) == 243
        assert set(planes) == set(tabulated)

    def test_equivalent_but_different_parameters(self, zeta3_field, omega):
        two = zeta3_field.element((2,))
        with pytest.raises(FormsNotEqualError):
            enumerate_planes(two, two * omega)

    def test_balanced_presentation(self, zeta3_field):
        two, three = zeta3_field.element((2,)), zeta3_field.element((3,))
        hypersurface = SplitHypersurface(hesse_form(two), hesse_form(three))
        balanced = hypersurface.balanced(zeta3_field.element((7, )) / 26)
        assert balanced.d == 3
        assert balanced.F2 == (zeta3_field.element((7,)) / 26) * hesse_form(three)
