"""Tests for the splitcubic command line."""
import json
from fractions import Fraction

import pytest

from src.core.domain.number_field import Q_ZETA3, Q_ZETA12
from src.core.exceptions import ParseError, UsageError
from src.infrastructure.cli.validators import LambdaParser, load_matrix_file, resolve_field
from src.infrastructure.golden import APPENDIX_FILE, load_appendix_matrix
from src.main import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLambdaParser:
    def test_integers_and_rationals(self):
        assert LambdaParser.parse("2", Q_ZETA3) == 2
        assert LambdaParser.parse("-3/2", Q_ZETA3) == Fraction(-3, 2)

    def test_surds(self):
        sqrt3 = Q_ZETA12.sqrt3()
        assert LambdaParser.parse("1+sqrt3", Q_ZETA12) == 1 + sqrt3
        assert LambdaParser.parse("sqrt(3)", Q_ZETA12) == sqrt3
        assert LambdaParser.parse("1/2-3*sqrt3", Q_ZETA12) == Fraction(1, 2) - 3 * sqrt3
        omega = Q_ZETA3.omega()
        assert LambdaParser.parse("1-2*sqrt(-3)", Q_ZETA3) == 1 - 2 * (2 * omega + 1)

    @pytest.mark.parametrize("text", ["", "abc", "2sqrt3", "1+sqrt5", "3/0", "1++2"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            LambdaParser.parse(text, Q_ZETA12)

    def test_field_too_small_is_a_usage_error(self):
        with pytest.raises(UsageError):
            LambdaParser.parse("1+sqrt3", Q_ZETA3)

    def test_resolve_field(self):
        assert resolve_field(["2", "3"]) is Q_ZETA3
        assert resolve_field(["2", "1+sqrt3"]) is Q_ZETA12
        assert resolve_field(["2"], "Qzeta12") is Q_ZETA12
        with pytest.raises(UsageError):
            resolve_field(["2"], "Qzeta5")


class TestMatrixInput:
    def test_wrapped_and_bare(self, tmp_path):
        wrapped = tmp_path / "wrapped.json"
        wrapped.write_text(json.dumps({"matrix": [["2", "-1"], [-1, 2]]}), encoding="utf-8")
        bare = tmp_path / "bare.json"
        bare.write_text(json.dumps([[2, -1], [-1, 2]]), encoding="utf-8")
        assert load_matrix_file(wrapped) == load_matrix_file(bare)

    def test_rejects_fractions_and_ragged_rows(self, tmp_path):
        fractional = tmp_path / "fractional.json"
        fractional.write_text(json.dumps([["1/3", 0], [0, 1]]), encoding="utf-8")
        ragged = tmp_path / "ragged.json"
        ragged.write_text(json.dumps([[1, 0], [0]]), encoding="utf-8")
        with pytest.raises(ParseError):
            load_matrix_file(fractional)
        with pytest.raises(ParseError):
            load_matrix_file(ragged)


class TestCount:
    @pytest.mark.parametrize(
        "l1, l2, planes",
        [("0", "0", 405), ("1+sqrt3", "1+sqrt3", 351), ("2", "2", 297), ("2", "3", 243)],
    )
    def test_plane_counts(self, capsys, l1, l2, planes):
        code, out, _ = run(capsys, "count", "--l1", l1, "--l2", l2)
        assert code == 0
        assert out.splitlines()[-1] == f"planes={planes}"

    @pytest.mark.slow
    def test_enumerate_other_fermat_member(self, capsys):
        code, out, _ = run(capsys, "count", "--l1", "-2", "--l2", "-2", "--enumerate")
        assert code == 0
        assert out.splitlines()[-3:] == ["rank2=243", "rank3=162", "planes=405"]

    def test_report_fields(self, capsys):
        code, out, _ = run(capsys, "count", "--l1", "0", "--l2", "0")
        assert out == "j1=0\nj2=0\nequivalent=true\naut_order=162\nplanes=405\n"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "count", "--l1", "2", "--l2", "3", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["plane_count"] == 243
        assert report["equivalent"] is False
        assert report["j1"]["spec"] == "Q(zeta3)"
        assert all(isinstance(c, str) for c in report["j1"]["coefficients"])

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "count", "--l1", "2", "--l2", "2", "--format", "csv")
        header, row = out.splitlines()
        assert header.split(",")[-1] == "planes"
        assert row.split(",")[-1] == "297"

    def test_singular_parameter(self, capsys):
        code, _, err = run(capsys, "count", "--l1", "1", "--l2", "2")
        assert code == 2
        assert "error:" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["count", "--l1", "2sqrt3", "--l2", "2"],
            ["count", "--l1", "x", "--l2", "2"],
            ["count", "--l1", "2"],
            ["count", "--l1", "sqrt3", "--l2", "2", "--field", "Qzeta3"],
            ["count", "--l1", "2", "--l2", "3", "--format", "xml"],
            ["nonsense"],
            [],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 64
        assert out == ""

    def test_deterministic_output(self, capsys):
        first = run(capsys, "count", "--l1", "1+sqrt3", "--l2", "2", "--json")[1]
        second = run(capsys, "count", "--l1", "1+sqrt3", "--l2", "2", "--json")[1]
        assert first == second


class TestCurveCommands:
    def test_flex_table(self, capsys):
        code, out, _ = run(capsys, "flex-table", "--lambda", "2")
        rows = out.splitlines()
        assert code == 0
        assert len(rows) == 9
        assert all(row.endswith("verified") for row in rows)

    def test_flex_table_json(self, capsys):
        code, out, _ = run(capsys, "flex-table", "--lambda", "1+sqrt3", "--json")
        report = json.loads(out)
        assert report["lambda"] == "1+sqrt3"
        assert len(report["rows"]) == 9
        assert all(row["verified"] for row in report["rows"])

    def test_flex_table_needs_cube_roots(self, capsys):
        code, _, _ = run(capsys, "flex-table", "--lambda", "2", "--field", "Q")
        assert code == 64

    @pytest.mark.parametrize("lam, order", [("0", 162), ("2", 54), ("1+sqrt3", 108)])
    def test_aut_order(self, capsys, lam, order):
        code, out, _ = run(capsys, "aut-order", "--lambda", lam, "--closure")
        assert code == 0
        assert f"|Aut|={order} closure={order}" in out


class TestLatticeCommands:
    def test_ds_torsion(self, capsys):
        code, out, _ = run(capsys, "ds-torsion")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "torsion-free: true; invariants 1,1,1,1"
        assert lines[-1] == "sub-table det=1"

    def test_shioda_mitani(self, capsys):
        code, out, _ = run(capsys, "shioda-mitani", "-a", "1", "-b", "0", "-c", "1")
        assert code == 0
        assert out == "tau1=i tau2=i; T(-3)=[[-6,0],[0,-6]]\n"

    def test_shioda_mitani_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "shioda-mitani", "-a", "1", "-b", "1", "-c", "1", "--json")
        report = json.loads(out)
        assert report["discriminant"] == "-3"
        assert json.dumps(report, indent=2) + "\n" == out

    def test_shioda_mitani_indefinite(self, capsys):
        code, _, _ = run(capsys, "shioda-mitani", "-a", "1", "-b", "0", "-c", "-1")
        assert code == 2

    def test_invariants_from_file(self, capsys, tmp_path):
        path = tmp_path / "gram.json"
        path.write_text(json.dumps({"matrix": [[0, 3], [3, 0]]}), encoding="utf-8")
        code, out, _ = run(capsys, "lattice", "invariants", "--input", str(path))
        assert code == 0
        assert out == "rank=2 det=-9 snf=3,3 definiteness=indefinite\n"

    def test_invariants_rejects_asymmetric(self, capsys, tmp_path):
        path = tmp_path / "gram.json"
        path.write_text(json.dumps([[1, 2], [3, 4]]), encoding="utf-8")
        code, _, _ = run(capsys, "lattice", "invariants", "--input", str(path))
        assert code == 2

    def test_invariants_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "lattice", "invariants", "--input", str(tmp_path / "none.json"))
        assert code == 64

    def test_im_phi(self, capsys):
        code, out, _ = run(capsys, "lattice", "im-phi", "-d", "3")
        assert code == 0
        assert out.splitlines()[0] == "d=3 size=4 det=81"

    def test_certify(self, capsys):
        code, out, _ = run(capsys, "lattice", "certify")
        assert code == 0
        assert out.splitlines()[-1] == "certified: true"


class TestFermatCommands:
    def test_verify_appendix(self, capsys):
        code, out, _ = run(capsys, "fermat", "verify-appendix")
        assert code == 0
        assert out == "19x19 OK, det=81\n"

    def test_verify_appendix_mismatch(self, capsys, tmp_path):
        data = load_appendix_matrix().model_dump()
        data["matrix"][2][2] = 7
        (tmp_path / APPENDIX_FILE).write_text(json.dumps(data), encoding="utf-8")
        code, out, _ = run(capsys, "fermat", "verify-appendix", "--golden-dir", str(tmp_path))
        assert code == 1
        assert out.splitlines()[0] == "19x19 MISMATCH in 1 cells, det=81"
        assert out.splitlines()[1] == "(3,3): expected 6, got 3"

    def test_verify_appendix_missing_golden(self, capsys, tmp_path):
        code, _, _ = run(capsys, "fermat", "verify-appendix", "--golden-dir", str(tmp_path))
        assert code == 1

    def test_gram(self, capsys):
        code, out, _ = run(capsys, "fermat", "gram", "--format", "csv")
        rows = out.splitlines()
        assert code == 0
        assert len(rows) == 19
        assert rows[0].split(",")[0] == "3"

    def test_decompose_single(self, capsys):
        code, out, _ = run(capsys, "fermat", "decompose", "--index", "J1,(w,1,1)")
        label, coefficients = out.strip().split(": ")
        assert code == 0
        assert label == "J1(w,1,1)"
        assert coefficients.split() == ["0"] * 5 + ["-1"] + ["0"] * 13

    def test_decompose_bad_label(self, capsys):
        code, _, _ = run(capsys, "fermat", "decompose", "--index", "J9,(1,1,1)")
        assert code == 64

    @pytest.mark.slow
    def test_planes_json(self, capsys):
        code, out, _ = run(capsys, "fermat", "planes", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["total"] == 405
        assert len(report["planes"]) == 405
        assert sum(1 for p in report["planes"] if p["rank"] == 3) == 162
