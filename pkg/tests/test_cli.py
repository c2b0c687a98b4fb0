import json
from importlib import resources

from glcdist.cli import main


def fixture_path(name: str) -> str:
    return str(resources.files("glcdist").joinpath("fixtures", name))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestClassify:
    def test_sign_cube_unitary(self, capsys):
        code, report = run_json(
            capsys, "classify", "--input", fixture_path("sign_cube_g6.json"), "--mode", "unitary"
        )
        assert code == 0
        verdict = report["results"]["verdict"]
        assert verdict["distinguished"] is False
        assert verdict["condition_i"] is True
        assert verdict["condition_ii"] is False
        assert report["results"]["formulations_agree"] is True
        assert report["results"]["exceptional_factor"] is True

    def test_sign_square_unitary(self, capsys):
        code, report = run_json(
            capsys, "classify", "--input", fixture_path("sign_square_g4.json")
        )
        assert code == 0
        assert report["results"]["verdict"]["distinguished"] is True

    def test_generic_pair_and_branching_alias(self, capsys):
        code, report = run_json(
            capsys, "classify", "--input", fixture_path("pair_g2.json"), "--mode", "generic"
        )
        assert code == 0
        assert report["results"]["verdict"]["distinguished"] is True
        assert report["results"]["appears_in_induced_trivial_branching"] is True

    def test_unitary_mode_on_plain_parameter(self, capsys):
        # A parameter input has no block structure: only the parameter-side
        # verdict is reported.
        code, report = run_json(
            capsys, "classify", "--input", fixture_path("pair_g2.json")
        )
        assert code == 0
        assert "block_verdict" not in report["results"]
        assert report["results"]["verdict"]["distinguished"] is False  # odd pair, (ii) fails

    def test_report_round_trip(self, capsys):
        code, report = run_json(
            capsys, "classify", "--input", fixture_path("sign_cube_g6.json")
        )
        assert code == 0
        echoed = json.dumps(report["inputs"]["blocks"])
        code2, report2 = run_json(capsys, "classify", "--inline", echoed)
        assert code2 == 0
        assert report2 == report


class TestKtype:
    def test_g4_example(self, capsys):
        code, report = run_json(
            capsys, "ktype", "--input", fixture_path("g4_mixed.json"), "--radius", "6"
        )
        assert code == 0
        assert report["results"]["lowest_ktype"] == [1, 1, 1, 1]
        assert report["results"]["distinguished_minimal_ktype"] == [2, 2, 0, 0]
        assert report["results"]["oracle_minimizers"] == [[2, 2, 0, 0]]
        assert report["results"]["oracle_agrees"] is True

    def test_precondition_exit_code(self, capsys):
        code = main(
            ["ktype", "--inline", '{"type":"langlands","characters":[{"m":1,"s":{"re":"0","im":"0"}}]}']
        )
        capsys.readouterr()
        assert code == 2


class TestDerive:
    def test_sign_cube_monomial(self, capsys):
        code, report = run_json(
            capsys, "derive", "--input", fixture_path("sign_cube_monomial_g6.json")
        )
        assert code == 0
        assert report["results"]["passes"] is False
        assert report["results"]["failing_stage"] == 1
        assert report["results"]["stages"][0]["condition_i"] is True
        assert report["results"]["stages"][1]["condition_i"] is False


class TestEps:
    def test_pair_fixture(self, capsys):
        code, report = run_json(
            capsys, "eps", "--input", fixture_path("pair_g2.json"), "--b", "0,1"
        )
        assert code == 0
        assert report["results"]["exactly_one"] is True
        assert report["results"]["psi_trivial_on_r"] is True

    def test_twist_two_i(self, capsys):
        code, report = run_json(
            capsys, "eps", "--input", fixture_path("sign_square_g4.json"), "--b", "0,2"
        )
        assert code == 0
        assert report["results"]["exactly_one"] is True
        assert report["results"]["factor"]["abs_b_sq"] == "4"

    def test_bad_twist_is_parse_error(self, capsys):
        code = main(["eps", "--input", fixture_path("pair_g2.json"), "--b", "nonsense"])
        capsys.readouterr()
        assert code == 1


class TestCosets:
    def test_classes_and_dimensions(self, capsys):
        code, report = run_json(capsys, "cosets", "--n", "4", "--comp", "2,2")
        assert code == 0
        results = report["results"]
        assert results["count"] == 10
        assert results["representatives_verified"] is True
        assert len(results["classes"]) == 3
        assert results["class_dimensions"] == [28, 31, 32]
        assert results["open_classes"] == 1

    def test_composition_mismatch(self, capsys):
        code = main(["cosets", "--n", "4", "--comp", "2,1"])
        capsys.readouterr()
        assert code == 1


class TestVerifyKernel:
    def test_single_sample(self, capsys):
        code, report = run_json(capsys, "verify-kernel", "--samples", "0")
        assert code == 0
        table = report["results"]["table"]
        assert len(table) == 2
        for row in table:
            assert row["rel_err"] < 1e-6
            got = complex(*row["normalization_ratio"])
            want = complex(*row["expected_normalization_ratio"])
            assert abs(got - want) < 1e-6

    def test_strip_violation_exit_code(self, capsys):
        code = main(["verify-kernel", "--samples", "5"])
        capsys.readouterr()
        assert code == 2

    def test_nonconvergence_exit_code(self, capsys):
        # Inside the strip but too close to its edge for the radial
        # quadrature to resolve within the subdivision limit.
        code = main(["verify-kernel", "--samples", "0.999"])
        capsys.readouterr()
        assert code == 3


class TestParsing:
    def test_missing_input(self, capsys):
        code = main(["classify"])
        capsys.readouterr()
        assert code == 1

    def test_bad_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code = main(["classify", "--input", str(bad)])
        err = capsys.readouterr().err
        assert code == 1
        assert "line 1" in err

    def test_unknown_flag(self, capsys):
        code = main(["classify", "--unitary"])
        capsys.readouterr()
        assert code == 1

    def test_unknown_block_kind(self, capsys):
        code = main(
            ["classify", "--inline", '{"type":"unitary","blocks":[{"kind":"huh"}]}']
        )
        err = capsys.readouterr().err
        assert code == 1
        assert "bad parameter file" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, _ = run(
            capsys, "classify", "--input", fixture_path("pair_g2.json"),
            "--mode", "generic", "--output", str(target),
        )
        assert code == 0
        assert json.loads(target.read_text())["subcommand"] == "classify"
