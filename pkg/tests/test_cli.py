import json

import pytest

from cremona_bounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestBound:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "3", "--t", "1")
        assert code == 0
        assert "rank bound = 3" in out
        assert "Fermat cubic" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "5", "--t", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "bound"
        assert doc["results"]["rank_bound"] == 2

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "bound", "--p", "11", "--t", "3")
        assert code == 2
        assert "domain error" in err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bound", "--p", "3"])
        assert exc.value.code == 1


class TestCyclotomic:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "cyclotomic", "--n", "12")
        assert code == 0
        assert "X^4 - X^2 + 1" in out

    def test_with_reduction(self, capsys):
        code, out, _ = run(
            capsys, "cyclotomic", "--n", "6", "--p", "2", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["results"]["reduced_coefficients"] == [1, 1, 1]

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "cyclotomic", "--n", "0")
        assert code == 2


class TestLemma:
    def test_small_pass(self, capsys):
        code, out, _ = run(capsys, "lemma", "--max-n", "10", "--primes", "2,3,5")
        assert code == 0
        assert "PASS" in out

    def test_json_pass_field(self, capsys):
        code, out, _ = run(
            capsys, "lemma", "--max-n", "5", "--primes", "2,3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True
        assert doc["results"]["counterexamples"] == []

    def test_bad_primes(self, capsys):
        code, _, err = run(capsys, "lemma", "--max-n", "5", "--primes", "2,4")
        assert code == 2


class TestTorusRank:
    def test_file_input(self, capsys, tmp_path):
        path = write_json(
            tmp_path,
            "torus.json",
            {"dimension": 2, "sigma": [[0, -1], [1, 0]], "chi_order": 4},
        )
        code, out, _ = run(capsys, "torus-rank", "--file", path, "--p", "5")
        assert code == 0
        assert "eigenspace rank" in out

    def test_json_output(self, capsys, tmp_path):
        path = write_json(
            tmp_path,
            "torus.json",
            {"dimension": 1, "sigma": [[-1]], "chi_order": 2},
        )
        code, out, _ = run(
            capsys, "torus-rank", "--file", path, "--p", "3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["results"]["certificate"]["eigenspace_rank"] == 1
        assert doc["results"]["certificate"]["upper_bound"] == 1

    def test_unknown_field_rejected(self, capsys, tmp_path):
        path = write_json(
            tmp_path,
            "torus.json",
            {"dimension": 1, "sigma": [[1]], "chi_order": 1, "extra": 1},
        )
        code, _, err = run(capsys, "torus-rank", "--file", path, "--p", "3")
        assert code == 2
        assert "unknown fields" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "torus-rank", "--file", "/nope.json", "--p", "3")
        assert code == 2

    def test_non_integer_sigma(self, capsys, tmp_path):
        path = write_json(
            tmp_path,
            "torus.json",
            {"dimension": 1, "sigma": [[1.5]], "chi_order": 1},
        )
        code, _, _ = run(capsys, "torus-rank", "--file", path, "--p", "3")
        assert code == 2


class TestOracle:
    def test_single_file(self, capsys, tmp_path):
        path = write_json(tmp_path, "ff.json", {"q": 2, "sigma": [[0, 1], [1, 0]]})
        code, out, _ = run(capsys, "oracle", "--file", path, "--p", "3")
        assert code == 0
        assert "PASS" in out

    def test_file_requires_p(self, capsys, tmp_path):
        path = write_json(tmp_path, "ff.json", {"q": 2, "sigma": [[1]]})
        code, _, err = run(capsys, "oracle", "--file", path)
        assert code == 2

    def test_excluded_characteristic(self, capsys, tmp_path):
        path = write_json(tmp_path, "ff.json", {"q": 4, "sigma": [[1]]})
        code, _, _ = run(capsys, "oracle", "--file", path, "--p", "2")
        assert code == 2

    def test_sweep(self, capsys):
        code, out, _ = run(capsys, "oracle", "--count", "5", "--seed", "3")
        assert code == 0
        assert "violations: 0" in out

    def test_sweep_deterministic(self, capsys):
        _, out1, _ = run(
            capsys, "oracle", "--count", "4", "--seed", "9", "--format", "json"
        )
        _, out2, _ = run(
            capsys, "oracle", "--count", "4", "--seed", "9", "--format", "json"
        )
        assert out1 == out2


class TestSharpness:
    def test_single_case(self, capsys):
        code, out, _ = run(capsys, "sharpness", "--d", "4", "--t", "3")
        assert code == 0
        assert "PASS" in out

    def test_full_sweep_json(self, capsys):
        code, out, _ = run(capsys, "sharpness", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True
        assert all(c["attained"] for c in doc["results"]["cases"])

    def test_half_specified(self, capsys):
        code, _, _ = run(capsys, "sharpness", "--d", "3")
        assert code == 2


class TestWeylAudit:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "weyl-audit")
        assert code == 0
        assert "24 elements" in out
        assert "max multiplicity of -1 mod 3: 2" in out


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ["bound", "--p", "3", "--t", "2"],
            ["cyclotomic", "--n", "105"],
            ["lemma", "--max-n", "6", "--primes", "2,3"],
            ["weyl-audit"],
            ["sharpness", "--d", "2", "--t", "4"],
        ],
    )
    def test_reserialization_is_byte_identical(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0
        assert json.dumps(json.loads(out), indent=2) + "\n" == out
