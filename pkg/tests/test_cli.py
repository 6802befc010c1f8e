"""Command-line surface: formats, exit codes, determinism."""

import csv
import io
import json

import pytest

from endosimplex.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_default_listing(self, capsys):
        code, out, err = run_cli(capsys, "enumerate", "--n", "4", "--vertices", "0,2")
        assert code == 0
        assert out.splitlines() == ["0_4", "0_3 2", "0_2 2_2", "0 2_3", "2_4"]
        assert json.loads(err) == {"n": 4, "vertices": [0, 2], "count": 5}

    def test_single_vertex(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "3", "--vertices", "1")
        assert code == 0
        assert out.strip() == "1_3"

    def test_count_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--n", "10", "--vertices", "0,2,3,5,8", "--count-only"
        )
        assert code == 0
        assert out.strip() == "1001"

    def test_tuple_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--n", "3", "--vertices", "0,2", "--format", "tuple"
        )
        assert code == 0
        assert out.splitlines() == ["0,0,0", "0,0,2", "0,2,2", "2,2,2"]

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--n", "4", "--vertices", "0,2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 4
        assert payload["vertices"] == [0, 2]
        assert payload["count"] == 5
        assert payload["members"][0] == "0_4"

    def test_cap_exceeded(self, capsys):
        code, out, err = run_cli(
            capsys, "enumerate", "--n", "4", "--vertices", "0,2", "--cap", "3"
        )
        assert code == 2
        assert out == ""
        assert "cap" in err

    def test_bad_vertices(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--n", "4", "--vertices", "0,x"])
        assert exc.value.code == 2

    def test_invalid_simplex(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--n", "4", "--vertices", "2,5")
        assert code == 2
        assert "error" in err


class TestClassify:
    def test_string_simplex(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "4", "--vertices", "0,2")
        assert code == 0
        payload = json.loads(out)
        assert payload["census"]["RI"] == 2
        assert payload["blocks"]["RI"] == ["0_2 2_2", "0 2_3"]
        assert payload["checks"]["all_pass"] is True

    def test_worked_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--n", "10", "--vertices", "0,2,3,5,8"
        )
        assert code == 0
        payload = json.loads(out)
        block = payload["blocks"]["IC[0,0,0,0,4]"]
        assert "0_4 2_2 8_4" in block
        assert "0_3 2_2 3_3 8_2" in block
        assert payload["census"]["RI"] == 12

    def test_single_vertex(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "3", "--vertices", "0")
        assert code == 0
        payload = json.loads(out)
        assert list(payload["blocks"]) == ["N[0]"]
        assert payload["census"] == {"N[0]": 1}


class TestVerify:
    def test_counts_suite(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--suite", "counts", "--max-n", "4"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["all_passed"] is True
        assert {c["id"] for c in payload["claims"]} == {
            "counts.nilpotent-catalan",
            "counts.idempotent-census",
            "counts.right-identity-order",
            "counts.catalan-sequence",
        }
        assert "PASS counts.nilpotent-catalan" in err

    def test_axioms_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "axioms", "--max-n", "3")
        assert code == 0
        assert json.loads(out)["summary"]["failed"] == 0

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "everything"])
        assert exc.value.code == 2

    def test_max_n_too_large(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "counts", "--max-n", "99")
        assert code == 2
        assert "max_n" in err


class TestCayley:
    def test_csv_table(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "cayley", "--n", "3", "--vertices", "0,2", "--op", "mul", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 5  # header + 4 members
        assert rows[0] == ["mul", "0_3", "0_2 2", "0 2_2", "2_3"]
        # row ("0 2_2") * column ("2_3") = constant two
        assert rows[3][4] == "2_3"
        # composition order: (0,2,2) * (0,0,2) maps everything through 0,2
        assert rows[3][2] == "0 2_2"

    def test_add_table_diagonal(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "cayley", "--n", "3", "--vertices", "0,2", "--op", "add", "--format", "csv",
        )
        rows = list(csv.reader(io.StringIO(out)))
        labels = rows[0][1:]
        for i, row in enumerate(rows[1:]):
            assert row[i + 1] == labels[i]  # addition is idempotent

    def test_single_vertex_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "cayley", "--n", "4", "--vertices", "1", "--op", "mul"
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["mul", "1_4"], ["1_4", "1_4"]]

    def test_dot_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "cayley", "--n", "3", "--vertices", "0,2", "--op", "mul", "--format", "dot",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "digraph cayley_mul {"
        assert lines[-1] == "}"
        assert sum(1 for l in lines if "[label=" in l and "->" not in l) == 4
        assert sum(1 for l in lines if "->" in l) == 16

    def test_table_cap(self, capsys):
        code, _, err = run_cli(
            capsys,
            "cayley", "--n", "4", "--vertices", "0,1,2,3", "--op", "mul", "--cap", "100",
        )
        assert code == 2
        assert "cap" in err


class TestDeterminism:
    def test_enumerate_byte_identical(self, capsys):
        first = run_cli(capsys, "enumerate", "--n", "5", "--vertices", "0,2,4")
        second = run_cli(capsys, "enumerate", "--n", "5", "--vertices", "0,2,4")
        assert first == second

    def test_classify_byte_identical(self, capsys):
        first = run_cli(capsys, "classify", "--n", "5", "--vertices", "1,3")
        second = run_cli(capsys, "classify", "--n", "5", "--vertices", "1,3")
        assert first == second

    def test_cayley_byte_identical(self, capsys):
        args = ("cayley", "--n", "4", "--vertices", "0,3", "--op", "mul", "--format", "dot")
        assert run_cli(capsys, *args) == run_cli(capsys, *args)

    def test_verify_deterministic_modulo_timing(self, capsys):
        args = ("verify", "--suite", "strata", "--max-n", "3", "--seed", "7")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)

        def strip_elapsed(text):
            payload = json.loads(text)
            for claim in payload["claims"]:
                claim.pop("elapsed_s")
            return payload

        assert strip_elapsed(out1) == strip_elapsed(out2)
