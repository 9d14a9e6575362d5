import io
import json
from pathlib import Path

import pytest

from ifnkit.cli import main

GOLDEN = Path(__file__).parent / "golden"
EXAMPLE_SIG = "a + abcd + 3b + bd"
EXAMPLE_ALT_SIG = "3b + a + bcd + abd"
EXAMPLE_MATRIX = [[1, 1, 0, 0], [0, 3, 1, 1], [0, 0, 0, 1], [1, 1, 0, 0]]

# Premagic, but its link flows are not a nonnegative combination of the
# cycle basis the linear route selects: the pinned solution goes negative.
NONNEG_FAIL_MATRIX = [[0, 0, 1, 2], [2, 1, 1, 0], [1, 1, 0, 1], [0, 2, 1, 1]]


def write_matrix(tmp_path, matrix, nodes=None, name="matrix.json"):
    nodes = nodes or [chr(ord("a") + i) for i in range(len(matrix))]
    path = tmp_path / name
    path.write_text(json.dumps({"nodes": nodes, "matrix": matrix}))
    return str(path)


class TestGolden:
    def test_compose(self, capsys):
        assert main(["compose", "--sig", EXAMPLE_SIG]) == 0
        assert capsys.readouterr().out == (GOLDEN / "compose_example.json").read_text()

    def test_decompose(self, capsys, tmp_path):
        path = write_matrix(tmp_path, EXAMPLE_MATRIX)
        assert main(["decompose", "--matrix", path]) == 0
        assert capsys.readouterr().out == (GOLDEN / "decompose_example.txt").read_text()

    def test_analyze(self, capsys):
        assert main(["analyze", "--sig", EXAMPLE_SIG]) == 0
        assert capsys.readouterr().out == (GOLDEN / "analyze_example.json").read_text()

    def test_relate(self, capsys):
        assert main(["relate", "--sig1", EXAMPLE_SIG, "--sig2", EXAMPLE_ALT_SIG]) == 0
        assert capsys.readouterr().out == (GOLDEN / "relate_example.txt").read_text()


class TestCommands:
    def test_canon_merges_rotations(self, capsys):
        assert main(["canon", "--sig", "abc + 2bca"]) == 0
        assert capsys.readouterr().out == "3abc\n"

    def test_relate_identical(self, capsys):
        assert main(["relate", "--sig1", "abc + 2bca", "--sig2", "3abc"]) == 0
        assert capsys.readouterr().out == "identical\n"

    def test_random_single_node(self, capsys):
        assert main(["random", "--nodes", "1", "--kappa", "5", "--seed", "1"]) == 0
        assert capsys.readouterr().out == "5a\n"

    def test_random_is_deterministic(self, capsys):
        main(["random", "--nodes", "6", "--kappa", "40", "--seed", "9"])
        first = capsys.readouterr().out
        main(["random", "--nodes", "6", "--kappa", "40", "--seed", "9"])
        assert capsys.readouterr().out == first

    def test_premier_complete_three(self, capsys):
        assert main(["premier", "--complete", "3"]) == 0
        sig_line, json_line = capsys.readouterr().out.splitlines()
        assert sig_line == "ab + abc + ac + acb + bc"
        doc = json.loads(json_line)
        assert doc["matrix"] == [[0, 2, 2], [2, 0, 2], [2, 2, 0]]

    def test_premier_with_self_loops(self, capsys):
        assert main(["premier", "--complete", "2", "--self-loops"]) == 0
        sig_line, json_line = capsys.readouterr().out.splitlines()
        assert sig_line == "a + ab + b"
        assert json.loads(json_line)["matrix"] == [[1, 1], [1, 1]]

    def test_premier_from_graph_file(self, capsys, tmp_path):
        path = write_matrix(tmp_path, [[0, 1], [1, 1]])
        assert main(["premier", "--graph", path]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "ab + b"

    def test_markov(self, capsys, tmp_path):
        path = write_matrix(tmp_path, [[0, 1], ["1/2", "1/2"]])
        assert main(["markov", "--matrix", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"nodes": ["a", "b"], "matrix": [[0, 1], [1, 1]]}

    def test_check_reports_exactly_three_verdicts(self, capsys, tmp_path):
        path = write_matrix(tmp_path, EXAMPLE_MATRIX)
        assert main(["check", "--matrix", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"premagic": True, "irreducible": True, "idealFlow": True}

    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "net.json"
        assert main(["compose", "--sig", EXAMPLE_SIG, "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text() == (GOLDEN / "compose_example.json").read_text()

    def test_matrix_from_stdin(self, capsys, monkeypatch):
        doc = {"nodes": ["a", "b"], "matrix": [[0, 2], [2, 0]]}
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
        assert main(["decompose", "--matrix", "-"]) == 0
        assert capsys.readouterr().out == "2ab\n"

    def test_compose_decompose_compose_round_trip(self, capsys, tmp_path):
        main(["compose", "--sig", "2ab + abc + c"])
        first = capsys.readouterr().out
        path = tmp_path / "round.json"
        path.write_text(first)
        main(["decompose", "--matrix", str(path)])
        sig = capsys.readouterr().out.strip()
        main(["compose", "--sig", sig])
        assert capsys.readouterr().out == first


class TestExitCodes:
    def test_signature_syntax_error_is_usage(self, capsys):
        assert main(["canon", "--sig", "a + + b"]) == 1
        assert "position 4" in capsys.readouterr().err

    def test_malformed_matrix_file_is_usage(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"nodes": ["a"]}')
        assert main(["check", "--matrix", str(path)]) == 1
        assert "matrix" in capsys.readouterr().err

    def test_missing_file_is_usage(self, capsys, tmp_path):
        assert main(["check", "--matrix", str(tmp_path / "absent.json")]) == 1

    def test_missing_flag_is_usage(self, capsys):
        assert main(["compose"]) == 1
        assert "--sig" in capsys.readouterr().err

    def test_unknown_subcommand_is_usage(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_no_subcommand_is_usage(self, capsys):
        assert main([]) == 1

    def test_infeasible_kappa_is_domain_error(self, capsys):
        assert main(["random", "--nodes", "3", "--kappa", "2", "--seed", "0"]) == 2
        assert "total flow 2 cannot cover 3 nodes" in capsys.readouterr().err

    def test_decompose_unbalanced_is_domain_error(self, capsys, tmp_path):
        path = write_matrix(tmp_path, [[0, 2], [1, 0]])
        assert main(["decompose", "--matrix", path]) == 2
        assert "premagic" in capsys.readouterr().err

    def test_strict_compose_rejects_disconnected(self, capsys):
        assert main(["compose", "--sig", "ab + cd", "--strict"]) == 2

    def test_premier_one_way_support_is_domain_error(self, capsys, tmp_path):
        path = write_matrix(tmp_path, [[0, 1], [0, 0]])
        assert main(["premier", "--graph", path]) == 2

    def test_linear_witness_exits_two(self, capsys, tmp_path):
        path = write_matrix(tmp_path, NONNEG_FAIL_MATRIX)
        assert main(["decompose", "--matrix", path, "--method", "linear"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "exact witness" in captured.err
        assert "ac: -1" in captured.err

    def test_linear_on_example_matrix_succeeds(self, capsys, tmp_path):
        path = write_matrix(tmp_path, EXAMPLE_MATRIX)
        assert main(["decompose", "--matrix", path, "--method", "linear"]) == 0
        assert capsys.readouterr().out == "a + abd + 3b + bcd\n"


class TestHelp:
    @pytest.mark.parametrize("args", [["--help"], ["compose", "--help"]])
    def test_help_exits_zero(self, capsys, args):
        assert main(args) == 0
        assert "usage" in capsys.readouterr().out
