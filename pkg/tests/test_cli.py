import json

import pytest

from app.core.errors import EXIT_INPUT, EXIT_OK
from app.main import main


def test_info_on_bundled_algebra(capsys):
    assert main(["info", "a2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "dimension: 3" in out
    assert "gldim: 1" in out


def test_info_json_record(capsys):
    assert main(["info", "k_x2", "--json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert record["kind"] == "algebra"
    assert record["summary"]["selfinjective"] is True


def test_ind_lists_catalog(capsys):
    assert main(["ind", "a2", "--json"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "A2: 3 indecomposables"
    records = [json.loads(line) for line in lines if line.startswith("{")]
    assert [r["dims"] for r in records] == [[0, 1], [1, 0], [1, 1]]
    assert records[1]["tau"] == 0


def test_dot_to_file(tmp_path):
    target = tmp_path / "a2.dot"
    assert main(["dot", "a2", "-o", str(target)]) == EXIT_OK
    assert target.read_text().startswith("digraph")


@pytest.mark.parametrize("verb", ["1ag", "auslander", "tilted", "main"])
def test_check_verbs(capsys, verb):
    assert main(["check", verb, "auslander_x2"]) == EXIT_OK
    assert "auslander" in capsys.readouterr().out.lower()


def test_check_from_file_path(tmp_path, capsys):
    path = tmp_path / "kx2.alg"
    path.write_text("name: loop\nvertices: 1\narrow: x: 1 -> 1\nrelation: x.x = 0\n")
    assert main(["check", "1ag", str(path)]) == EXIT_OK
    assert "1-Auslander-Gorenstein = True" in capsys.readouterr().out


def test_malformed_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "bad.alg"
    path.write_text("vertices: 2\narrow: a: 1 -> 5\n")
    assert main(["info", str(path)]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err


def test_missing_file_is_an_input_error(capsys):
    assert main(["info", "no_such_algebra"]) == EXIT_INPUT


def test_usage_errors_are_input_errors(capsys):
    assert main(["frobnicate"]) == EXIT_INPUT
    assert main(["info", "a2", "--prime", "4"]) == EXIT_INPUT
    assert main(["check", "wild", "a2"]) == EXIT_INPUT


def test_non_admissible_algebra_is_an_input_error(tmp_path):
    path = tmp_path / "free.alg"
    path.write_text("vertices: 1\narrow: x: 1 -> 1\n")
    assert main(["info", str(path), "--nilpotency-cap", "4"]) == EXIT_INPUT


def test_corpus_directory(tmp_path, capsys):
    (tmp_path / "a.alg").write_text("name: A2\nvertices: 2\narrow: a: 1 -> 2\n")
    (tmp_path / "b.alg").write_text("vertices: 1\nbogus: 1\n")
    assert main(["corpus", str(tmp_path), "--json"]) == EXIT_INPUT
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records[0]["kind"] == "algebra"
    assert all(r["algebra"] == "A2" for r in records[1:])


@pytest.mark.corpus
def test_suite_output_is_deterministic(capsys):
    main(["suite", "auslander_x2", "--json", "--seed", "5"])
    first = [line for line in capsys.readouterr().out.splitlines() if line.startswith("{")]
    main(["suite", "auslander_x2", "--json", "--seed", "5"])
    second = [line for line in capsys.readouterr().out.splitlines() if line.startswith("{")]
    assert first and first == second
