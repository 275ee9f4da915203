import io
import json
import sys
from pathlib import Path

import pytest

from himena_mdim.cli import CliConfig, main, run
from himena_mdim.constructions import lambda_graph
from himena_mdim.formats import emit_graph6, parse_graph6


@pytest.fixture(autouse=True)
def _single_job(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("MDIM_JOBS", raising=False)


def test_mdim_family_certificate(capsys: pytest.CaptureFixture[str]):
    assert main(["mdim", "--family", "g6", "--certificate"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("mdim = 6\n")
    assert "basis: 0 1 2 3 4 5" in out
    assert "v0: (0, 1, 1, 2, 2, 3)" in out


def test_mdim_json(capsys: pytest.CaptureFixture[str]):
    assert main(["mdim", "--family", "path:4", "--output-format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dimension"] == 2
    assert doc["basis"] == [0, 3]
    assert doc["graph6"] == "Ch"


def test_mdim_no_prune_same_dimension(capsys: pytest.CaptureFixture[str]):
    for flags in ([], ["--no-prune"]):
        main(["mdim", "--family", "cycle:6", "--output-format", "json", *flags])
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line)["dimension"] for line in lines] == [3, 3]


def test_mdim_batch_stdin(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\nA_\nCh\n"))
    assert main(["mdim", "-", "--output-format", "json", "--jobs", "2"]) == 0
    docs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [d["graph6"] for d in docs] == ["Bw", "A_", "Ch"]
    assert [d["dimension"] for d in docs] == [3, 2, 2]


def test_mdim_edgelist_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]):
    path = tmp_path / "p4.edgelist"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert main(["mdim", str(path)]) == 0
    assert capsys.readouterr().out.startswith("mdim = 2\n")


def test_mdim_formula(capsys: pytest.CaptureFixture[str]):
    assert main(["mdim", "--family", "wheel:6", "--formula"]) == 0
    out = capsys.readouterr().out
    assert "mdim = 5" in out
    assert "formula: one-universal" in out


def test_analyze(capsys: pytest.CaptureFixture[str]):
    assert main(["analyze", "--family", "path:4", "--output-format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["cut_vertices"] == [1, 2]
    assert doc["zeta"] == 2
    assert doc["n"] == 4


def test_construct_graph6(capsys: pytest.CaptureFixture[str]):
    assert main(["construct", "--family", "lambda:5,5", "--output-format", "graph6"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("\n")
    assert out.count("\n") == 1
    assert parse_graph6(out).n == 13
    assert out.strip() == emit_graph6(lambda_graph(5, 5))


@pytest.mark.parametrize("fmt,start", [("dot", "graph G {"), ("edgelist", "6 10\n")])
def test_construct_formats(fmt: str, start: str, capsys: pytest.CaptureFixture[str]):
    assert main(["construct", "--family", "g6", "--output-format", fmt]) == 0
    out = capsys.readouterr().out
    assert out.startswith(start)
    assert out.endswith("\n")


def test_convert(tmp_path: Path, capsys: pytest.CaptureFixture[str]):
    path = tmp_path / "k3.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    assert main(["convert", str(path), "--input-format", "edgelist"]) == 0
    assert capsys.readouterr().out == "Bw\n"


def test_verify(capsys: pytest.CaptureFixture[str]):
    assert main(["verify", "characterization", "--n", "3", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("[PASSED] characterization (n=3)")
    assert "instances checked: 4" in out


def test_verify_json_timing(capsys: pytest.CaptureFixture[str]):
    argv = ["verify", "characterization", "--n", "3", "--jobs", "1", "--output-format", "json"]
    main(argv)
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True
    assert "elapsed" not in doc
    main([*argv, "--timing"])
    assert "elapsed" in json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "argv",
    [
        ["mdim", "--family", "nope:3"],
        ["mdim", "--family", "cycle:2"],
        ["mdim"],
        ["mdim", "-", "--family", "g6"],
        ["verify", "nope"],
        ["mdim", "--family", "path:20"],
        ["convert", "missing-file.g6"],
        ["verify", "delta", "--jobs", "0"],
        ["mdim", "--family", "g6", "--jobs", "0"],
        ["construct", "--family", "random_tree:1000000000"],
    ],
)
def test_input_errors(argv: list[str], capsys: pytest.CaptureFixture[str]):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_disconnected_input(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]):
    monkeypatch.setattr(sys, "stdin", io.StringIO("C?\n"))
    assert main(["mdim", "-"]) == 2
    assert "not connected" in capsys.readouterr().err


def test_bad_output_format_is_rejected():
    with pytest.raises(SystemExit) as exc_info:
        main(["verify", "characterization", "--output-format", "dot"])
    assert exc_info.value.code == 2


def test_run_with_config():
    out, err = io.StringIO(), io.StringIO()
    config = CliConfig("mdim", family="complete:4", output_format="json")
    assert run(config, stdout=out, stderr=err) == 0
    assert json.loads(out.getvalue())["dimension"] == 4
    bad = CliConfig("analyze", family="g6", output_format="graph6")
    assert run(bad, stdout=out, stderr=err) == 2
    assert "cannot write" in err.getvalue()
