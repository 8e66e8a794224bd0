from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from trigraphs.cli import main
from trigraphs.decomposer import classify
from trigraphs.generators import complete, cycle, prism
from trigraphs.triformat import format_tri, parse_tri


def run(argv, stdin: str = "", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_pipeline_generate_classify():
    gen = subprocess.run([sys.executable, "-m", "trigraphs.cli", "generate", "prism", "1", "1", "1"],
                         capture_output=True, text=True, check=True)
    cls = subprocess.run([sys.executable, "-m", "trigraphs.cli", "classify"], input=gen.stdout,
                         capture_output=True, text=True)
    assert cls.returncode == 0
    assert cls.stdout.split() == ["LineTrigraphBasic"]


def test_classify_matches_library(cli, tmp_path):
    g = cycle(5)
    path = tmp_path / "c5.tri"
    path.write_text(format_tri(g))
    code, out, _ = cli(["classify", str(path)])
    assert code == 0
    assert set(out.split()) == {str(x) for x in classify(g)}


def test_free_check_k4(cli):
    code, out, _ = cli(["free-check", "-", "--pattern", "isk4"], format_tri(complete(4)))
    assert code == 1
    assert len(json.loads(out)["vertices"]) == 4
    code, out, _ = cli(["free-check", "--pattern", "isk4"], format_tri(prism(1, 1, 1)))
    assert code == 0 and out.strip() == "free"


def test_cutset(cli):
    code, out, _ = cli(["cutset", "--kind", "stable2"], format_tri(cycle(4)))
    assert code == 0 and json.loads(out)["kind"] == "Stable2Cutset"
    code, out, _ = cli(["cutset", "--kind", "clique"], format_tri(cycle(5)))
    assert code == 0 and out.strip() == "none"


@pytest.mark.parametrize("cls,expect", [
    ("sp", "no"), ("bipartite", "no"), ("linetrigraph", "qualified"), ("cyc3conn", "yes"),
])
def test_recognize(cli, cls, expect):
    code, out, _ = cli(["recognize", "--class", cls], format_tri(prism(1, 1, 1)))
    assert code == 0 and expect in out


def test_recognize_cycle_not_cyclically_3_connected(cli):
    code, out, _ = cli(["recognize", "--class", "cyc3conn"], format_tri(cycle(6)))
    assert code == 0 and out.strip() == "no"
    code, _, err = cli(["recognize", "--class", "cyc3conn"], format_tri(cycle(6, semi=[(0, 1)])))
    assert code == 2 and "semi" in err


def test_recognize_prism(cli):
    code, out, _ = cli(["recognize", "--class", "prism"], format_tri(prism(1, 2, 1)))
    assert code == 0 and len(json.loads(out)["branches"]) == 3


def test_decompose_to_file(cli, tmp_path):
    out_file = tmp_path / "tree.json"
    code, _, _ = cli(["decompose", "--out", str(out_file)], format_tri(cycle(6)))
    assert code == 0
    assert json.loads(out_file.read_text())["leaf"] is True


def test_generate_is_deterministic(cli):
    _, a, _ = cli(["generate", "random", "7", "--seed", "4"])
    _, b, _ = cli(["generate", "random", "7", "--seed", "4"])
    assert a == b and parse_tri(a).n == 7


def test_generate_list_family_and_semi(cli):
    code, out, _ = cli(["generate", "k4_line", "1", "1", "1", "1", "1", "1"])
    assert code == 0 and parse_tri(out).n == 12
    code, out, _ = cli(["generate", "cycle", "5", "--semi", "0-1"])
    assert parse_tri(out).value(0, 1) == 0


def test_verify_theorem(cli):
    code, out, _ = cli(["verify", "theorem", "--n", "4"])
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["stats"]["free_instances"] == 665


def test_verify_property(cli):
    code, out, _ = cli(["verify", "K33-comp", "--samples", "5", "--seed", "2"])
    assert code == 0 and json.loads(out)["instances_checked"] == 5


def test_errors(cli, tmp_path):
    code, _, err = cli(["classify"], "trigraph 3\n0 1 x\n")
    assert code == 2 and "malformed" in err
    code, _, err = cli(["classify", str(tmp_path / "missing.tri")])
    assert code == 2
    code, _, err = cli(["generate", "nonsense"])
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--bogus"])
    assert exc.value.code == 2
