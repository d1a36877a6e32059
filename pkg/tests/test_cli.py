import json
import subprocess
import sys

import pytest

from cagelift.analysis import remote_pairs
from cagelift.cli import main
from cagelift.io import read_graph6, read_voltage_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def g10_file(tmp_path, capsys):
    path = tmp_path / "g10.vg"
    assert run(capsys, "construct", "--family", "G10", "--output", str(path))[0] == 0
    return path


def test_construct_emits_voltage_text(capsys):
    code, out, _ = run(capsys, "construct", "--family", "G8", "--alpha", "1", "--beta", "2", "--gamma", "2", "--delta", "1")
    assert code == 0
    g = read_voltage_graph(out)
    assert len(g.arcs) == 15


def test_construct_h12_v_and_dot(capsys):
    code, out, _ = run(capsys, "construct", "--family", "H12", "--h12-v", "5", "--format", "dot")
    assert code == 0 and 'label="5"' in out


def test_lift_and_analyze(g10_file, tmp_path, capsys):
    lifted = tmp_path / "l.g6"
    assert run(capsys, "lift", str(g10_file), "--m", "7", "-o", str(lifted))[0] == 0
    assert read_graph6(lifted.read_text()).n == 170
    code, out, _ = run(capsys, "analyze", str(lifted))
    assert code == 0
    assert out.splitlines()[:3] == ["order=170", "size=259", "girth=10"]
    code, out, _ = run(capsys, "analyze", str(g10_file), "--m", "7", "--json")
    assert json.loads(out)["degree_histogram"] == {"3": 168, "7": 2}


def test_certify_table_and_census(g10_file, capsys):
    code, out, _ = run(capsys, "certify", str(g10_file), "--girth", "10", "--m-min", "3", "--m-max", "7", "--census")
    lines = out.splitlines()
    assert lines[0] == "m\tverdict\twitness"
    verdicts = {int(l.split("\t")[0]): l.split("\t")[1] for l in lines[1:6]}
    assert verdicts == {3: "violated", 4: "certified", 5: "certified", 6: "violated", 7: "certified"}
    assert "census max_len=8 directed=82 undirected=41" in out
    assert lines[-1] == "  sums: -3 -2 -1 1 2 3"


def test_certify_json(g10_file, capsys):
    code, out, _ = run(capsys, "certify", str(g10_file), "--girth", "10", "--m-max", "6", "--json")
    data = json.loads(out)
    assert [v["m"] for v in data["verdicts"] if not v["certified"]] == [3, 6]
    assert data["verdicts"][3]["lift_cycle_length"] == 8


def test_identify_and_convert(tmp_path, capsys):
    vg = tmp_path / "g6.vg"
    base = tmp_path / "heawood.g6"
    out_path = tmp_path / "glued.g6"
    run(capsys, "construct", "--family", "G6", "--alpha", "1", "--beta", "2", "-o", str(vg))
    run(capsys, "lift", str(vg), "--m", "3", "-o", str(base))
    code, _, _ = run(capsys, "identify", "--base", str(base), "--girth", "6", "--m", "6", "-o", str(out_path))
    assert code == 0 and read_graph6(out_path.read_text()).n == 26
    code, out, _ = run(capsys, "convert", str(out_path), "--format", "edges")
    assert out.startswith("n 26\n")
    x, y = remote_pairs(read_graph6(base.read_text()), 3)[-1]
    code, out, _ = run(capsys, "identify", "--base", str(base), "--girth", "6", "--m", "4", "--x", str(x), "--y", str(y))
    assert code == 0 and read_graph6(out).n == 28
    code, _, err = run(capsys, "identify", "--base", str(base), "--girth", "6", "--m", "4", "--x", "0", "--y", "1")
    assert code == 1 and "NoRemotePair" in err


def test_search_lines(tmp_path, capsys):
    sk = tmp_path / "s.vg"
    run(capsys, "construct", "--family", "G6", "--alpha", "0", "--beta", "0", "-o", str(sk))
    code, out, err = run(capsys, "search", "--skeleton", str(sk), "--free", "5,6", "--girth", "6", "--m-set", "3", "--range", "0..2")
    assert code == 0
    assert out.splitlines() == ["arc x_0 y_0 1; arc x_0 y_0 2", "arc x_0 y_0 2; arc x_0 y_0 1"]
    assert "2 solution(s), 9 candidate(s) tried" in err


def test_search_negative_range(tmp_path, capsys):
    sk = tmp_path / "s.vg"
    run(capsys, "construct", "--family", "G6", "--alpha", "0", "--beta", "0", "-o", str(sk))
    code, out, _ = run(capsys, "search", "--skeleton", str(sk), "--free", "5,6", "--girth", "6", "--m-set", "5", "--range", "-2..2", "--json")
    assert code == 0
    sols = json.loads(out)["solutions"]
    assert [1, 2] in sols and [-1, 1] in sols


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--family", "G8"],
        ["construct", "--family", "T4t"],
        ["search", "--skeleton", "/nonexistent.vg", "--girth", "6", "--m-set", "3"],
        ["lift", "/nonexistent.vg", "--m", "3"],
    ],
)
def test_errors_are_one_line(argv, capsys):
    code, out, err = run(capsys, *argv)
    assert code != 0 and out == ""
    assert err.count("\n") == 1 and err.startswith("cagelift: ")


def test_bad_voltage_file_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.vg"
    bad.write_text("vertex x* pinned\nvertex y* pinned\narc x* y* 0\n")
    code, _, err = run(capsys, "certify", str(bad), "--girth", "6", "--m-max", "5")
    assert code == 1 and "PinnedToPinnedArc: line 3:" in err


def test_collision_exits_nonzero(tmp_path, capsys):
    sk = tmp_path / "s.vg"
    run(capsys, "construct", "--family", "G6", "--alpha", "1", "--beta", "1", "-o", str(sk))
    code, _, err = run(capsys, "lift", str(sk), "--m", "5")
    assert code == 1 and "LiftCollision" in err


def test_outputs_are_byte_identical(g10_file, capsys):
    first = run(capsys, "lift", str(g10_file), "--m", "5", "--format", "dot")[1]
    second = run(capsys, "lift", str(g10_file), "--m", "5", "--format", "dot")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cagelift.cli", "construct", "--family", "K33"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert read_graph6(proc.stdout).n == 6
