import json

import pytest

from starcolor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def last_json(text):
    return json.loads(text.strip().splitlines()[-1])


@pytest.fixture
def k4_file(tmp_path, capsys):
    path = tmp_path / "k4.json"
    assert run(capsys, "gen", "--family", "k4", "--out", str(path))[0] == 0
    return path


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_gen_writes_graph_json(k4_file):
    doc = json.loads(k4_file.read_text())
    assert doc["order"] == 4 and len(doc["edges"]) == 6


def test_gen_complete_halin_from_spec(tmp_path, capsys):
    spec = write(tmp_path / "spec.json", [5, 5, 5])
    out = tmp_path / "g.json"
    assert run(capsys, "gen", "--family", "complete-halin", "--spec", spec, "--out", str(out))[0] == 0
    doc = json.loads(out.read_text())
    assert doc["order"] == 19 and "halin" in doc


def test_gen_missing_parameter_is_input_error(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "--family", "necklace", "--out", str(tmp_path / "x.json"))
    assert code == 2 and json.loads(err)["error"] == "BAD_PARAMS"


def test_exact_prints_index(k4_file, capsys):
    code, out, _ = run(capsys, "exact", "--graph", str(k4_file))
    doc = last_json(out)
    assert code == 0 and doc["k"] == 5 and len(doc["certificate"]) == 6 and doc["nodes"] > 0


def test_exact_max_k_infeasible(k4_file, capsys):
    code, out, _ = run(capsys, "exact", "--graph", str(k4_file), "--max-k", "4")
    assert code == 1 and last_json(out)["status"] == "infeasible"
    code, out, _ = run(capsys, "exact", "--graph", str(k4_file), "--max-k", "2")
    assert code == 1


def test_exact_budget_exhausted(tmp_path, capsys):
    g = tmp_path / "k5.json"
    run(capsys, "gen", "--family", "k5", "--out", str(g))
    code, out, _ = run(capsys, "exact", "--graph", str(g), "--budget", "20")
    assert code == 4 and last_json(out)["status"] == "budget_exhausted"


def test_verify_modes(k4_file, tmp_path, capsys):
    good = write(tmp_path / "good.json", {"colors": [1, 2, 3, 4, 5, 1]})
    code, out, _ = run(capsys, "verify", "--graph", str(k4_file), "--coloring", good)
    assert code == 0 and last_json(out)["ok"]
    bad = write(tmp_path / "bad.json", {"colors": [1, 3, 2, 4, 2, 1]})
    code, out, _ = run(capsys, "verify", "--graph", str(k4_file), "--coloring", bad)
    doc = last_json(out)
    assert code == 1 and doc["violation"]["kind"] == "BicoloredCycle4"
    code, _, _ = run(capsys, "verify", "--graph", str(k4_file), "--coloring", bad, "--mode", "proper")
    assert code == 0


def test_verify_strong_mode(tmp_path, capsys):
    g = tmp_path / "p5.json"
    run(capsys, "gen", "--family", "path-square", "--n", "5", "--out", str(g))
    sub = write(tmp_path / "sub.json", [[1, 2], [3, 4]])
    same = write(tmp_path / "same.json", {"colors": [1, 1]})
    diff = write(tmp_path / "diff.json", {"colors": [1, 2]})
    args = ["verify", "--graph", str(g), "--mode", "strong", "--sub", sub, "--coloring"]
    assert run(capsys, *args, diff)[0] == 0
    code, out, _ = run(capsys, *args, same)
    assert code == 1 and last_json(out)["violation"]["kind"] == "StrongConflict"
    code, _, err = run(capsys, "verify", "--graph", str(g), "--mode", "strong", "--coloring", diff)
    assert code == 2


def test_verify_rejects_bad_input(k4_file, tmp_path, capsys):
    short = write(tmp_path / "short.json", {"colors": [1, 2]})
    code, _, err = run(capsys, "verify", "--graph", str(k4_file), "--coloring", short)
    assert code == 2 and json.loads(err)["error"] == "COLORING_SIZE_MISMATCH"
    zero = write(tmp_path / "zero.json", {"colors": [0, 1, 2, 3, 4, 5]})
    assert run(capsys, "verify", "--graph", str(k4_file), "--coloring", zero)[0] == 2
    code, _, _ = run(capsys, "verify", "--graph", str(tmp_path / "missing.json"), "--coloring", zero)
    assert code == 2
    loop = write(tmp_path / "loop.json", {"order": 2, "edges": [[1, 1]]})
    code, _, err = run(capsys, "exact", "--graph", loop)
    assert code == 2 and json.loads(err)["error"] == "LOOP_EDGE"


@pytest.mark.parametrize(
    "gen_args, algorithm, limit",
    [
        (["--family", "necklace", "--h", "5"], "auto", 5),
        (["--family", "necklace", "--h", "4"], "auto", 6),
        (["--family", "cubic-halin", "--leaves", "17", "--seed", "3"], "cubic-halin", 6),
        (["--family", "path-square", "--n", "9"], "auto", 6),
        (["--family", "cycle-square", "--n", "12"], "auto", 9),
        (["--family", "petersen3n", "--n", "4"], "auto", 5),
        (["--family", "petersen", "--m", "15", "--n", "5"], "petersen3n", 5),
        (["--family", "star", "--n", "5"], "auto", 5),
    ],
)
def test_color_then_verify(tmp_path, capsys, gen_args, algorithm, limit):
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    assert run(capsys, "gen", *gen_args, "--out", str(g))[0] == 0
    code, out, _ = run(capsys, "color", "--algorithm", algorithm, "--in", str(g), "--out", str(c))
    assert code == 0
    assert last_json(out)["colors_used"] <= limit
    code, out, _ = run(capsys, "verify", "--graph", str(g), "--coloring", str(c))
    assert code == 0


def test_color_complete_halin(tmp_path, capsys):
    spec = write(tmp_path / "spec.json", [[2, 3], [4, 5], [3, 3]])
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    run(capsys, "gen", "--family", "complete-halin", "--spec", spec, "--out", str(g))
    code, out, _ = run(capsys, "color", "--in", str(g), "--out", str(c))
    assert code == 0 and last_json(out)["algorithm"] == "complete-halin"


def test_color_wheel_needs_fallback(tmp_path, capsys):
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    run(capsys, "gen", "--family", "wheel", "--n", "7", "--out", str(g))
    code, _, err = run(capsys, "color", "--algorithm", "complete-halin", "--in", str(g), "--out", str(c))
    assert code == 2 and json.loads(err)["error"] == "IS_WHEEL"
    code, out, _ = run(
        capsys, "color", "--algorithm", "complete-halin", "--in", str(g), "--out", str(c), "--fallback", "exact"
    )
    doc = last_json(out)
    assert code == 0 and doc["fallback"] and doc["algorithm"] == "exact"
    assert run(capsys, "verify", "--graph", str(g), "--coloring", str(c))[0] == 0


def test_color_errors(tmp_path, capsys):
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    run(capsys, "gen", "--family", "cycle", "--n", "6", "--out", str(g))
    code, _, err = run(capsys, "color", "--in", str(g), "--out", str(c))
    assert code == 2 and json.loads(err)["error"] == "NO_ALGORITHM"
    code, _, err = run(capsys, "color", "--algorithm", "path-square", "--in", str(g), "--out", str(c))
    assert code == 2 and json.loads(err)["error"] == "GRAPH_MISMATCH"
    code, _, err = run(capsys, "color", "--algorithm", "cubic-halin", "--in", str(g), "--out", str(c))
    assert code == 2 and json.loads(err)["error"] == "NOT_HALIN"


def test_export_dot(k4_file, tmp_path, capsys):
    code, out, _ = run(capsys, "export", "--format", "dot", "--graph", str(k4_file))
    assert code == 0 and out.startswith("graph") and out.count(" -- ") == 6
    assert all("label" not in line for line in out.splitlines() if " -- " in line)
    col = write(tmp_path / "c.json", {"colors": [1, 2, 3, 4, 5, 1]})
    dot = tmp_path / "k4.dot"
    assert run(capsys, "export", "--graph", str(k4_file), "--coloring", col, "--out", str(dot))[0] == 0
    labels = [line.split('label="')[1].split('"')[0] for line in dot.read_text().splitlines() if " -- " in line]
    assert labels == ["1", "2", "3", "4", "5", "1"]
    short = write(tmp_path / "s.json", {"colors": [1]})
    assert run(capsys, "export", "--graph", str(k4_file), "--coloring", short)[0] == 2


def test_figure_subcommand(tmp_path, capsys):
    out = tmp_path / "fig.json"
    assert run(capsys, "figure", "cycle-square-7", "--out", str(out))[0] == 0
    assert len(json.loads(out.read_text())["colors"]) == 14


def test_unknown_subcommand_exits_with_usage(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
