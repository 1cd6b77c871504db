import json
import shlex

import pytest

from starcolor.bench import (
    DISCREPANCY,
    MATCH,
    TIMEOUT,
    WITHIN,
    BenchEntry,
    BenchReport,
    _witness,
    derive_status,
    render_markdown,
    write_report,
)
from starcolor.cli import main
from starcolor.families import cycle


@pytest.mark.parametrize(
    "relation, claimed, computed, status",
    [
        ("=", 5, 5, MATCH),
        ("=", 5, 6, DISCREPANCY),
        ("<=", 6, 5, WITHIN),
        ("<=", 6, 6, WITHIN),
        ("<=", 6, 7, DISCREPANCY),
        (">=", 6, 6, MATCH),
        (">=", 6, 5, DISCREPANCY),
        ("=", 5, None, TIMEOUT),
        ("<=", 5, "CONSTRUCTION_FAILED", DISCREPANCY),
    ],
)
def test_derive_status(relation, claimed, computed, status):
    assert derive_status(relation, claimed, computed) == status


def _entry(label, relation, claimed, computed, witness=None):
    return BenchEntry("S", label, relation, claimed, "somewhere", computed, "starcolor exact", "", witness)


def test_exit_code_precedence():
    ok = _entry("a", "=", 1, 1)
    bad = _entry("b", "=", 1, 2)
    slow = _entry("c", "=", 1, None)
    assert BenchReport([ok], []).exit_code == 0
    assert BenchReport([ok, bad], []).exit_code == 3
    assert BenchReport([bad, slow], []).exit_code == 4


def test_discrepancy_gets_a_replayable_witness(tmp_path, capsys):
    g = cycle(4)
    colors = [1, 2, 1, 2]
    entry = _entry("C4 forged", "<=", 2, "CONSTRUCTION_FAILED", _witness(g, colors, {"case": "test"}))
    report = BenchReport([_entry("fine", "=", 3, 3), entry], ["a note"])
    paths = write_report(report, tmp_path)
    doc = json.loads(paths["json"].read_text())
    assert doc["exit_code"] == 3
    rel = doc["entries"][1]["witness"]
    assert rel and doc["entries"][0]["witness"] is None
    wit = json.loads((tmp_path / rel).read_text())
    assert wit["violation"]["kind"] == "BicoloredCycle4"
    gfile, cfile = tmp_path / "g.json", tmp_path / "c.json"
    gfile.write_text(json.dumps(wit["graph"]))
    cfile.write_text(json.dumps(wit["coloring"]))
    assert main(["verify", "--graph", str(gfile), "--coloring", str(cfile)]) == 1
    capsys.readouterr()
    assert rel in paths["markdown"].read_text()


def test_markdown_is_deterministic_and_sectioned():
    report = BenchReport([_entry("x", "=", 4, 4), _entry("y", "<=", 9, 8)], ["note"])
    a, b = render_markdown(report), render_markdown(report)
    assert a == b and "## S" in a and "note" in a


def _replay(command, workdir, monkeypatch, capsys):
    monkeypatch.chdir(workdir)
    code, out = 0, ""
    for part in command.split(" && "):
        argv = shlex.split(part)
        assert argv[0] == "starcolor"
        code = main(argv[1:])
        out = capsys.readouterr().out
    return code, out


def test_concrete_entries_replay_through_the_cli(paper_run, tmp_path, monkeypatch, capsys):
    _, _, _, report = paper_run
    capsys.readouterr()
    placeholders = {"N", "H", "L", "S", "SPEC.json", "TREE.json"}
    replayed = 0
    for entry in report["entries"]:
        if placeholders & set(shlex.split(entry["command"].replace("&&", " "))):
            continue
        code, out = _replay(entry["command"], tmp_path, monkeypatch, capsys)
        doc = json.loads(out.strip().splitlines()[-1])
        if "--max-k" in entry["command"]:
            # lower-bound entries: infeasible below the claim
            assert code == 1 and doc["status"] == "infeasible"
        elif " exact " in entry["command"]:
            assert code == 0 and doc["k"] == entry["computed"]
        else:
            assert code == 0 and doc["colors_used"] == entry["computed"]
        replayed += 1
    assert replayed >= 20


def test_bench_subcommand_writes_report(paper_run):
    code, _, out, doc = paper_run
    assert (out / "report.md").exists()
    assert doc["exit_code"] == code
    assert {e["status"] for e in doc["entries"]} <= {MATCH, WITHIN, DISCREPANCY, TIMEOUT}


def test_bench_rejects_unknown_suite(tmp_path):
    with pytest.raises(SystemExit):
        main(["bench", "--suite", "other", "--out", str(tmp_path)])
