import json
import subprocess
import sys

import pytest

from lichor import parse_instance, parse_report
from lichor.cli import main


@pytest.fixture()
def instance_file(tmp_path):
    rc = main(["gen", "--seed", "11", "--blocks", "2", "--max-mult", "2",
               "--max-centers", "3", "--out", str(tmp_path / "inst.json")])
    assert rc == 0
    return tmp_path / "inst.json"


def test_solve_writes_report_and_verifies(tmp_path, instance_file):
    report = tmp_path / "rep.json"
    assert main(["solve", str(instance_file), "--report", str(report)]) == 0
    rep = parse_report(report.read_text())
    assert rep.conformant
    assert main(["verify", str(instance_file), str(report)]) == 0


def test_solve_renders_figure(tmp_path, instance_file):
    figure = tmp_path / "out.png"
    rc = main(["solve", str(instance_file), "--report", str(tmp_path / "r.json"),
               "--figure", str(figure)])
    assert rc == 0
    assert figure.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_chi_prints_value(capsys, instance_file):
    assert main(["chi", str(instance_file)]) == 0
    out = capsys.readouterr().out.strip()
    assert out.isdigit()


def test_classify_lists_blocks(capsys, instance_file):
    assert main(["classify", str(instance_file)]) == 0
    out = capsys.readouterr().out
    assert "block 0:" in out and "cut vertices:" in out


def test_not_line_perfect_exit_code(tmp_path, capsys):
    doc = {"vertices": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]],
           "lists": [[1, 2, 3]] * 5}
    path = tmp_path / "c5.json"
    path.write_text(json.dumps(doc))
    assert main(["solve", str(path)]) == 2
    assert main(["classify", str(path)]) == 2
    assert main(["chi", str(path)]) == 2


def test_undersized_lists_exit_code(tmp_path):
    doc = {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]],
           "lists": [[1, 2], [1, 2, 3], [1, 2, 3]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["solve", str(path)]) == 1


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{nope")
    assert main(["solve", str(path)]) == 1


def test_verify_rejects_tampered_report(tmp_path, instance_file):
    report = tmp_path / "rep.json"
    main(["solve", str(instance_file), "--report", str(report)])
    doc = json.loads(report.read_text())
    doc["colors"][0] = doc["colors"][1]  # parallel or adjacent clash is likely
    report.write_text(json.dumps(doc))
    rc = main(["verify", str(instance_file), str(report)])
    inst = parse_instance(instance_file.read_text())
    # tampering either broke properness or list membership, or happened
    # to stay valid; recompute to know which outcome to expect
    from lichor import verify_coloring
    expect = verify_coloring(inst.graph, frozenset(inst.graph.edge_ids),
                             inst.lists,
                             {e: c for e, c in enumerate(doc["colors"])})
    assert rc == (0 if expect else 1)


def test_oracle_feasible_and_not(tmp_path, capsys):
    feasible = {"vertices": 2, "edges": [[0, 1]], "lists": [[7]]}
    p1 = tmp_path / "f.json"
    p1.write_text(json.dumps(feasible))
    assert main(["oracle", str(p1)]) == 0
    assert capsys.readouterr().out.strip() == "7"
    infeasible = {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]],
                  "lists": [[1], [1], [1]]}
    p2 = tmp_path / "i.json"
    p2.write_text(json.dumps(infeasible))
    assert main(["oracle", str(p2)]) == 1


def test_gen_seed_env_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LICHOR_SEED", "99")
    main(["gen", "--seed", "3"])
    first = capsys.readouterr().out
    main(["gen", "--seed", "4"])
    second = capsys.readouterr().out
    assert first == second
    monkeypatch.delenv("LICHOR_SEED")
    main(["gen", "--seed", "3"])
    assert capsys.readouterr().out != first


def test_gen_identical_lists_flag(capsys):
    assert main(["gen", "--seed", "2", "--identical-lists"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(set(map(tuple, doc["lists"]))) == 1


def test_module_entry_point(tmp_path, instance_file):
    out = subprocess.run([sys.executable, "-m", "lichor", "chi",
                          str(instance_file)],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip().isdigit()
