import json

from gt_toolkit import cli


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_hilbert_table(capsys):
    status, out, _ = run(capsys, "hilbert", "1", "2", "3", "--t", "4")
    assert status == 0
    rows = [line for line in out.splitlines() if line and line[0].isdigit()]
    values = [int(r.split("|")[1].split()[0]) for r in rows]
    assert values == [1, 4, 10, 19, 31]


def test_classify_output(capsys):
    status, out, _ = run(capsys, "classify", "5", "0,1,3")
    assert status == 0
    assert "is_gt_system = True" in out
    assert "kernel dimension 1" in out


def test_h3t_verified(capsys):
    status, out, _ = run(capsys, "h3t", "2", "--bound", "6")
    assert status == 0
    assert "verified-up-to-bound" in out
    assert "witness [3, 3, 0]" in out  # H_6 is not normal


def test_json_round_trip(capsys):
    for argv in (["hilbert", "1", "2", "3", "--format", "json"],
                 ["betti", "1", "4", "8", "--format", "json"],
                 ["ideal", "5", "0,1,3", "--format", "json"],
                 ["classify", "3", "0,1,2", "--format", "json"]):
        status, out, _ = run(capsys, *argv)
        assert status == 0
        parsed = json.loads(out)
        assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "ideal", "6", "0,1,3")
    _, second, _ = run(capsys, "ideal", "6", "0,1,3")
    assert first == second


def test_usage_errors(capsys):
    assert run(capsys, "hilbert", "2", "1", "3")[0] == 1
    assert run(capsys, "classify", "4", "0,2")[0] == 1  # gcd violation
    assert run(capsys, "classify", "5", "0,x")[0] == 1
    assert run(capsys, "semigroup", "/nonexistent.json")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "invariants", "5", "0,1,3", "--t", "0")[0] == 1


def test_invariants_listing(capsys):
    status, out, _ = run(capsys, "invariants", "8", "0,3,5")
    assert status == 0
    assert "count=7" in out
    assert "x0^6*x1*x2" in out


def test_semigroup_file(tmp_path, capsys):
    path = tmp_path / "semigroup.json"
    path.write_text(json.dumps({
        "dim": 3,
        "generators": [[5, 0, 0], [0, 5, 0], [0, 0, 5], [3, 1, 1],
                       [2, 2, 1], [1, 3, 1]],
    }))
    status, out, _ = run(capsys, "semigroup", str(path), "--bound", "6",
                         "--member", "4,3,3")
    assert status == 0
    assert "counterexample" in out
    assert "member [4, 3, 3]: False" in out


def test_action_file_input(tmp_path, capsys):
    path = tmp_path / "action.json"
    path.write_text(json.dumps({"d": 5, "weights": [0, 1, 3]}))
    status, out, _ = run(capsys, "classify", "--file", str(path))
    assert status == 0 and "is_gt_system = True" in out
    # exactly one input source
    assert run(capsys, "classify", "5", "0,1,3", "--file", str(path))[0] == 1
    assert run(capsys, "classify")[0] == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    status, out, _ = run(capsys, "hilbert", "1", "2", "3",
                         "--format", "json", "--output", str(target))
    assert status == 0 and out == ""
    parsed = json.loads(target.read_text())
    assert parsed["profile"]["theta"] == 3


def test_catalog_note_does_not_change_exit_code(capsys):
    status, out, _ = run(capsys, "hilbert", "1", "3", "6")
    assert status == 0
    assert "note: published catalogue" in out
    assert "FLAG" not in out


def test_internal_discrepancy_exit_code(capsys, monkeypatch):
    # force one route to disagree; the report must flag it and exit 2
    monkeypatch.setattr(cli, "hf_reduced", lambda a, b, d, t: 0)
    status, out, _ = run(capsys, "hilbert", "1", "2", "3", "--t", "1")
    assert status == 2
    assert "FLAG" in out


def test_verify_paper(capsys):
    status, out, _ = run(capsys, "verify-paper")
    assert status == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert lines and all(l.startswith("PASS") for l in lines)
