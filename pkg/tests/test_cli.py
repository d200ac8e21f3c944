import json

import pytest

import reedcheck as rc
from reedcheck.cli import main

C5_G6 = rc.graph_to_graph6(rc.Graph.cycle(5))
C6_G6 = rc.graph_to_graph6(rc.Graph.cycle(6))
K5_G6 = rc.graph_to_graph6(rc.Graph.complete(5))
P4_G6 = rc.graph_to_graph6(rc.Graph.path(4))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def ndjson(out):
    return [json.loads(line) for line in out.splitlines()]


def test_invariants_command(capsys):
    code, out, _ = run(capsys, "invariants", C5_G6, K5_G6, P4_G6)
    assert code == 0
    rows = ndjson(out)
    assert [r["slack"] for r in rows] == [0, 0, 1]
    assert rows[0] == {
        "graph6": C5_G6, "n": 5, "m": 5, "delta": 2, "omega": 2,
        "chi": 3, "alpha": 2, "reed_bound": 3, "slack": 0,
    }


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", C6_G6, C5_G6)
    assert code == 0
    rows = ndjson(out)
    assert rows[0]["member"] is False
    assert rows[0]["witness"] == {"pattern": "P5", "vertices": [0, 1, 2, 3, 4]}
    assert rows[1]["member"] is True


def test_classify_named_families(capsys):
    code, out, _ = run(capsys, "classify", "--family", "3k1", rc.graph_to_graph6(rc.Graph.complete(4)))
    assert code == 0
    assert ndjson(out)[0]["member"] is True


def test_classify_forbid_custom_pattern(capsys):
    # forbidding K2 keeps only edgeless graphs
    code, out, _ = run(capsys, "classify", "--forbid", "A_", "--", C5_G6)
    assert code == 0
    row = ndjson(out)[0]
    assert row["member"] is False and row["witness"]["pattern"] == "A_"


def test_family_and_forbid_are_exclusive(capsys):
    code, _, err = run(capsys, "classify", "--family", "3k1", "--forbid", "A_", "--", C5_G6)
    assert code == 2
    assert "mutually exclusive" in err


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "p5-flagc", "--n-max", "5")
    assert code == 0
    report = ndjson(out)[0]
    assert report["examined"] == 53
    assert report["violation_count"] == 0
    assert report["per_n"]["5"]["members"] == 32


def test_sweep_rejects_out_of_range_n(capsys):
    code, _, err = run(capsys, "sweep", "--n-max", "99")
    assert code == 2
    assert "--n-max" in err


def test_sweep_unknown_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["sweep", "--family", "nope"])
    assert err.value.code == 2


def test_sweep_source_file(capsys, tmp_path):
    src = tmp_path / "graphs.g6"
    src.write_text(f">>graph6<<\n{C5_G6}\n{C6_G6}\n{K5_G6}\n")
    code, out, _ = run(capsys, "sweep", "--source", str(src))
    assert code == 0
    report = ndjson(out)[0]
    assert report["examined"] == 3
    assert report["members"] == 2  # C6 contains an induced P5


def test_sweep_source_lenient_counts_skips(capsys, tmp_path):
    src = tmp_path / "graphs.g6"
    src.write_text(f"{C5_G6}\n!!bad\n{K5_G6}\n")
    code, out, _ = run(capsys, "sweep", "--source", str(src), "--lenient")
    assert code == 0
    assert ndjson(out)[0]["skipped_lines"] == 1
    code, _, err = run(capsys, "sweep", "--source", str(src), "--strict")
    assert code == 2
    assert "line 2" in err


def test_sweep_workers_byte_identical(capsys):
    outputs = []
    for workers in ("1", "2", "8"):
        code, out, _ = run(capsys, "sweep", "--n-max", "5", "--workers", workers)
        assert code == 0
        row = ndjson(out)[0]
        row.pop("wall_time_s")
        outputs.append(json.dumps(row, sort_keys=True))
    assert outputs[0] == outputs[1] == outputs[2]


def test_workers_env_default(capsys, monkeypatch):
    monkeypatch.setenv("REED_WORKERS", "2")
    code, out, _ = run(capsys, "sweep", "--n-max", "4")
    assert code == 0
    assert ndjson(out)[0]["examined"] == 19


def test_audit_command(capsys):
    code, out, _ = run(capsys, "audit", C5_G6)
    assert code == 0
    row = ndjson(out)[0]
    assert row["member"] is True
    assert row["counters"]["S2"]["holds"] >= 1
    assert row["violations"] == []


def test_audit_violations_on_non_member_keep_exit_zero(capsys):
    code, out, _ = run(capsys, "audit", C6_G6)
    row = ndjson(out)[0]
    assert row["member"] is False
    assert code == 0


def test_audit_violations_on_member_flip_exit_code(capsys):
    # against a custom family that the violating host does belong to,
    # the same violations make the run fail
    code, out, _ = run(capsys, "audit", "--forbid", "D~{", "--", "E@V_")
    row = ndjson(out)[0]
    assert row["member"] is True
    assert len(row["violations"]) >= 1
    assert code == 1


def test_audit_certificate_replay_round_trip(capsys):
    host = "E@V_"
    code, out, _ = run(capsys, "audit", host)
    assert code == 0
    row = ndjson(out)[0]
    statuses = {(v["statement"], tuple(v["tuple"]), v["u"]): v["status"]
                for v in row["violations"]}
    for cert in row["violations"]:
        replayed = rc.replay_finding(cert)
        assert statuses[(cert["statement"], tuple(cert["tuple"]), cert["u"])] == replayed.status


def test_patterns_command(capsys):
    code, out, _ = run(capsys, "patterns")
    assert code == 0
    rows = {r["name"]: r for r in ndjson(out)}
    assert rows["FlagC"]["n"] == 5 and rows["FlagC"]["m"] == 5
    assert rows["P5"]["n"] == 5 and rows["P5"]["m"] == 4
    flag = rc.graph_from_graph6(rows["Flag"]["graph6"])
    flagc = rc.graph_from_graph6(rows["FlagC"]["graph6"])
    assert rc.complement(flag) == flagc


def test_out_file_and_pretty(capsys, tmp_path):
    out_path = tmp_path / "report.ndjson"
    code, out, _ = run(capsys, "invariants", C5_G6, "--out", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["chi"] == 3
    code, out, _ = run(capsys, "patterns", "--pretty")
    assert code == 0 and "FlagC" in out


def test_no_input_is_usage_error(capsys):
    code, _, err = run(capsys, "invariants")
    assert code == 2
    assert "no input graphs" in err


def test_bad_graph6_argument(capsys):
    code, _, err = run(capsys, "invariants", "!!nope")
    assert code == 2
