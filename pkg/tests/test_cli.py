"""Command-line interface: exit codes, output formats, cache and the suite runner."""

import json

import pytest

from hopfmod import cli


def run(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--family", "uqsl2", "--param", "3",
                       "--tasks", "axioms,center", "--format", "json", "--no-cache")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == cli.SCHEMA
    assert [r["task"] for r in doc["records"]] == ["axioms", "center"]
    for r in doc["records"]:
        assert {"instance", "task", "status", "artifact", "seconds"} <= set(r)
        assert r["instance"] == "uqsl2(3)" and r["status"] == "pass"


def test_tasks_run_in_dependency_order(capsys):
    code, out, _ = run(capsys, "compute", "--family", "nichols", "--param", "1",
                       "--tasks", "cartan,axioms", "--format", "json", "--no-cache")
    assert code == 0
    assert [r["task"] for r in json.loads(out)["records"]] == ["axioms", "cartan"]


def test_congruence_level_in_json(capsys):
    code, out, _ = run(capsys, "compute", "--family", "dnichols", "--param", "2",
                       "--tasks", "congruence", "--format", "json", "--no-cache")
    assert code == 0
    art = json.loads(out)["records"][0]["artifact"]
    assert art["level"] == 2 and art["ord_T"] == 2 and art["level_equals_ord_T"]


def test_csv_is_marked_lossy(capsys):
    code, out, _ = run(capsys, "compute", "--family", "dnichols", "--param", "1",
                       "--tasks", "golden", "--format", "csv", "--no-cache")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# lossy")
    assert lines[1] == "instance,task,status,field,value"


def test_pretty_output_to_file(tmp_path, capsys):
    dest = tmp_path / "r.txt"
    code, out, _ = run(capsys, "compute", "--family", "nichols", "--param", "2",
                       "--tasks", "axioms", "--out", str(dest), "--no-cache")
    assert code == 0 and out == ""
    assert "PASS" in dest.read_text()


@pytest.mark.parametrize("args,msg", [
    (["--family", "uqsl2", "--param", "4"], "odd"),
    (["--family", "uqsl2", "--param", "3", "--tasks", "nonsense"], "unknown task"),
    (["--family", "nichols", "--param", "2", "--conductor", "24"], "uqsl2 only"),
])
def test_usage_errors_exit_one(capsys, args, msg):
    code, _, err = run(capsys, "compute", *args)
    assert code == 1
    assert msg in err


def test_click_usage_error_exit_one(capsys):
    assert cli.main(["compute", "--family", "sl3", "--param", "3"]) == 1
    assert cli.main(["frobnicate"]) == 1


def test_failed_check_exits_two(capsys, monkeypatch):
    monkeypatch.setitem(cli.RUNNERS, "axioms", lambda ctx: ("fail", None, {"axiom": "coassociativity"}))
    code, out, _ = run(capsys, "compute", "--family", "nichols", "--param", "1",
                       "--tasks", "axioms", "--format", "json", "--no-cache")
    assert code == 2
    assert json.loads(out)["records"][0]["witness"] == {"axiom": "coassociativity"}


def test_exceptions_become_fail_records(monkeypatch):
    def boom(ctx):
        raise RuntimeError("kaput")

    monkeypatch.setitem(cli.RUNNERS, "center", boom)
    rec = cli.run_instance("nichols", 1, ["center"], use_cache=False)[0]
    assert rec["status"] == "fail" and "kaput" in rec["witness"]["error"]


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    first = cli.run_instance("nichols", 2, ["center"])
    assert list(tmp_path.glob("center-*.json"))
    monkeypatch.setitem(cli.RUNNERS, "center", lambda ctx: pytest.fail("cache not used"))
    assert cli.run_instance("nichols", 2, ["center"]) == first


def test_corrupt_golden_scales_one_table():
    g = {"cartan": [[1, 2]], "fusion_mixed": {"V": [[3]]}}
    assert cli.corrupt_golden(g, "fusion_mixed.V") == {"cartan": [[1, 2]], "fusion_mixed": {"V": [[6]]}}
    with pytest.raises(cli.UsageFailure):
        cli.corrupt_golden(g, "missing")


def test_reproduce_flags_exactly_the_corrupted_row(capsys, monkeypatch):
    monkeypatch.setattr(cli, "SUITE", [("nichols", 1), ("dnichols", 1)])
    code, out, _ = run(capsys, "reproduce")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "reproduce", "--corrupt", "dnichols(1):fusion_mixed.V_K")
    assert code == 2
    fails = [l for l in out.splitlines() if l.endswith("FAIL")]
    assert len(fails) == 1 and "fusion_mixed[V_K]" in fails[0]


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0 and "0.1.0" in out
