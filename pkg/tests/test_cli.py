import json
from pathlib import Path

import pytest

from chardeg import cli
from chardeg.psl2 import psl2_degrees

TORUS_TABLE = str(Path(__file__).parent.parent / "data" / "torus_orders.json")


def test_ingest_valid_records(tmp_path):
    path = tmp_path / "records.jsonl"
    path.write_text(
        '{"name": "C2", "order": 2, "degrees": [[1, 2]]}\n'
        '{"name": "PSL2_7", "order": 168, "degrees": '
        '[[1, 1], [3, 2], [6, 1], [7, 1], [8, 1]]}\n')
    records = cli.ingest_degree_records(path)
    assert [r.name for r in records] == ["C2", "PSL2_7"]
    assert records[1].degrees.entries == psl2_degrees(7).entries


def test_ingest_rejects_order_mismatch(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"name": "X", "order": 11, "degrees": [[1, 2], [2, 2]]}\n')
    with pytest.raises(ValueError, match="X"):
        cli.ingest_degree_records(path)


def test_ingest_rejects_duplicates_and_parse_errors(tmp_path):
    path = tmp_path / "dup.jsonl"
    path.write_text('{"name": "A", "order": 1, "degrees": [[1, 1]]}\n'
                    '{"name": "A", "order": 1, "degrees": [[1, 1]]}\n')
    with pytest.raises(ValueError, match="duplicate"):
        cli.ingest_degree_records(path)
    path2 = tmp_path / "parse.jsonl"
    path2.write_text("not json\n")
    with pytest.raises(ValueError, match="parse.jsonl:1"):
        cli.ingest_degree_records(path2)


def test_e_of_command(capsys):
    assert cli.main(["e-of", "54", "6"]) == 0
    out = capsys.readouterr().out
    assert "e = 3" in out and "slack 0" in out


def test_analyze_group_command(tmp_path, capsys):
    spec = tmp_path / "d8.json"
    spec.write_text(json.dumps({
        "name": "D8", "kind": "permutation", "degree": 4,
        "generators": [[1, 2, 3, 0], [3, 2, 1, 0]]}))
    assert cli.main(["analyze-group", "--group-spec", str(spec)]) == 0
    out = capsys.readouterr().out
    assert "order 8" in out and "True (degree 2)" in out


def test_poly_subcommand_report(tmp_path, capsys):
    report = tmp_path / "poly.json"
    assert cli.main(["poly", "--report", str(report)]) == 0
    capsys.readouterr()
    payload = json.loads(report.read_text())
    assert {entry["claim"] for entry in payload} == {
        "lem3.3/srim-table", "sec3/nd-counts"}
    assert all(entry["status"] == "pass" for entry in payload)


def test_seitz_out_of_scope_without_torus_table(capsys):
    assert cli.main(["seitz"]) == 0
    out = capsys.readouterr().out
    assert "OUT-OF-SCOPE" in out and "sec3/seitz-twisted" in out


def test_seitz_with_shipped_table(capsys):
    assert cli.main(["seitz", "--torus-table", TORUS_TABLE]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 2


def test_missing_torus_table_aborts_before_running():
    with pytest.raises(SystemExit, match="configuration error"):
        cli.main(["seitz", "--torus-table", "/nonexistent/torus.json"])


def test_epsilon_with_bad_degrees_file_fails(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"name": "X", "order": 11, "degrees": [[1, 2], [2, 2]]}\n')
    assert cli.main(["epsilon", "--degrees", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_epsilon_with_good_degrees_file(tmp_path, capsys):
    good = tmp_path / "good.jsonl"
    good.write_text('{"name": "PSL2_7", "order": 168, "degrees": '
                    '[[1, 1], [3, 2], [6, 1], [7, 1], [8, 1]]}\n')
    assert cli.main(["epsilon", "--degrees", str(good)]) == 0
    out = capsys.readouterr().out
    assert "epsilon=13/8" in out


def test_report_determinism(tmp_path, capsys):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for r in (r1, r2):
        assert cli.main(["situations", "--report", str(r)]) == 0
    capsys.readouterr()
    a = json.loads(r1.read_text())
    b = json.loads(r2.read_text())
    for entry in a + b:
        entry.pop("seconds")
    assert a == b


def test_rho_subcommand_single_witness(capsys):
    assert cli.main(["rho", "--max-n", "7", "--induct-max", "80"]) == 0
    out = capsys.readouterr().out
    assert "thm2.1/rho-direct" in out and "n=7..7" in out


def test_claim_registry_is_consistent():
    claims = [claim for claim, _ in cli.CLAIMS]
    assert len(claims) == len(set(claims))
    assert cli.SUBCOMMAND_CLAIMS["verify-all"] == claims
    for name, subset in cli.SUBCOMMAND_CLAIMS.items():
        assert set(subset) <= set(claims), name


def test_parallel_jobs_agree_with_serial(capsys):
    serial = cli.run_claims(["lem3.2/euler-tail", "lem3.5/composition-bound"],
                            cli.RunConfig(jobs=1))
    parallel = cli.run_claims(["lem3.2/euler-tail", "lem3.5/composition-bound"],
                              cli.RunConfig(jobs=2))
    assert [(r.claim, r.status, r.witnesses) for r in serial] == \
        [(r.claim, r.status, r.witnesses) for r in parallel]
