import json
import subprocess
import sys
from pathlib import Path

import pytest

from commprob.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_then_analyze(tmp_path, capsys):
    path = tmp_path / "g21.grp"
    assert run(capsys, "witness", "5/21", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "pr\t5/21\n" in out
    assert "central_quotient\tN:SDC(7,3)\n" in out


def test_witness_to_stdout(capsys):
    code, out, _ = run(capsys, "witness", "11/27")
    assert code == 0
    assert out.startswith("# name: witness:11/27\ncayley 27\n")


def test_analyze_json_strict(capsys):
    code, out, _ = run(capsys, "analyze", str(DATA / "order21_external.grp"), "--format", "json", "--strict")
    assert code == 0
    assert json.loads(out)["pr"] == "5/21"


def test_analyze_nonsense(tmp_path, capsys):
    path = tmp_path / "nonsense.grp"
    path.write_text("hello world\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2
    assert "line 1" in err


def test_analyze_missing_file(capsys):
    assert run(capsys, "analyze", "/nonexistent/file.grp")[0] == 2


def test_unknown_row(capsys):
    code, _, err = run(capsys, "witness", "2/3")
    assert code == 2 and "unknown witness row" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_verify_remarks(capsys):
    code, out, _ = run(capsys, "verify", "remarks")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert [r[0] for r in rows] == ["remark-missed-5/14", "remark-t-equals-1", "remark-25/64",
                                    "remark-T-not-central-quotient"]
    assert all(r[1] == "pass" for r in rows)
    assert "corpus<=512" in rows[3][2]


def test_verify_table_with_ingest(capsys):
    code, out, _ = run(capsys, "verify", "table", "--ingest", str(DATA), "--max-order", "30")
    assert code == 2       # the ragged fixture stops ingestion


def test_verify_table_ingest_dir(tmp_path, capsys):
    for name in ("order21.perm", "order21_external.grp"):
        (tmp_path / (name.split(".")[0] + ".grp")).write_text((DATA / name).read_text())
    code, out, _ = run(capsys, "verify", "table", "--ingest", str(tmp_path), "--max-order", "30")
    assert code == 0
    assert out.count("completeness\tpass\torder-21 from permutations") == 1


def test_verify_properties_small(capsys):
    # witnesses and auxiliary groups keep the narrow lemmas non-vacuous at any bound
    code, out, _ = run(capsys, "verify", "properties", "--max-order", "12")
    assert code == 0
    assert "summary:c21-classes\tpass" in out
    assert "\tvacuous\t" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "table", "--max-order", "20", "--format", "json")
    d = json.loads(out)
    assert code == d["exit_code"] == 0
    assert set(d["checks"][0]) == {"check_id", "status", "group_id", "expected", "computed"}


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "29/189\twitness\t" in out and "rem-T\tremark\tdicyclic(3)" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "commprob", "catalog", "list", "--format", "json"],
                         capture_output=True, text=True, check=True)
    assert len(json.loads(res.stdout)) == 19
