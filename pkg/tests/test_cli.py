import json

import pytest

from cfq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "10", "7")
    assert code == 0
    rec = json.loads(out)
    assert rec["digits"] == [1, 2, 3]
    assert rec["S"] == 6 and rec["M"] == 3 and rec["S_alt"] == -2
    assert rec["D"] == "0/1"
    assert rec["convergents"][-1] == [7, 10]


def test_expand_trivial(capsys):
    code, out, _ = run(capsys, "expand", "9", "1")
    assert code == 0
    assert json.loads(out)["digits"] == [9]


def test_expand_domain_error(capsys):
    code, _, err = run(capsys, "expand", "10", "4")
    assert code == 3
    assert "gcd" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "ten", "7"])
    assert exc.value.code == 2


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "10", "--stat", "S")
    assert code == 0
    rec = json.loads(out)
    assert rec["mean"] == 8.0 and rec["phi"] == 4


def test_scan_trivial(capsys):
    code, out, _ = run(capsys, "scan", "2", "--stat", "S")
    assert json.loads(out)["mean"] == 2.0


def test_scan_csv_columns(capsys):
    code, out, _ = run(capsys, "scan", "10", "--stat", "S",
                       "--format", "csv", "--t", "1,2")
    lines = out.strip().splitlines()
    assert lines[0] == "N,phi,stat,mean,variance,tail@1,tail@2"
    assert lines[1].startswith("10,4,S,8.0,")


def test_scan_range_streams(capsys):
    code, out, _ = run(capsys, "scan", "--range", "3", "6", "--stat", "M")
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert [json.loads(l)["N"] for l in lines] == [3, 4, 5, 6]


def test_scan_requires_one_target(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "5", "--range", "3", "6"])
    assert exc.value.code == 2


def test_scan_limit_exit_code(capsys):
    code, _, err = run(capsys, "scan", str(1 << 62), "--stat", "S")
    assert code == 4


def test_dedekind(capsys):
    code, out, _ = run(capsys, "dedekind", "3", "1")
    rec = json.loads(out)
    assert rec["D"] == "1/18"


def test_discrepancy(capsys):
    code, out, _ = run(capsys, "discrepancy", "6")
    rec = json.loads(out)
    assert rec["value"] == "2/3"


def test_search_rows(capsys):
    code, out, _ = run(capsys, "search", "--min-stat", "M",
                       "--range", "2", "100")
    lines = out.strip().splitlines()
    assert lines[0] == "N,argmin,min,bound,margin"
    assert len(lines) == 1 + 99


def test_search_zaremba(capsys):
    code, out, _ = run(capsys, "search", "--zaremba", "5",
                       "--range", "2", "100")
    assert json.loads(out)["without_witness"] == []


def test_farey(capsys):
    code, out, _ = run(capsys, "farey", "50", "--law", "hensley", "--t", "2")
    rec = json.loads(out)
    assert abs(rec["limit"] - 0.4555) < 1e-3


def test_gk_rows(capsys):
    code, out, _ = run(capsys, "gk", "1000", "--max-digit", "5")
    lines = out.strip().splitlines()
    assert lines[0] == "m,freq,target,diff"
    assert len(lines) == 6


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--f", "identity",
                       "--eta", "1", "--theta", "2")
    rec = json.loads(out)
    assert abs(rec["B"] - (rec["A"] + 1)) < 1e-12


def test_workers_do_not_change_output(capsys):
    _, out1, _ = run(capsys, "scan", "1009", "--stat", "D", "--t", "2,4",
                     "--workers", "1")
    _, out8, _ = run(capsys, "scan", "1009", "--stat", "D", "--t", "2,4",
                     "--workers", "8")
    assert out1 == out8


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code = main(["-o", str(path), "expand", "10", "7"])
    assert code == 0
    assert json.loads(path.read_text())["S"] == 6
