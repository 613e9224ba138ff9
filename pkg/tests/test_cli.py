import json

from schurcone.cli import EXIT_FINDING, EXIT_NON_EXTREME, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--multiset", "2|1")
    assert code == 0
    assert json.loads(out) == {"degree": 3, "coeffs": {"3": "1", "2,1": "1"}}


def test_lr(capsys):
    code, out, _ = run(capsys, "lr", "--multiset", "2,1|2,1", "--target", "3,2,1")
    assert (code, out.strip()) == (0, "2")


def test_nested(capsys):
    code, out, _ = run(capsys, "nested", "--multiset", "6,5|5,4")
    assert code == 0 and json.loads(out)["nested"] is False


def test_extreme_exit_codes(capsys):
    code, out, _ = run(capsys, "extreme", "--multiset", "2|1", "--k", "2")
    assert code == EXIT_NON_EXTREME and json.loads(out)["certificate"]["kind"] == "witness"
    code, out, _ = run(capsys, "extreme", "--multiset", "3", "--k", "1")
    assert code == 0 and json.loads(out)["extreme"] is True


def test_extreme_rejects_wide_entry(capsys):
    code, _, err = run(capsys, "extreme", "--multiset", "2,1,1", "--k", "2")
    assert code == 1 and "error" in err


def test_count(capsys):
    assert run(capsys, "count", "--N", "6", "--k", "2")[1].strip() == "13"
    assert run(capsys, "count", "--N", "8", "--k", "2", "--method", "nested")[1].strip() == "28"


def test_table_diff(capsys):
    code, out, err = run(capsys, "table", "--max-N", "5", "--tsv", "--diff-paper")
    assert code == 0
    assert out.splitlines()[-1] == "5\t7\t7\t7\t7\t7"
    assert "0 mismatch" in err


def test_table_needs_long_flag(capsys):
    code, _, err = run(capsys, "table", "--max-N", "9")
    assert code == 1 and "--long" in err


def test_verify(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "squared", "--report", str(path))
    assert code == 0
    assert json.loads(path.read_text())["status"] == "pass" == json.loads(out)["status"]
    code, out, _ = run(capsys, "verify", "--suite", "conj-iv", "--bound", "5")
    assert code == EXIT_FINDING and json.loads(out)["status"] == "finding"
