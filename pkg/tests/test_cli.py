import csv
import io
import json

import pytest

from ffprng.cli import (EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_csv_deterministic(capsys, tmp_path):
    args = ["generate", "rational", "--p", "2", "--e", "3", "--d", "2",
            "--mode", "sample:6", "--seed", "5"]
    code1, out1, _ = run(args, capsys)
    code2, out2, _ = run(args, capsys)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    rows = list(csv.reader(io.StringIO(out1)))
    assert rows[0][0] == "construction"
    assert len(rows) == 7  # header + 6 sequences
    digits = rows[1][rows[0].index("s0"):]
    assert len(digits) == 7 and all(d in "01" for d in digits)


def test_generate_json_curve_echo(capsys):
    code, out, _ = run(["generate", "elliptic", "--p", "2", "--e", "3",
                        "--t", "0", "--d", "2", "--mode", "sample:2",
                        "--seed", "1", "--format", "json"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == "ffprng-report/1"
    assert doc["curve"]["N"] == 9
    assert len(doc["sequences"]) == 2
    assert len(doc["sequences"][0]["digits"]) == 9


def test_generate_out_file(tmp_path, capsys):
    target = tmp_path / "fam.csv"
    code, out, _ = run(["generate", "rational", "--p", "2", "--e", "3",
                        "--d", "2", "--mode", "sample:3", "--seed", "2",
                        "--out", str(target)], capsys)
    assert code == EXIT_OK and out == ""
    text = target.read_bytes()
    assert text.count(b"\r\n") == 4  # RFC-4180 line endings


def test_verify_exit_codes(capsys):
    code, out, _ = run(["verify", "elliptic", "--p", "2", "--e", "3",
                        "--t", "0", "--d", "2", "--mode", "sample:4",
                        "--seed", "3", "--pairs", "5", "--r", "1"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["aggregates"]["passed"] == doc["aggregates"]["checks"]
    # genus 0 with r=1 has a zero pattern bound: an honest check failure
    code2, out2, _ = run(["verify", "rational", "--p", "2", "--e", "3",
                          "--d", "2", "--mode", "sample:4", "--seed", "3",
                          "--pairs", "5", "--r", "1"], capsys)
    assert code2 == EXIT_CHECK_FAILED


def test_usage_errors(capsys):
    code, _, err = run(["generate", "rational", "--p", "3", "--e", "2",
                        "--d", "2", "--mode", "exhaustive"], capsys)
    assert code == EXIT_USAGE
    assert "gcd" in err
    code2, _, _ = run(["generate", "rational", "--p", "2"], capsys)
    assert code2 == EXIT_USAGE
    code3, _, _ = run(["generate", "elliptic", "--p", "2", "--e", "3",
                       "--d", "2"], capsys)  # missing --t
    assert code3 == EXIT_USAGE
    code4, _, err4 = run(["generate", "rational", "--p", "2", "--e", "3",
                          "--d", "2", "--mode", "sample:x"], capsys)
    assert code4 == EXIT_USAGE


def test_expsum(capsys):
    code, out, _ = run(["expsum", "--p", "2", "--e", "3",
                        "--mode", "sample:25", "--seed", "4"], capsys)
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["magnitude", "bound", "ratio"]
    assert len(rows) == 27  # header + 25 samples + the f = x case
    for mag, bound, ratio in rows[1:]:
        assert float(mag) <= float(bound) + 1e-6
    assert float(rows[-1][0]) == 0.0  # f = x achieves 0 = 0
