import csv
import io
import json
import random
import subprocess
import sys

import pytest

from residua import binomial_proof_trace, congruent
from residua.cli import main

from svgparse import parse_cells


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["congruent", "--", "-9", "16", "5"], 0, "-9 ≡ 16 (mod 5)"),
        (["congruent", "--", "-7", "15", "3"], 1, "-7 ≢ 15 (mod 3)"),
        (["congruent", "--", "-7", "15", "-11"], 0, "(mod 11)"),
    ],
)
def test_congruent(capsys, argv, code, needle):
    c, out, _ = run(capsys, *argv)
    assert c == code
    assert needle in out


def test_congruent_usage_errors(capsys):
    assert run(capsys, "congruent", "1", "1", "0")[0] == 2
    assert run(capsys, "congruent", "1", "x", "5")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_congruent_exit_code_contract(capsys):
    rng = random.Random(5)
    for _ in range(200):
        b, c = rng.randrange(-10**6, 10**6), rng.randrange(-10**6, 10**6)
        m = rng.choice([1, 2, 3, 5, 7, 10, 12, 97])
        if rng.random() < 0.5:
            c = b + rng.randrange(-50, 50) * m
        code, _, _ = run(capsys, "congruent", "--", str(b), str(c), str(m))
        assert (code == 0) == congruent(b, c, m)
        assert code in (0, 1)


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--", "-13", "5"], (2, -3, 2)),
        (["5", "7"], (5, -2, -2)),
        (["0", "9"], (0, 0, 0)),
    ],
)
def test_residues(capsys, argv, expected):
    code, text, _ = run(capsys, "residues", *argv)
    assert code == 0
    nums = tuple(int(line.rsplit(":", 1)[1]) for line in text.splitlines())
    assert nums == expected
    code, out, _ = run(capsys, "residues", "--format", "json", *argv)
    data = json.loads(out)
    assert (data["least_positive"], data["least_negative"], data["absolutely_least"]) == expected


@pytest.mark.parametrize(
    "argv, rep, mod",
    [
        (["classify", "--", "-9", "5"], 1, 5),
        (["add", "9", "7", "5"], 1, 5),
        (["mul", "4", "2", "5"], 3, 5),
        (["pow", "3", "4", "10"], 1, 10),
        (["poly", "3", "5", "1:2", "1:0"], 0, 5),
        (["poly", "--", "9", "7", "2:3", "-1:1"], 0, 7),
        (["project", "7", "10", "5"], 2, 5),
        (["fermat", "5", "12"], 1, 12),
    ],
)
def test_class_commands_json_matches_text(capsys, argv, rep, mod):
    code, text, _ = run(capsys, *argv)
    assert code == 0
    assert text.strip().endswith(f"{rep} mod {mod}") or f"≡ {rep} (mod {mod})" in text
    code, out, _ = run(capsys, argv[0], "--format", "json", *argv[1:])
    data = json.loads(out)
    assert data["rep"] == rep and data["mod"] == mod


def test_project_bad_divisor(capsys):
    code, _, err = run(capsys, "project", "3", "10", "4")
    assert code == 2 and "does not divide" in err


def test_scalar_commands(capsys):
    assert run(capsys, "gcd", "12", "18")[1] == "6\n"
    assert run(capsys, "totient", "12")[1] == "4\n"
    assert run(capsys, "order", "3", "7")[1] == "6\n"
    assert run(capsys, "window", "--", "-9", "5", "16")[1] == "-9\n"
    assert run(capsys, "order", "2", "6")[0] == 2
    assert run(capsys, "fermat", "3", "9")[0] == 2


def test_system_commands(capsys):
    code, out, _ = run(capsys, "system", "--format", "json", "12", "--reduced")
    assert json.loads(out) == {"mod": 12, "kind": "reduced", "members": [1, 5, 7, 11]}
    assert run(capsys, "system", "5", "--", "-9", "-8", "-7", "-6", "-5")[0] == 0
    assert run(capsys, "system", "5", "0", "1", "2", "3", "8")[0] == 1
    code, out, _ = run(capsys, "affine", "--format", "json", "2", "3", "5")
    assert json.loads(out) == {"mod": 5, "kind": "complete", "members": [3, 5, 7, 9, 11]}
    assert run(capsys, "affine", "2", "0", "4")[0] == 2


def test_period(capsys):
    code, out, _ = run(capsys, "period", "--format", "json", "10", "6")
    assert json.loads(out) == {"a": 10, "mod": 6, "preperiod": 1, "period": 1, "tail": [1], "cycle": [4]}
    code, out, _ = run(capsys, "period", "--format", "csv", "2", "7")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["class"]) for r in rows] == [1, 2, 4]


def test_trace_jsonl(capsys):
    code, out, _ = run(capsys, "trace", "--format", "json", "5", "3")
    assert code == 0
    rows = [json.loads(l) for l in out.splitlines()]
    assert rows == [s.to_json() for s in binomial_proof_trace(5, 3).steps]
    assert rows[1]["witness"] == "6"
    code, _, err = run(capsys, "trace", "4", "2")
    assert code == 2 and "4 is not prime" in err


def test_render_svg(capsys):
    code, out, _ = run(capsys, "render", "--format", "svg", "--highlight=-9,16", "5", "--", "-9", "16")
    assert code == 0
    cells = parse_cells(out)
    assert len(cells) == 26
    assert {c["value"] for c in cells if c["highlight"]} == {-9, 16}


def test_render_text_deterministic(capsys):
    argv = ["render", "--color", "never", "--highlight", "0", "5", "0", "9"]
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert "\x1b" not in first
    assert "\x1b" in run(capsys, "render", "--color", "always", "5", "0", "9")[1]


def test_render_errors(capsys):
    assert run(capsys, "render", "5", "3", "2")[0] == 2
    assert run(capsys, "classify", "--format", "svg", "3", "5")[0] == 2


def test_render_warns_past_palette(capsys):
    code, _, err = run(capsys, "render", "--color", "never", "13", "0", "3")
    assert code == 0 and "palette" in err


def test_render_csv_and_json(capsys):
    out = run(capsys, "render", "--format", "csv", "3", "0", "5")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["class"]) for r in rows] == [0, 1, 2, 0, 1, 2]
    data = json.loads(run(capsys, "render", "--format", "json", "3", "0", "5")[1])
    assert len(data["cells"]) == 6


def test_out_file(capsys, tmp_path):
    path = tmp_path / "line.svg"
    assert run(capsys, "render", "--format", "svg", "--out", str(path), "5", "0", "4")[0] == 0
    assert len(parse_cells(path.read_text())) == 5


@pytest.mark.parametrize("name, bound", [("fermat", 300), ("order", 100), ("affine", 12), ("period", 30)])
def test_suites(capsys, name, bound):
    code, out, err = run(capsys, "suite", name, str(bound))
    assert code == 0
    assert "0 counterexamples" in out
    assert "elapsed" in err


def test_suite_empty_and_bad(capsys):
    code, out, err = run(capsys, "suite", "fermat", "1")
    assert code == 0 and "0 cases" in out and "no cases" in err
    assert run(capsys, "suite", "bogus", "10")[0] == 2
    assert run(capsys, "suite", "fermat", "5001")[0] == 2
    assert run(capsys, "suite", "fermat", "0")[0] == 2


def test_suite_csv(capsys):
    out = run(capsys, "suite", "--format", "csv", "fermat", "5")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == sum(1 for k in range(2, 6) for a in range(1, k + 1) if __import__("math").gcd(a, k) == 1)
    assert all(r["ok"] == "True" for r in rows)


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "residua.cli", "congruent", "--", "-9", "16", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "≡" in proc.stdout
