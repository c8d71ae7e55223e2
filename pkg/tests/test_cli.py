import json
import subprocess
import sys
from pathlib import Path

import pytest

from tianji.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    # argparse reports usage errors by raising SystemExit
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [(["eulerian", "4"], "1 11 11 1\n"), (["eulerian", "3", "2"], "1\n"), (["eulerian", "1"], "1\n")])
def test_eulerian(capsys, argv, expected):
    assert run(capsys, *argv)[:2] == (0, expected)


def test_eulerian_json(capsys):
    code, out, _ = run(capsys, "eulerian", "5", "--format", "json")
    assert json.loads(out) == {"n": 5, "counts": [1, 26, 66, 26, 1]}


def test_eulerian_zero(capsys):
    code, out, err = run_exit(capsys, "eulerian", "0")
    assert code == 2 and out == ""
    assert "zero horses" in err


def test_table_csv_golden(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "10", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "table_n10.csv").read_text()


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert "1 (100%)" in lines[1]


def test_table_bad_format(capsys):
    code, out, err = run_exit(capsys, "table", "--max-n", "10", "--format", "xml")
    assert code == 2 and out == ""
    assert "text" in err and "csv" in err and "json" in err


def test_format_env(capsys, monkeypatch):
    monkeypatch.setenv("TIANJI_FORMAT", "csv")
    assert run(capsys, "table", "--max-n", "2")[1].startswith("n,total,")
    assert run(capsys, "table", "--max-n", "2", "--format", "json")[1].lstrip().startswith("[")


def test_bad_format_env(capsys, monkeypatch):
    monkeypatch.setenv("TIANJI_FORMAT", "yaml")
    code, out, err = run(capsys, "table", "--max-n", "2")
    assert code == 2 and out == "" and "TIANJI_FORMAT" in err


@pytest.mark.parametrize(
    "lineup, expected",
    [("3,1,2", "wins=2 losses=1 result=WIN\n"), ("1,2,3", "wins=0 losses=3 result=LOSS\n")],
)
def test_analyze_lineup(capsys, lineup, expected):
    assert run(capsys, "analyze", "3", "--lineup", lineup)[:2] == (0, expected)


@pytest.mark.parametrize("lineup", ["1,1,2", "1,2", "x,y,z", "1,2,3,4"])
def test_analyze_bad_lineup(capsys, lineup):
    code, out, err = run(capsys, "analyze", "3", "--lineup", lineup)
    assert code == 2 and out == ""
    assert "not a bijection" in err


def test_analyze_summary(capsys):
    code, out, _ = run(capsys, "analyze", "6")
    assert code == 0
    assert "winning=58/720" in out and "drawing=302/720" in out and "losing=360/720" in out
    assert "p_loss=1/2" in out


def test_analyze_json(capsys):
    doc = json.loads(run(capsys, "analyze", "4", "--format", "json")[1])
    assert (doc["winning"], doc["drawing"], doc["losing"]) == (1, 11, 12)
    assert doc["p_draw"] == "11/24"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "5")
    assert code == 0
    assert "winning=27/120" in out and "drawing=0/120" in out and "losing=93/120" in out


def test_enumerate_histogram(capsys):
    assert run(capsys, "enumerate", "3", "--histogram")[:2] == (0, "1 4 1\n")


def test_enumerate_over_limit(capsys):
    code, out, err = run(capsys, "enumerate", "12")
    assert code == 3 and out == ""
    assert "10" in err


def test_enumerate_raised_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--enum-limit", "3")
    assert code == 3
    assert run(capsys, "enumerate", "4", "--enum-limit", "4", "--histogram")[1] == "1 11 11 1\n"


def test_table_and_enumerate_agree(capsys):
    table = json.loads(run(capsys, "table", "--max-n", "8", "--format", "json")[1])
    for row in table:
        doc = json.loads(run(capsys, "enumerate", str(row["n"]), "--format", "json")[1])
        assert (doc["winning"], doc["drawing"], doc["losing"]) == (row["winning"], row["drawing"], row["losing"])


def _field(out, key):
    for line in out.splitlines():
        for part in line.split():
            if part.startswith(key + "="):
                return part.split("=", 1)[1]
    raise KeyError(key)


def test_simulate_n2(capsys):
    code, out, _ = run(capsys, "simulate", "2", "--samples", "100", "--seed", "1")
    assert code == 0
    assert float(_field(out, "p_win")) == 0.0


def test_simulate_n5(capsys):
    out = run(capsys, "simulate", "5", "--samples", "120000", "--seed", "42")[1]
    assert abs(float(_field(out, "p_win")) - 0.225) <= 0.004


def test_simulate_deterministic(capsys):
    a = run(capsys, "simulate", "7", "--samples", "5000", "--seed", "9", "--format", "json")[1]
    b = run(capsys, "simulate", "7", "--samples", "5000", "--seed", "9", "--format", "json")[1]
    assert a == b
    doc = json.loads(a)
    assert doc["wins"] + doc["draws"] + doc["losses"] == 5000
    assert doc["exact_p_draw"] == "0.000000"


def test_figures_odd(capsys):
    code, out, _ = run(capsys, "figures", "--parity", "odd", "--max-n", "9", "--format", "csv")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["3", "5", "7", "9"]


def test_figures_even_loss_constant(capsys):
    out = run(capsys, "figures", "--parity", "even", "--max-n", "10", "--format", "csv")[1]
    assert {line.split(",")[3] for line in out.splitlines()[1:]} == {"0.5000"}


def test_figures_single_even(capsys):
    out = run(capsys, "figures", "--parity", "even", "--max-n", "2", "--format", "csv")[1]
    assert out.splitlines()[1:] == ["2,0.0000,0.5000,0.5000"]


def test_figures_bad_parity(capsys):
    assert run_exit(capsys, "figures", "--parity", "prime", "--max-n", "9")[0] == 2


def test_figures_small_max_n(capsys):
    assert run(capsys, "figures", "--parity", "odd", "--max-n", "1")[0] == 2


@pytest.mark.parametrize("argv", [["table", "--max-n", "ten"], ["table", "--bogus"], ["simulate", "3", "--samples", "0"], []])
def test_parse_errors_exit_2(capsys, argv):
    code, out, err = run_exit(capsys, *argv)
    assert code == 2 and out == ""
    assert "usage" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tianji", "eulerian", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1 11 11 1\n"
