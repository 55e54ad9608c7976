import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from gamma2.cli import main, run
from gamma2.exactmath import parse_scalar
from gamma2.rep import RepConfig, represent
from gamma2.words import parse_word

SCHEMA = json.loads(resources.files("gamma2").joinpath("cli_report.schema.json").read_text())


@pytest.fixture
def cfg_a_path(tmp_path):
    p = tmp_path / "a.cfg"
    p.write_text("# eps0 = -7\n2, 1\n-1, 1\n")
    return str(p)


@pytest.fixture
def cfg_b_path(tmp_path):
    p = tmp_path / "b.cfg"
    p.write_text("2, 1\n3, 1\n")
    return str(p)


def call(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert (report["status"] == "ok") == (report["failures"] == [])
    return code, report


def assert_matrix(cells, rows):
    jsonschema.validate(cells, {"$defs": SCHEMA["$defs"], "$ref": "#/$defs/matrix"})
    assert [[parse_scalar(c) for c in r] for r in cells] == [[parse_scalar(str(c)) for c in r] for r in rows]


# -- repr -------------------------------------------------------------------------------

def test_repr(capsys, cfg_a_path):
    code, rep = call(capsys, "repr", cfg_a_path, "x1")
    assert code == 0
    assert_matrix(rep["payload"]["matrix"], [[2, 1], [-3, -2]])
    assert rep["payload"]["warnings"][0]["kind"] == "distinctness"
    for word in ("e", "x1 x1"):
        code, rep = call(capsys, "repr", cfg_a_path, word)
        assert_matrix(rep["payload"]["matrix"], [[1, 0], [0, 1]])


def test_repr_text_and_float(capsys, cfg_a_path):
    assert main(["repr", cfg_a_path, "x1 x2"]) == 0
    out = capsys.readouterr().out
    assert out.split() == ["[-2", "3]", "[", "3", "-5]"]
    code, rep = call(capsys, "repr", cfg_a_path, "x1", "--float")
    assert rep["payload"]["matrix_float"][0][0] == repr(2 + 0j)


def test_repr_errors(capsys, cfg_a_path, tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("1, 5\n")
    code, rep = call(capsys, "repr", str(bad), "x1")
    assert code == 3 and rep["status"] == "error"
    assert rep["payload"]["violations"][0]["kind"] == "parameter"
    code, _ = call(capsys, "repr", cfg_a_path, "x1", "--strict")
    assert code == 3
    code, _ = call(capsys, "repr", cfg_a_path, "y1")
    assert code == 2
    code, _ = call(capsys, "repr", cfg_a_path, "x3")
    assert code == 2
    garbled = tmp_path / "garbled.cfg"
    garbled.write_text("2, q\n")
    code, _ = call(capsys, "repr", str(garbled), "x1")
    assert code == 2
    code, _ = call(capsys, "repr", str(tmp_path / "missing.cfg"), "x1")
    assert code == 2


# -- verify ------------------------------------------------------------------------------

def test_verify_involution(capsys):
    code, rep = call(capsys, "verify", "involution", "--dim", "5", "--cases", "10", "--seed", "7")
    assert code == 0 and rep["status"] == "ok" and rep["cases_run"] == 10


def test_verify_frakx(capsys):
    code, rep = call(capsys, "verify", "frakx", "--n", "30", "--cases", "5", "--seed", "1")
    assert code == 0 and rep["status"] == "ok"


@pytest.mark.parametrize("suite, extra", [
    ("homomorphism", ["--dim", "3", "--max-len", "10"]),
    ("trace", ["--n", "20"]),
    ("inversion", ["--max-len", "8"]),
    ("scan", ["--max-len", "6"]),
])
def test_verify_other_suites(capsys, suite, extra):
    code, rep = call(capsys, "verify", suite, "--cases", "4", "--seed", "3", *extra)
    assert code == 0 and rep["status"] == "ok"


def test_verify_scan_finds_relation(capsys, cfg_b_path):
    code, rep = call(capsys, "verify", "scan", "--max-len", "12", "--config", cfg_b_path)
    assert code == 4 and rep["status"] == "violation"
    pairs = [tuple(f["word"]) for f in rep["failures"]]
    assert ("e", "x1 x2 x1 x2 x1 x2 x1 x2 x1 x2 x1 x2") in pairs
    # the failure carries enough to replay it
    f = rep["failures"][0]
    cfg = RepConfig([[parse_scalar(c) for c in t] for t in f["config"]])
    a, b = (parse_word(w, 2) for w in f["word"])
    assert represent(a, cfg) == represent(b, cfg)


def test_verify_bad_flags(capsys, cfg_a_path):
    assert call(capsys, "verify", "involution", "--dim", "13")[0] == 2
    assert call(capsys, "verify", "involution", "--cases", "0")[0] == 2
    assert call(capsys, "verify", "bogus")[0] == 2
    assert call(capsys, "verify", "involution", "--dim", "x")[0] == 2


def test_verify_config_shape_mismatch(capsys, tmp_path):
    p = tmp_path / "three.cfg"
    p.write_text("2, 1, 1\n3, 2, 2\n")
    assert call(capsys, "verify", "frakx", "--config", str(p))[0] == 3


def test_verify_deterministic(capsys):
    argv = ["verify", "homomorphism", "--dim", "3", "--cases", "6", "--seed", "9", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv + ["--workers", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GAMMA2_SEED", "42")
    _, rep = call(capsys, "verify", "involution", "--cases", "2")
    assert rep["payload"]["seed"] == 42
    _, rep = call(capsys, "verify", "involution", "--cases", "2", "--seed", "5")
    assert rep["payload"]["seed"] == 5
    monkeypatch.setenv("GAMMA2_SEED", "nope")
    assert call(capsys, "verify", "involution", "--cases", "2")[0] == 2


# -- lucas ---------------------------------------------------------------------------------

def test_lucas_text(capsys):
    assert main(["lucas", "--rows", "4", "--format", "text"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1", "1 2", "1 3", "1 4 2"]


def test_lucas_numbers(capsys):
    assert main(["lucas", "--rows", "7", "--numbers"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "1 3 4 7 11 18 29"
    code, rep = call(capsys, "lucas", "--rows", "7", "--numbers")
    assert rep["payload"]["lucas_numbers"] == [1, 3, 4, 7, 11, 18, 29]


def test_lucas_json_and_csv(capsys):
    assert main(["lucas", "--rows", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == [[1]]
    assert main(["lucas", "--rows", "3", "--format", "csv", "--numbers"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1", "1,2", "1,3", "1,3,4"]


def test_lucas_rows_out_of_range(capsys):
    assert call(capsys, "lucas", "--rows", "65")[0] == 2
    assert call(capsys, "lucas", "--rows", "0")[0] == 2


# -- word ------------------------------------------------------------------------------------

@pytest.mark.parametrize("action, word, expected", [
    ("normalize", "x1 x1", "e"),
    ("invert", "x1 x2 x1 x2 x1 x2", "x2 x1 x2 x1 x2 x1"),
    ("classify", "x2 x1 x2", "AltPow21X2(1)"),
    ("classify", "x1", "X1"),
    ("normalize", "x3 x1^2 x3", "e"),
])
def test_word(capsys, action, word, expected):
    assert main(["word", action, word]) == 0
    assert capsys.readouterr().out.strip() == expected
    code, rep = call(capsys, "word", action, word)
    assert rep["payload"]["result"] == expected


def test_word_errors(capsys):
    assert call(capsys, "word", "normalize", "x1 z")[0] == 2
    assert call(capsys, "word", "classify", "x3")[0] == 2


# -- trace -----------------------------------------------------------------------------------

@pytest.mark.parametrize("n, expected", [(2, "-10"), (5, "0"), (4, "50")])
def test_trace(capsys, cfg_a_path, n, expected):
    code, rep = call(capsys, "trace", cfg_a_path, "--n", str(n))
    p = rep["payload"]
    assert code == 0 and p["epsilon0"] == "-7"
    assert p["closed_form"] == p["brute_force"] == expected and p["agree"]


def test_trace_invalid_config(capsys, tmp_path):
    p = tmp_path / "three.cfg"
    p.write_text("2, 1, 1\n3, 2, 2\n")
    assert call(capsys, "trace", str(p))[0] == 3


def test_console_script_and_module():
    out = subprocess.run([sys.executable, "-m", "gamma2", "word", "invert", "x1 x2"],
                         capture_output=True, text=True, check=True).stdout
    assert out.strip() == "x2 x1"
    proc = subprocess.run([sys.executable, "-m", "gamma2", "lucas", "--rows", "99"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "usage error" in proc.stderr


def test_run_returns_report():
    report, text = run(["lucas", "--rows", "2"])
    assert report.exit_code == 0 and text == "1\n1 2"
