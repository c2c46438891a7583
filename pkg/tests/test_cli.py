import io
import json
import subprocess
import sys

import pytest

from twoquad.cli import main
from twoquad.parser import GRAMMAR

REL = ["--rel-x", "-3,2", "--rel-y", "0,-2"]

COMMANDS = [
    ["normal-form", "(x+y)^3"],
    ["embed", "x*y - 2*y"],
    ["center-coords", "x*y*x + 3*y"],
    ["central-in-ideal", "x*y"],
    ["codim-bound", "x + y"],
    ["check-identities", "--samples", "3", "--seed", "2", "--degree", "3"],
    ["verify-paper"],
    ["refcheck-weiss"],
    ["refcheck-b0", "--degree", "3"],
]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("cmd", COMMANDS, ids=lambda c: c[0])
def test_json_output_parses(cmd):
    code, out, _ = run(REL + ["--json"] + cmd)
    assert code == 0
    data = json.loads(out)
    assert data["command"] == cmd[0]
    assert data["tower"] == ["r1^2 - 2 = 0"]


@pytest.mark.parametrize("cmd", COMMANDS, ids=lambda c: c[0])
def test_text_output_deterministic(cmd):
    first = run(REL + cmd)
    assert first[0] == 0
    assert first == run(REL + cmd)


def test_embed_example():
    code, out, _ = run(["--field", "Q", "--rel-x", "0,0", "--rel-y", "0,0", "embed", "x*y*x*y"])
    assert code == 0
    assert out.splitlines()[1:] == ["[ t^4    0 ]", "[   0    0 ]"]


def test_normal_form_example():
    code, out, _ = run(["--rel-x", "0,0", "normal-form", "x^2"])
    assert (code, out.splitlines()[-1]) == (0, "0")


def test_json_element_schema():
    code, out, _ = run(REL + ["--json", "normal-form", "2*x*y - 1/2 + r1*y"])
    assert json.loads(out)["element"] == [
        {"word": "", "coeff": "-1/2"},
        {"word": "y", "coeff": "r1"},
        {"word": "xy", "coeff": "2"},
    ]


def test_recover_round_trip(tmp_path):
    code, out, _ = run(REL + ["--json", "embed", "3*y*x*y - x + 1/3"])
    path = tmp_path / "m.json"
    path.write_text(json.dumps(json.loads(out)["matrix"]))
    code, out, _ = run(REL + ["--json", "recover", str(path)])
    assert code == 0
    assert json.loads(out)["text"] == "1/3 - x + 3*y*x*y"
    code, out, _ = run(REL + ["recover", str(path), "--degree", "2"])
    assert code == 1 and "NotInImage" in out


def test_recover_bad_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text("[1, 2]")
    assert run(["recover", str(path)])[0] == 2
    assert run(["recover", str(tmp_path / "missing.json")])[0] == 2


def test_parse_error_has_position():
    code, _, err = run(["normal-form", "x + * y"])
    assert code == 2
    assert "position 4" in err
    assert err.splitlines()[-1] == "    ^"


@pytest.mark.parametrize("argv", [
    ["--field", "Fp:4", "normal-form", "x"],
    ["--field", "Fp:5", "--rel-x", "1/5,0", "normal-form", "x"],
    ["--rel-x", "1", "normal-form", "x"],
    ["bogus"],
    [],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_zero_ideal_is_negative():
    assert run(["central-in-ideal", "0"])[0] == 1


def test_weiss_refused_over_f2():
    code, out, _ = run(["--field", "Fp:2", "refcheck-weiss"])
    assert code == 2 and "refused" in out


def test_verify_paper_f5():
    code, out, _ = run(["--field", "Fp:5", "--rel-x", "0,3", "--rel-y", "1,1", "verify-paper"])
    assert code == 0
    assert "FAIL" not in out


def test_help_has_grammar_verbatim(capsys):
    assert main(["--help"]) == 0
    assert GRAMMAR in capsys.readouterr().out


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("twoquad ")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twoquad", "normal-form", "y^2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "0"
