import json
import subprocess
import sys

import pytest

from mbword.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_power_exit_codes(capsys):
    code, out, _ = run(capsys, "--json", "power", "8")
    assert code == 10
    data = json.loads(out)
    assert data["kind"] == "NOT_MB" and data["config"]["seed"] == 0
    assert run(capsys, "power", "-3")[0] == 0
    code, _, err = run(capsys, "power", "0")
    assert code == 2 and "empty" in err


def test_flags_after_command(capsys):
    code, out, _ = run(capsys, "power", "12", "--json", "--seed", "5")
    assert code == 10
    data = json.loads(out)
    assert data["config"]["seed"] == 5
    assert data["certificates"][0]["kind"] == "divisibility"


def test_word(capsys):
    code, out, _ = run(capsys, "word", "abAB")
    assert code == 0 and "VSMB" in out and "R3" in out
    assert run(capsys, "word", "a^8")[0] == 10
    assert run(capsys, "word", "a^8", "--mode", "vwmb")[0] == 10
    assert run(capsys, "word", "aA")[0] == 2
    assert run(capsys, "word", "a^")[0] == 2
    assert run(capsys, "word", "ab", "--mode", "nope")[0] == 2


def test_bad_global_values(capsys):
    assert run(capsys, "--budget", "0", "power", "3")[0] == 2
    assert run(capsys, "--jobs", "0", "power", "3")[0] == 2


def test_sweep(capsys, tmp_path):
    assert run(capsys, "sweep", "9")[0] == 2
    code, out, _ = run(capsys, "sweep", "4")
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["type"] == "config" and lines[-1]["type"] == "summary"
    assert lines[-1]["ok"] and lines[-1]["certified"] == [1, 2, 3, 4]
    assert run(capsys, "sweep", "3", "--resume")[0] == 2
    out_file = tmp_path / "s.jsonl"
    assert run(capsys, "sweep", "3", "--out", str(out_file))[0] == 0
    assert run(capsys, "sweep", "3", "--out", str(out_file), "--resume")[0] == 0
    assert json.loads(out_file.read_text().splitlines()[-1])["ok"]


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "fibers")
    assert code == 0 and "passed" in out
    code, out, _ = run(capsys, "--json", "oracle", "constant-cosets")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["count"] == 6
    assert run(capsys, "oracle", "nope")[0] == 2


def test_field(capsys):
    assert run(capsys, "field", "verify", "2", "2", "1,1,1")[0] == 0
    assert run(capsys, "field", "verify", "2", "2", "1,0,1")[0] == 1
    assert run(capsys, "field", "verify", "2", "2", "1,1")[0] == 2
    assert run(capsys, "field", "verify", "2", "2", "1,x,1")[0] == 2
    code, out, _ = run(capsys, "--json", "field", "find-irreducible", "3", "5", "--primitive")
    data = json.loads(out)
    assert code == 0 and data["irreducible"] and data["primitive"]
    assert len(data["modulus"]) == 6
    assert run(capsys, "field", "verify", "19", "256",
               ",".join(map(str, data["modulus"])))[0] == 2
    assert run(capsys, "field", "find-irreducible", "4", "2")[0] == 2


def test_missing_command(capsys):
    assert run(capsys)[0] == 2


@pytest.mark.parametrize("args,code", [(["power", "7"], 0), (["power", "16"], 10)])
def test_console_script(args, code):
    proc = subprocess.run([sys.executable, "-m", "mbword.cli", *args], capture_output=True, text=True)
    assert proc.returncode == code, proc.stderr
