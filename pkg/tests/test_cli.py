import json
import subprocess
import sys

import pytest

from fsword.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    assert run(capsys, "check", "000101100111", "--circular") == (0, "circular FS\n", "")
    code, out, _ = run(capsys, "check", "01010")
    assert code == 1 and out.startswith("not FS: square (10)^2")
    assert run(capsys, "check", "abcbabcab")[0] == 0
    code, out, _ = run(capsys, "check", "abcab", "--circular")
    assert code == 1 and "square-free" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "0000", "--json")
    d = json.loads(out)
    assert code == 1 and d["holds"] is False
    assert d["square"] == {"index": 1, "period": 2, "root": "00"}


def test_check_bad_word(capsys):
    code, _, err = run(capsys, "check", "01x")
    assert code == 2 and err


def test_construct(capsys, tmp_path):
    cert_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "construct", "300", "--certificate", str(cert_file))
    assert code == 0 and "f_" in out
    assert json.loads(cert_file.read_text())["m"] == 300
    code, out, _ = run(capsys, "replay", str(cert_file))
    assert code == 0 and len(out.strip()) == 300


def test_construct_impossible(capsys):
    code, out, _ = run(capsys, "construct", "9")
    assert code == 1
    assert out.startswith("impossible (forbidden length; exhaustive search,")


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "7", "--json")
    assert code == 0 and json.loads(out)["kind"] == "explicit"


def test_construct_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("FSWORD_SEED", "x")
    assert run(capsys, "construct", "300")[0] == 2
    monkeypatch.setenv("FSWORD_SEED", "4")
    assert run(capsys, "construct", "300")[0] == 0


def test_replay_bad_file(capsys, tmp_path):
    assert run(capsys, "replay", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 10, "kind": "explicit", "witness": "0" * 10}))
    code, out, _ = run(capsys, "replay", str(bad))
    assert code == 1 and out.startswith("rejected")


def test_search(capsys):
    assert run(capsys, "search", "7", "--count") == (0, "7 exists 0001011 2\n", "")
    assert run(capsys, "search", "9")[:2] == (1, "9 none –\n")
    code, out, _ = run(capsys, "search", "--range", "8", "10")
    assert code == 0 and out.splitlines()[1].startswith("9 none")
    assert run(capsys, "search")[0] == 2
    assert run(capsys, "search", "500")[0] == 2


def test_coverage(capsys):
    code, out, _ = run(capsys, "coverage", "--max", "60", "--json")
    d = json.loads(out)
    assert code == 0 and 9 in d["unreachable"] and 54 not in d["unreachable"]


def test_morphism_check(capsys, tmp_path):
    code, out, _ = run(capsys, "morphism", "check", "builtin:16")
    assert code == 0
    f = tmp_path / "f.txt"
    f.write_text("a -> 0110\nb -> 1001\nc -> 0111\nd -> 1000\n")
    assert run(capsys, "morphism", "check", str(f))[0] == 1
    f.write_text("a -> 0110\nb -> 1001\n")
    assert run(capsys, "morphism", "check", str(f))[0] == 2
    assert run(capsys, "morphism", "check", "builtin:99")[0] == 2


def test_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "verify")
    assert code == 0 and out == "catalog ok: 33 morphisms, 40 words\n"
    code, out, _ = run(capsys, "catalog", "export", "--id", "16")
    assert code == 0 and out.startswith("# f_16\na -> ")
    f = tmp_path / "f16.txt"
    f.write_text(out)
    assert run(capsys, "morphism", "check", str(f))[0] == 0
    assert run(capsys, "catalog", "export")[0] == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fsword", "check", "0110"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "FS\n"
