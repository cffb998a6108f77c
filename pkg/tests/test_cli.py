import io
import subprocess
import sys

import pytest

from affine_hecke.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_hecke_square():
    code, text = run("hecke", "mul", "--delta", "1,0,0", "--delta", "1,0,0", "--trunc", "4")
    assert code == 0
    assert text == "level 2 | 1 v^0 x^[0] + 2 v^1 x^[1] + 2 v^2 x^[0] (certified to v^4)\n"
    assert run("hecke", "mul-oracle", "--delta", "1,0,0", "--delta", "1,0,0", "--trunc", "4")[1] == text


def test_weyl_reduce_transcript():
    assert run("weyl", "reduce", "--level", "2", "--weight", "3") == (0, "1, word: s0 s1\n")
    assert run("weyl", "reduce", "--level", "2", "--weight", "1") == (0, "1, word: (empty)\n")


def test_weyl_dominants_and_config_position():
    assert run("weyl", "dominants", "--level", "2") == (0, "0\n1\n")
    assert run("weyl", "dominants", "--level", "1", "--config", "a2")[1] == "0,0\n"
    assert run("--config", "a2", "weyl", "dominants", "--level", "1")[1] == "0,0\n"


def test_char_commands():
    code, text = run("char", "irr", "1,0,0", "--trunc", "3")
    assert code == 0 and text.startswith("level 1 | 1 v^0 x^[0] + 1 v^1 x^[-1]")
    assert run("char", "freudenthal", "1,0,0", "--trunc", "3")[1] == text
    assert run("char", "expand", "1,0,0", "--trunc", "3")[1] == (
        "level 1 | 1 v^0 m^[0] + 1 v^1 m^[0] + 2 v^2 m^[0] (certified to v^3)\n")


def test_group_commands():
    assert run("group", "mul", "0/1/0/0", "0/0/1/1") == (0, "-1/1/1/1\n")
    assert run("group", "inv", "1/3/1/1") == (0, "-1/-3/2/-1\n")


def test_exit_codes(capsys):
    assert run("char", "irr", "1,0,0", "--config", "rank1_torus")[0] == 1
    assert "semisimple" in capsys.readouterr().err
    assert run("weyl", "reduce", "--level", "2", "--weight", "x")[0] == 2
    assert run("hecke", "mul", "--delta", "1,0,0")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_truncation_environment(monkeypatch):
    monkeypatch.setenv("AFFINE_HECKE_TRUNC", "2")
    assert run("hecke", "delta", "--delta", "1,0,0")[1].endswith("(certified to v^2)\n")
    assert run("hecke", "delta", "--delta", "1,0,0", "--trunc", "5")[1].endswith("(certified to v^5)\n")
    monkeypatch.setenv("AFFINE_HECKE_TRUNC", "two")
    assert run("hecke", "delta", "--delta", "1,0,0")[0] == 2


def test_verify_is_deterministic():
    first = run("verify", "all", "--seed", "7", "--cases", "100")
    assert first[0] == 0 and first == run("verify", "all", "--seed", "7", "--cases", "100")
    assert "summary: 18/18 passed" in first[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "affine_hecke", "weyl", "reduce", "--level", "2", "--weight", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1, word: s0 s1\n"
