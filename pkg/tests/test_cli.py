"""The command-line interface, exercised through its main entry point."""

from __future__ import annotations

import json

import pytest

from exsub.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_wellformed(capsys):
    code, out = run(capsys, "check", r"\x. W x * x")
    assert code == 0
    assert out.splitlines()[0].startswith("R5")


def test_check_with_context(capsys):
    code, out = run(capsys, "check", "x", "--context", "{x}; y")
    assert code == 0 and "R3" in out


def test_check_ill_formed(capsys):
    code, out = run(capsys, "check", r"\x. W y * x")
    assert code == 1 and "ill-formed" in out


def test_fv(capsys):
    code, out = run(capsys, "fv", r"\x. x y")
    assert code == 0 and out.strip() == "{y}"
    code, out = run(capsys, "fv", r"\x. W y * z")
    assert code == 1 and out.strip() == "undefined"


def test_good(capsys):
    assert run(capsys, "good", "x y")[0] == 0
    assert run(capsys, "good", "W x * a")[0] == 1


def test_reduce_text_trace(capsys):
    code, out = run(capsys, "reduce", r"(\x.x) y", "--steps", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == r"(\x. x) y"
    assert lines[1].startswith("Beta")
    assert lines[-1].split("\t")[-1] == "y"


def test_reduce_json_trace(capsys):
    code, out = run(capsys, "reduce", r"(\x.\y.x) y", "--steps", "10",
                    "--trace", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["steps"][-1]["printedTerm"] == r"\z. y"
    assert {"ruleName", "pathAsChildIndices", "freshVariableOrNull",
            "printedTerm"} == set(doc["steps"][0])


def test_reduce_strategies(capsys):
    _, out = run(capsys, "reduce", r"([y/x] * x) ([z/x] * x)",
                 "--strategy", "index:1")
    assert out.strip().splitlines()[-1].endswith("([y/x] * x) z")


def test_normalize(capsys):
    code, out = run(capsys, "normalize", r"(\x.\y.\z. x z (y z)) (\x.\y.x)")
    assert code == 0 and out.strip() == r"\y. \z. z"
    code, out = run(capsys, "normalize", r"\y. W y * y", "--rules", "sigma")
    assert out.strip() == r"\y. W y * y"
    code, out = run(capsys, "normalize", r"\y. W y * y", "--rules", "sigma-alpha")
    assert out.strip() == r"\z. y"


def test_translate(capsys):
    code, out = run(capsys, "translate", r"\x. W x * x", "--context", "{x}")
    assert code == 0 and out.strip() == r"\x[^]"
    _, out = run(capsys, "translate", r"\x. W x * x", "--context", "{x}",
                 "--calculus", "upsilon2")
    assert out.strip() == r"\!x[^]"
    _, out = run(capsys, "translate", r"\x. W x * x", "--context", "{x}",
                 "--notation", "compose")
    assert out.strip() == r"\W * x"
    code, _ = run(capsys, "translate", "x", "--context", "{}")
    assert code == 1


def test_equiv(capsys):
    code, out = run(capsys, "equiv", r"\x. W x * x", r"\y. x", "--context", "{x}")
    assert code == 0 and out.strip() == "true"
    code, out = run(capsys, "equiv", r"\x. W x * x", r"\x. x", "--alpha")
    assert code == 1 and out.strip() == "false"
    code, out = run(capsys, "equiv", r"\x. W x * x", r"\y. x")
    assert code == 0  # alpha comparison is the default without a context


def test_nf(capsys):
    code, out = run(capsys, "nf", r"\y. W y * y")
    assert code == 0
    assert "sigma-nf: yes" in out and "pure: no" in out
    code, out = run(capsys, "nf", "[y/x] * x")
    assert code == 1 and "sigma-nf: no" in out


def test_test_subcommand(capsys):
    code, out = run(capsys, "test", "fv-least", "--seed", "0", "--count", "20")
    assert code == 0 and "20/20 passed" in out


def test_test_subcommand_json(capsys):
    code, out = run(capsys, "test", "upsilon-weights", "--count", "15", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["trials"] == 15 and doc["failures"] == []


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["test", "bogus-suite"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_parse_error_is_clean_exit(capsys):
    with pytest.raises(SystemExit):
        main(["fv", "((("])
