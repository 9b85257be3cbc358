import json

import pytest

from opow.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_expand_text_generic(capsys):
    code, out = run_cli(capsys, "expand", "--k", "2", "--format", "text")
    assert code == 0
    assert out == "A^2 = (u u') D^1 + (u^2) D^2\n"


def test_expand_text_identity_z(capsys):
    code, out = run_cli(capsys, "expand", "--k", "3", "--u", "z", "--format", "text")
    assert code == 0
    assert out == "A^3 = 1 z^1 D^1 + 3 z^2 D^2 + 1 z^3 D^3\n"


def test_expand_json_inverse_z(capsys):
    code, out = run_cli(capsys, "expand", "--k", "3", "--u", "inv-z", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 3
    assert payload["u"] == "inv-z"
    assert payload["terms"] == [[3, -5, 1], [-3, -4, 2], [1, -3, 3]]


def test_expand_json_exp_factor(capsys):
    code, out = run_cli(capsys, "expand", "--k", "2", "--u", "exp", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exp_factor"] == 2
    assert payload["terms"] == [[1, 0, 1], [1, 0, 2]]


def test_expand_text_polynomial(capsys):
    code, out = run_cli(capsys, "expand", "--k", "1", "--u", "poly:1,1", "--format", "text")
    assert code == 0
    assert out == "A^1 = 1 D^1 + 1 z^1 D^1\n"


def test_expand_latex(capsys):
    code, out = run_cli(capsys, "expand", "--k", "2", "--format", "latex")
    assert code == 0
    assert out.startswith("A^{2} = ")
    assert r"\frac{d}{dz}" in out


def test_expand_generic_json(capsys):
    code, out = run_cli(capsys, "expand", "--k", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == [
        {"s": 1, "monomials": [{"coeff": 1, "exps": [1, 1]}]},
        {"s": 2, "monomials": [{"coeff": 1, "exps": [2]}]},
    ]


def test_ctable_csv(capsys):
    code, out = run_cli(capsys, "ctable", "--k-max", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,s,m,alpha,value"
    assert "3,1,1,1,3" in lines
    assert "3,2,1,0;1,1" in lines
    assert "3,2,2,2,1" in lines
    assert "4,2,2,2,7" in lines


def test_atable_csv(capsys):
    code, out = run_cli(capsys, "atable", "--k-max", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,s,value"
    assert "3,1,3" in lines
    assert "3,2,-3" in lines
    assert "4,4,1" in lines


def test_stirling_csv(capsys):
    code, out = run_cli(capsys, "stirling", "--kind", "2", "--n-max", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,m,value"
    assert "4,2,7" in lines and "4,3,6" in lines and "4,4,1" in lines
    code, out = run_cli(capsys, "stirling", "--kind", "1", "--n-max", "4", "--format", "csv")
    assert "4,2,11" in out.splitlines()


def test_stirling_json(capsys):
    code, out = run_cli(capsys, "stirling", "--kind", "1", "--n-max", "4", "--format", "json")
    payload = json.loads(out)
    assert payload["rows"] == [[1], [1, 1], [2, 3, 1], [6, 11, 6, 1]]


def test_json_round_trips(capsys):
    for argv in (
        ["ctable", "--k-max", "4", "--format", "json"],
        ["atable", "--k-max", "4", "--format", "json"],
        ["stirling", "--kind", "2", "--n-max", "5", "--format", "json"],
        ["expand", "--k", "3", "--u", "inv-z", "--format", "json"],
    ):
        _, out = run_cli(capsys, *argv)
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_verify_suite_passes(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "closed-form", "--k-max", "10")
    assert code == 0
    assert out.splitlines()[0].startswith("[PASS] closed-form:")
    assert out.splitlines()[-1].startswith("overall: PASS")


def test_verify_oracle_check_count(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "oracle", "--k-max", "3", "--seed", "42")
    assert code == 0
    assert "checks=150" in out.splitlines()[0]


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "--suite", "oracle", "--k-max", "3", "--seed", "9")
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert first == second


def test_usage_errors_exit_two(capsys):
    for argv in (
        ["expand", "--k", "0"],
        ["expand", "--k", "2", "--format", "csv"],
        ["expand", "--k", "2", "--u", "tan"],
        ["expand", "--k", "2", "--u", "poly:1,nope"],
        ["ctable", "--k-max", "1"],
        ["stirling", "--kind", "3", "--n-max", "4"],
        ["verify", "--suite", "nonsense"],
        ["frobnicate"],
    ):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2
        capsys.readouterr()


def test_env_cap_enforced(monkeypatch, capsys):
    monkeypatch.setenv("OPOW_MAX_K", "5")
    with pytest.raises(SystemExit) as err:
        main(["expand", "--k", "6"])
    assert err.value.code == 2
    capsys.readouterr()
    assert main(["expand", "--k", "5"]) == 0
    capsys.readouterr()


def test_default_cap_allows_forty(monkeypatch, capsys):
    monkeypatch.delenv("OPOW_MAX_K", raising=False)
    assert main(["atable", "--k-max", "40", "--format", "csv"]) == 0
    capsys.readouterr()
    with pytest.raises(SystemExit):
        main(["atable", "--k-max", "41"])
    capsys.readouterr()
