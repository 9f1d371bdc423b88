import json
import subprocess
import sys

import pytest

from freeconv import cli
from freeconv.cli import CliConfig, UsageError, main, parse_polynomial
from freeconv.finite_free import PolynomialFF


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestConv:
    def test_add_example(self, capsys):
        code, out, _ = run_cli(capsys, "conv", "add", "--p", "roots:1,-1", "--q", "roots:1,-1")
        assert code == 0
        assert out.strip() == '{"d":2,"a":["1","0","-2"]}'

    def test_mult_identity_echoes_input(self, capsys):
        p = '{"d":3,"a":["1","-2","1/2","7"]}'
        code, obj = run_json(capsys, "conv", "mult", "--p", p, "--q", "roots:1,1,1")
        assert code == 0 and obj == json.loads(p)

    def test_output_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "conv", "rectadd", "--p", "roots:1,4", "--q", "roots:0,9")
        back = parse_polynomial(out)
        assert back.to_json() == json.loads(out)
        code, again = run_json(capsys, "conv", "add", "--p", out.strip(), "--q", "roots:0,0")
        assert code == 0 and again == json.loads(out)

    def test_degree_mismatch(self, capsys):
        code, out, err = run_cli(capsys, "conv", "rectadd", "--p", "roots:1", "--q", "roots:1,2")
        assert code == 3 and out == "" and err

    @pytest.mark.parametrize("bad", ["roots:1,x", "roots:0.5", '{"d":1,"a":[1]}', "{not json", '{"d":1,"a":[1.5,2]}'])
    def test_parse_errors(self, capsys, bad):
        code, out, err = run_cli(capsys, "conv", "add", "--p", bad, "--q", "roots:1")
        assert code == 2 and out == "" and err.startswith("freeconv:")

    def test_argparse_errors_exit_two(self):
        with pytest.raises(SystemExit) as info:
            main(["conv", "divide", "--p", "roots:1", "--q", "roots:1"])
        assert info.value.code == 2


class TestVerify:
    def test_quadrature_signed(self, capsys):
        code, obj = run_json(capsys, "verify", "quadrature", "--group", "signed:2", "--d", "3", "--threads", "1")
        assert code == 0 and obj["pass"] and obj["group_order"] == 48
        assert obj["n_cases"] == 1 + 3 + 9 + 27

    def test_convolution_exact(self, capsys):
        code, obj = run_json(capsys, "verify", "convolution", "--kind", "add", "--method", "exact-signed", "--d", "3")
        assert code == 0 and obj["pass"] and obj["group"] == "signed:2"
        assert all(e["value"] == e["expected"] for e in obj["entries"])

    def test_convolution_mc(self, capsys):
        argv = ["verify", "convolution", "--kind", "mult", "--method", "mc", "--d", "4", "--n", "20000", "--seed", "7"]
        code, obj = run_json(capsys, *argv, "--threads", "1")
        assert code == 0 and obj["pass"]
        assert all(abs(e["value"]["z"]) <= 4 for e in obj["entries"])

    def test_deterministic_bytes(self, capsys):
        argv = ["verify", "convolution", "--kind", "rectadd", "--method", "mc", "--d", "3", "--n", "2000", "--seed", "3"]
        _, first, _ = run_cli(capsys, *argv, "--threads", "1")
        _, second, _ = run_cli(capsys, *argv, "--threads", "2")
        assert first == second

    def test_failed_check_exit_four(self, capsys, monkeypatch):
        import freeconv.quadrature as quad

        monkeypatch.setattr(quad, "expected_quadrature_value", lambda d, p: -1)
        code, obj = run_json(capsys, "verify", "quadrature", "--group", "unitary", "--d", "2", "--threads", "1")
        assert code == 4 and not obj["pass"]

    def test_budget_exit_five(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "quadrature", "--group", "signed:3", "--d", "4", "--budget", "100", "--threads", "1"
        )
        assert code == 5 and out == "" and "budget" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "quadrature", "--group", "symplectic", "--d", "2"],
            ["verify", "quadrature", "--d", "2", "--kmax", "3"],
            ["verify", "quadrature", "--d", "0"],
            ["verify", "convolution", "--method", "mc", "--d", "2", "--n", "10"],
            ["verify", "convolution", "--method", "mc", "--group", "signed:2", "--d", "2"],
            ["verify", "quadrature", "--d", "2", "--threads", "0"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 2 and out == ""


class TestTable:
    def test_wg_unitary(self, capsys):
        code, out, _ = run_cli(capsys, "table", "wg-unitary", "--k", "2", "--d", "4")
        assert code == 0 and out.strip() == '{"1,1":"1/15","2":"-1/60"}'

    def test_wg_orthogonal(self, capsys):
        code, obj = run_json(capsys, "table", "wg-orthogonal", "--k", "2", "--d", "3")
        assert code == 0 and obj == {"1,1": "2/15", "2": "-1/30"}

    def test_char(self, capsys):
        code, obj = run_json(capsys, "table", "char", "--k", "3")
        assert code == 0 and len(obj) == 3 and all(len(row) == 3 for row in obj.values())
        assert obj["2,1"] == {"1,1,1": "2", "2,1": "0", "3": "-1"}

    def test_zonal(self, capsys):
        code, out, _ = run_cli(capsys, "table", "zonal", "--k", "1")
        assert code == 0 and json.loads(out) == {"1": {"1": "1"}}

    def test_errors(self, capsys):
        assert run_cli(capsys, "table", "zonal", "--k", "7")[0] == 5
        assert run_cli(capsys, "table", "char", "--k", "13")[0] == 5
        assert run_cli(capsys, "table", "wg-unitary", "--k", "3", "--d", "2")[0] == 2
        assert run_cli(capsys, "table", "wg-unitary", "--k", "2")[0] == 2


class TestSample:
    @pytest.mark.parametrize("group", ["unitary", "orthogonal"])
    def test_sample(self, capsys, group):
        code, obj = run_json(capsys, "sample", "--group", group, "--d", "3", "--seed", "11")
        assert code == 0 and obj["unitarity_error"] <= 1e-10
        assert len(obj["entries"]) == 3 and all(len(z) == 2 for row in obj["entries"] for z in row)
        _, again = run_json(capsys, "sample", "--group", group, "--d", "3", "--seed", "11")
        assert again == obj

    def test_rejects_signed(self, capsys):
        assert run_cli(capsys, "sample", "--group", "signed:2", "--d", "2")[0] == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "poly.json"
    code, out, _ = run_cli(capsys, "conv", "add", "--p", "roots:2", "--q", "roots:3", "--out", str(target))
    assert code == 0 and out == ""
    assert PolynomialFF.from_json(target.read_text()) == PolynomialFF.from_roots([5])


def test_config_validation():
    with pytest.raises(UsageError):
        CliConfig("verify", "quadrature", d=2, budget=0).validate()
    with pytest.raises(UsageError):
        CliConfig("verify", "convolution", d=2, cases=0).validate()
    CliConfig("table", "char", k=3).validate()
    assert set(cli.COMMANDS) == {"conv", "verify", "table", "sample"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freeconv", "table", "wg-unitary", "--k", "1", "--d", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"1": "1/3"}
