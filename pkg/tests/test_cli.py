import json

import pytest

from msnlib.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out.rstrip("\n")


@pytest.fixture
def chain_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({"P": [["1/2", "1/2"], ["2/3", "1/3"]], "M": [1]}))
    return str(path)


class TestScalarCommands:
    def test_msn(self, capsys):
        assert invoke(capsys, "msn", "3", "2", "1") == (0, "12")

    def test_msn_diagonal_factorial(self, capsys):
        assert invoke(capsys, "msn", "4", "4", "7") == (0, "24")

    def test_msn_rational_k(self, capsys):
        code, out = invoke(capsys, "msn", "2", "1", "-1/2")
        assert code == 0 and out == "0"

    def test_msn1(self, capsys):
        assert invoke(capsys, "msn1", "2", "1", "1") == (0, "-3")

    def test_json_envelope(self, capsys):
        code, out = invoke(capsys, "msn", "3", "2", "1", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "msn"
        assert doc["result"]["value"] == "12"
        assert doc["status"] == {"code": "ok", "message": ""}
        assert doc["inputs"] == {"i": 3, "j": 2, "k": "1"}


class TestTable:
    def test_text(self, capsys):
        code, out = invoke(capsys, "table", "2", "0")
        assert code == 0
        assert out.splitlines() == ["i=0: 1", "i=1: 0 1", "i=2: 0 1 2"]

    def test_csv(self, capsys):
        code, out = invoke(capsys, "table", "2", "1/2", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "i,j0,j1,j2"
        assert lines[1] == "0,1"

    def test_json_round_trip(self, capsys):
        code, out = invoke(capsys, "table", "3", "1/3", "--format", "json")
        doc = json.loads(out)
        assert doc["result"]["k"] == "1/3"
        assert doc["result"]["rows"][3][0] == "1/27"


class TestInvcheck:
    def test_pass_verdict(self, capsys):
        code, out = invoke(capsys, "invcheck", "6", "1", "1/2")
        assert code == 0
        assert out.endswith("PASS")

    def test_json(self, capsys):
        code, out = invoke(capsys, "invcheck", "4", "2", "2", "--format", "json")
        doc = json.loads(out)
        assert doc["result"]["pass"] is True
        # product at equal shifts is the identity
        assert doc["result"]["product"][2][2] == "1"
        assert doc["result"]["product"][3][1] == "0"


class TestGfCheck:
    def test_all(self, capsys):
        code, out = invoke(
            capsys, "gf-check", "--jmax", "3", "--kset=-1,0,1/2,2", "--order", "8"
        )
        assert code == 0
        lines = out.splitlines()
        assert [l.split(":")[0] for l in lines] == ["ogf", "egf", "bgf"]
        assert all("PASS" in l for l in lines)

    def test_single(self, capsys):
        code, out = invoke(
            capsys, "gf-check", "--which", "egf", "--jmax", "2", "--kset=0,1", "--order", "6"
        )
        assert code == 0 and out.startswith("egf: PASS")


class TestIdentitySuite:
    def test_small_run_all_pass(self, capsys):
        code, out = invoke(capsys, "identity-suite", "--imax", "5", "--order", "5")
        assert code == 0
        assert out.endswith("ALL PASS")
        assert "a17" in out

    def test_json(self, capsys):
        code, out = invoke(
            capsys, "identity-suite", "--imax", "4", "--order", "4", "--format", "json"
        )
        doc = json.loads(out)
        assert doc["result"]["all_pass"] is True
        labels = {entry["label"] for entry in doc["result"]["identities"]}
        assert {"a8", "a17", "a46", "ogf", "comb"} <= labels


class TestMarkov:
    def test_methods_agree(self, capsys, chain_file):
        outs = {}
        for method in ("recursive", "closed", "convolved", "commutable"):
            code, out = invoke(
                capsys,
                "markov", "--chain", chain_file, "--var", "R", "--k", "1",
                "--m", "2", "--method", method,
            )
            assert code == 0
            outs[method] = out
        assert len(set(outs.values())) == 1

    def test_convolved_k2(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "markov", "--chain", chain_file, "--var", "N", "--k", "2", "--m", "1",
        )
        assert code == 0 and out == "13/3"

    def test_barred_variable(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "markov", "--chain", chain_file, "--var", "Rbar", "--k", "1",
            "--m", "1", "--method", "closed",
        )
        assert code == 0 and out == "7/3"

    def test_recursive_rejects_higher_k(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "markov", "--chain", chain_file, "--var", "N", "--k", "2", "--m", "1",
            "--method", "recursive",
        )
        assert code == 3 and "precondition" in out

    def test_absorbing_chain_exits_3(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"P": [["1", "0"], ["0", "1"]], "M": [1]}))
        code, out = invoke(
            capsys, "markov", "--chain", str(path), "--var", "N", "--k", "1", "--m", "1"
        )
        assert code == 3

    def test_json_status_on_precondition(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "markov", "--chain", chain_file, "--var", "N", "--k", "3", "--m", "1",
            "--method", "recursive", "--format", "json",
        )
        assert code == 3
        doc = json.loads(out)
        assert doc["status"]["code"] == "precondition-failed"


class TestDist:
    def test_negbinomial_raw(self, capsys):
        code, out = invoke(
            capsys, "dist", "--spec", '{"type":"negbinomial","p":"1/2","k":3}', "--m", "2"
        )
        assert code == 0
        assert out.splitlines() == ["m=0: 1", "m=1: 6", "m=2: 42"]

    def test_poisson_central_json(self, capsys):
        code, out = invoke(
            capsys,
            "dist", "--spec", '{"type":"poisson","lambda":"3/2"}',
            "--m", "3", "--central", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["result"]["moments"] == ["1", "0", "3/2", "3/2"]

    def test_bad_spec_exits_3(self, capsys):
        code, _ = invoke(
            capsys, "dist", "--spec", '{"type":"poisson","lambda":"0"}', "--m", "1"
        )
        assert code == 3


class TestSimulate:
    def test_runs_and_reports(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "simulate", "--chain", chain_file, "--var", "N", "--k", "1",
            "--reps", "5000", "--seed", "42", "--backend", "numpy",
        )
        assert code == 0
        assert "backend=numpy" in out

    def test_json(self, capsys, chain_file):
        code, out = invoke(
            capsys,
            "simulate", "--chain", chain_file, "--var", "N", "--k", "1",
            "--reps", "2000", "--seed", "1", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["result"]["completed"] == 2000
        assert len(doc["result"]["estimates"]) == 4


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["msn", "3", "2", "bogus"])
    assert exc.value.code == 2


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "msnlib.cli", "msn", "5", "3", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "150"
