import json

import pytest

from nscauchy.cli import main
from nscauchy.laurent import LaurentPoly, standard_varset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("index,expected", [("A:0,1", "x1 + x2"), ("A:0,1:hat", "x2"), ("A:2,1", "x1^2*x2")])
def test_key(capsys, index, expected):
    code, out, _ = run(capsys, "key", index, "--format", "pretty")
    assert code == 0 and out.strip() == expected


def test_key_json_round_trips(capsys):
    code, out, _ = run(capsys, "key", "C:-1,0")
    f = LaurentPoly.from_dict(json.loads(out))
    assert f.pretty() == "x1 + x2 + x2^-1 + x1^-1"


@pytest.mark.parametrize("argv,expected", [
    (("--type", "A", "1,0"), "x1 + x2"),
    (("--type", "C", "1"), "x1 + x1^-1"),
    (("--type", "B", "1"), "x1 + 1 + x1^-1"),
])
def test_character(capsys, argv, expected):
    code, out, _ = run(capsys, "character", *argv, "--format", "pretty")
    assert code == 0 and out.strip() == expected


def test_bad_inputs_exit_2(capsys):
    assert run(capsys, "key", "A:-1,0")[0] == 2
    assert run(capsys, "key", "nonsense")[0] == 2
    assert run(capsys, "character", "--type", "D", "1,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "lemma99"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ("theorem6", "--type", "A", "--n", "2", "--maxdeg", "4"),
    ("theorem15", "--type", "C", "--n", "2", "--bound", "3"),
    ("braid", "--type", "D", "--n", "3"),
])
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass" and report["counterexample"] is None
    assert set(report) >= {"identity", "type", "n", "maxdeg", "status", "checks", "counterexample"}


def test_verify_is_deterministic(capsys):
    argv = ("verify", "theorem8", "--type", "BC", "--n", "2", "--trials", "5", "--seed", "7")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_failure_exit_code(capsys, monkeypatch):
    from nscauchy import verify
    from nscauchy.report import VerificationReport

    def broken(cfg):
        r = VerificationReport("lemma1", cfg.n)
        r.record(False, note="forced")
        return r

    monkeypatch.setitem(verify.IDENTITIES, "lemma1", broken)
    code, out, _ = run(capsys, "verify", "lemma1")
    assert code == 1 and json.loads(out)["counterexample"] == {"note": "forced"}


def test_scalar_and_gram(capsys, tmp_path):
    vs = standard_varset(1)
    path = tmp_path / "f.json"
    path.write_text(vs.one().to_json())
    code, out, _ = run(capsys, "scalar", "--type", "C", "--n", "1", f"@{path}", "C:1:hat", "--format", "pretty")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "scalar", "--type", "BC", "--n", "1", "BC:-1", "BC:-1:hat", "--format", "pretty")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "gram", "--type", "BC", "--n", "1", "--bound", "1", "--beta", "1/2")
    gram = json.loads(out)
    assert gram["pattern_holds"] and gram["entries"][1][2] == "1"


def test_kernel_and_denominator(capsys, tmp_path):
    out_file = tmp_path / "k.json"
    code, _, _ = run(capsys, "kernel", "--type", "A", "--n", "2", "--maxdeg", "1", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert code == 0 and len(data["slices"]) == 2
    code, out, _ = run(capsys, "denominator", "--type", "C", "--n", "1", "--format", "pretty", "--form", "sum")
    assert out.strip() == "x1 - x1^-1"
    code, out, _ = run(capsys, "kernel", "--type", "BC", "--n", "1", "--maxdeg", "1", "--beta", "x")
    assert code == 2
