import json

import pytest

from invmod import binforms, cli
from invmod.multipoly import MultiPoly
from invmod.qseries import QSeries


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_eis_and_delta(capsys):
    assert run(capsys, "eis", "4", "--prec", "5")[:2] == (0, "1 + 240q + 2160q^2 + 6720q^3 + 17520q^4 + 30240q^5 + O(q^6)")
    assert run(capsys, "eis", "2", "--prec", "2")[1] == "1 - 24q - 72q^2 + O(q^3)"
    assert run(capsys, "delta", "--prec", "3")[1] == "q - 24q^2 + 252q^3 + O(q^4)"
    code, _, err = run(capsys, "eis", "5")
    assert code == 2 and "even" in err


def test_json_series_reparses(capsys):
    code, out, _ = run(capsys, "eis", "6", "--prec", "8", "--format", "json")
    data = json.loads(out)
    assert QSeries.from_json(data).rational_coeffs()[:2] == [1, -504]


def test_psi(capsys):
    code, out, _ = run(capsys, "psi", "I3", "e4")
    assert code == 0
    assert out.splitlines()[0] == "-53084160000 * pi^6 * e4 * Delta^2"
    code, out, _ = run(capsys, "psi", "cubic_linear", "e6", "e4")
    assert out.splitlines()[0] == "86016 * i * pi^3 * (e4^3 + 2*e6^2) * Delta"
    code, out, _ = run(capsys, "psi", "tri321", "e4", "e2", "e6")
    assert "(e2^3 + 3*e2*e4 + 2*e6) * Delta" in out.splitlines()[0]
    assert run(capsys, "psi", "I3", "e4", "e6")[0] == 2


def test_psi_json(capsys):
    code, out, _ = run(capsys, "psi", "I3", "e6", "--format", "json")
    data = json.loads(out)
    assert data["certificate"]["weight"] == 36
    assert data["unit"] == {"i_exp": 0, "pi_exp": 6}


def test_rc_and_transvect(capsys):
    assert run(capsys, "rc", "e4", "e6", "1")[1] == "-3456 * Delta"
    code, out, _ = run(capsys, "transvect", "2", "2", "2")
    assert MultiPoly.parse(out) == MultiPoly.parse("a0*b2 - 2*a1*b1 + a2*b0")


def test_weights(capsys):
    assert run(capsys, "weights", "picard", "--k", "1", "--d1", "2", "--d2", "1", "--n", "2")[1] == "(0,6)"
    assert run(capsys, "weights", "sym-disc", "--g", "4", "--k", "8")[1] == "34"
    assert run(capsys, "weights", "siegel2-inv", "--slot", "2,5,2")[1] == "(0,12)"
    assert run(capsys, "weights", "siegel2-cov", "--j", "6", "--k", "8", "--a", "2", "--b", "8")[1] == "(8,18)"
    assert run(capsys, "weights", "embedding", "--j", "6", "--k", "8", "--a", "2", "--b", "8")[1] == "18"
    assert run(capsys, "weights", "picard", "--k", "1")[0] == 2
    code, out, _ = run(capsys, "weights", "embedding", "--j", "1", "--k", "0", "--a", "1", "--b", "0", "--format", "json")
    assert code == 2 and json.loads(out)["error"] == "UsageError"


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "check", "disc2")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "invariants", "list", "--format", "json")
    rows = json.loads(out)
    assert {r["name"] for r in rows} == set(binforms.CATALOG)
    for r in rows:
        MultiPoly.parse(r["poly"])
    assert run(capsys, "invariants", "check", "nope")[0] == 2


def test_verify_command_precision_guard(capsys):
    code, _, err = run(capsys, "verify-paper", "--prec", "10")
    assert code == 2 and "15" in err


def test_deterministic_output(capsys):
    a = run(capsys, "invariants", "check", "I3", "--seed", "7", "--format", "json")
    b = run(capsys, "invariants", "check", "I3", "--seed", "7", "--format", "json")
    assert a == b
