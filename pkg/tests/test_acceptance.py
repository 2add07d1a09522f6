"""One test per acceptance criterion, exact at N = 25.

Each test prints a single ``criterion N: PASS|FAIL`` line; the lines are
repeated in the pytest terminal summary.
"""
import time

import pytest

from invmod import binforms as B
from invmod import cli, concomitants as C, modforms as M, psi, verify
from invmod.binforms import BinaryFormSpec, Convention, form_poly, transvectant
from invmod.exactnum import TWO_PI_I, CoeffK
from invmod.multipoly import MultiPoly

N = 25
PAIRS = [(f, g) for f in ("e4", "e6") for g in ("e4", "e6")]


def _form(name):
    return M.form_by_name(name, N)


def _identity(inv_name, forms, expected, weight):
    res = psi.psi_apply(B.catalog(inv_name), [_form(f) for f in forms], N)
    rhs = M.series_from_expression(expected, N)
    ok = (
        res.series == rhs
        and res.series.prec == N
        and res.certificate.weight == weight
        and res.certificate.surplus >= M.MIN_SURPLUS
    )
    return ok, f"got {res.identification}, weight {res.certificate.weight}, surplus {res.certificate.surplus}"


def test_criterion_01_I3_e4(criterion):
    ok, detail = _identity("I3", ["e4"], "-53084160000 * pi^6 * e4 * Delta^2", 28)
    assert criterion(1, ok, detail)


def test_criterion_02_I3_e6(criterion):
    ok, detail = _identity("I3", ["e6"], "-203928109056 * pi^6 * (8*e4^3 + e6^2) * Delta^2", 36)
    assert criterion(2, ok, detail)


def test_criterion_03_cubic_linear(criterion):
    ok, detail = _identity("cubic_linear", ["e6", "e4"], "86016 * i * pi^3 * Delta * (e4^3 + 2*e6^2)", 24)
    assert criterion(3, ok, detail)


def test_criterion_04_twenty_times_transvectant(criterion):
    spec = BinaryFormSpec((3, 1), (Convention.BINOMIAL, Convention.PLAIN))
    F, G = form_poly(0, spec), form_poly(1, spec)
    lhs = transvectant(F, G**3, 3, 3, 3) * 20
    rhs = MultiPoly.parse("a0*b1^3 - 3*a1*b0*b1^2 + 3*a2*b0^2*b1 - a3*b0^3")
    assert criterion(4, lhs == rhs, f"20*(F,G^3)_3 = {lhs}")


def test_criterion_05_tri321_quasimodular(criterion):
    ok, detail = _identity(
        "tri321", ["e4", "e2", "e6"], "-20/3 * i * pi^3 * (e2^3 + 3*e2*e4 + 2*e6) * Delta", 18
    )
    assert criterion(5, ok, detail)


def test_criterion_06_rc_relation(criterion):
    bad = []
    for f, g in PAIRS:
        for r in range(4):
            lhs = psi.evaluate_invariant(B.transvectant_invariant(r), [_form(f), _form(g)], N)
            fact = 1
            for j in range(2, r + 1):
                fact *= j
            rhs = psi.rankin_cohen(_form(f), _form(g), r, N).series.scale(CoeffK((-1) ** r * fact) * TWO_PI_I**r)
            if lhs != rhs or lhs.prec != N:
                bad.append((f, g, r))
    assert criterion(6, not bad, f"{4 * len(PAIRS)} cases, mismatches {bad}")


def test_criterion_07_rc_brackets(criterion):
    bad = []
    for f, g in PAIRS:
        for r in range(4):
            F, G = _form(f), _form(g)
            b = psi.rankin_cohen(F, G, r, N)
            w = F.weight + G.weight + 2 * r
            try:
                cert = M.membership(b.series, w).surplus >= M.MIN_SURPLUS
            except M.NotInSpace:
                cert = False
            if not cert or (r > 0 and b.series[0]):
                bad.append((f, g, r))
    assert criterion(7, not bad, f"mismatches {bad}")


def test_criterion_08_equivariance(criterion):
    failed = [name for name in B.CATALOG if not B.verify_invariance(B.catalog(name), trials=5, seed=0).passed]
    assert criterion(8, not failed, f"{len(B.CATALOG)} catalog entries, failed {failed}")


def test_criterion_09_weight_certificates(criterion):
    problems = []
    cases = [
        ("I3", ["e4"]),
        ("I3", ["e6"]),
        ("cubic_linear", ["e6", "e4"]),
        ("tri321", ["e4", "e2", "e6"]),
    ]
    for name, forms in cases:
        inv, fs = B.catalog(name), [_form(f) for f in forms]
        res = psi.psi_apply(inv, fs, N)
        expected = sum(d * (f.weight + r) for d, f, r in zip(inv.degrees, fs, inv.spec.degrees))
        if res.certificate.weight != expected or res.certificate.surplus < M.MIN_SURPLUS:
            problems.append(name)
    for f, g in PAIRS:
        for r in range(4):
            res = psi.psi_apply(B.transvectant_invariant(r), [_form(f), _form(g)], N)
            if res.series.is_zero():
                continue
            if res.certificate.weight != _form(f).weight + _form(g).weight + 2 * r:
                problems.append((f, g, r))
    # the textual weight d*k + n must not certify for I3
    stated_certifies = []
    for fname in ("e4", "e6"):
        f = _form(fname)
        body = psi.psi_apply(B.catalog("I3"), [f], N, certify=False).unit.body
        try:
            M.membership(body, 4 * f.weight + 6)
            stated_certifies.append(fname)
        except (M.NotInSpace, M.InsufficientPrecision):
            pass
    ok = not problems and not stated_certifies
    assert criterion(9, ok, f"failures {problems}; d*k+n certifies for {stated_certifies}")


def test_criterion_10_self_bracket(criterion):
    rep = psi.verify_self_bracket(_form("e4"), 1, N)
    certs = rep.weight_certificates
    detail = (
        f"ratio {rep.ratio} (stated {rep.notes['stated_ratio']}); "
        f"2k+4r certified={certs['2k+4r']['certified']}, 2k+2r certified={certs['2k+2r']['certified']}"
    )
    assert criterion(10, rep.ratio is not None, detail)


def test_criterion_11_multiplicativity(criterion):
    d = B.catalog("disc2")
    ok = all(psi.psi_product_property(d, d, _form(f), N).equal for f in ("e4", "e6"))
    assert criterion(11, ok)


def test_criterion_12_weight_calculators(criterion):
    checks = [
        all(C.siegel2_invariant_weight([(2, k, 2)]).jk == (0, 2 * k + 2) for k in range(-5, 30)),
        all(
            C.siegel2_invariant_weight([(4, k1, 1), (2, k2, 2)]).jk == (0, k1 + 2 * k2 + 4)
            for k1 in range(-3, 12)
            for k2 in range(-3, 12)
        ),
        C.siegel2_covariant_weight(6, 8, 2, 8).jk == (8, C.embedding_exponent(6, 8, 2, 8)) == (8, 18),
        all(
            C.picard_weight(k, d1, d2, n).jk == (0, d1 * k + d2 * (k + 1) + n)
            for k in range(6)
            for d1 in range(4)
            for d2 in range(4)
            for n in range(4)
        ),
        str(C.picard_weight(1, 2, 1, 2)) == "(0,6)",
        C.symmetric_discriminant_weight(4, 8) == 34,
        C.symmetric_discriminant_weight(3, 4) == 14,
    ]
    assert criterion(12, all(checks), f"{sum(checks)}/{len(checks)} groups")


def test_criterion_13_formal_application(criterion):
    (v,) = C.apply_covariant_formal(B.catalog("disc2"), [["f0", "f1", "f2"]])
    H = B.hessian_covariant()
    inv = B.covariant_to_invariant(H)
    ok = (
        v == MultiPoly.parse("f1^2 - 4*f0*f2")
        and B.invariant_to_covariant(inv).poly == H.poly
        and B.verify_invariance(inv).passed
    )
    assert criterion(13, ok, f"disc2 -> {v}")


def test_checks_are_fast():
    for name, forms in [("I3", ["e6"]), ("tri321", ["e4", "e2", "e6"])]:
        t = time.perf_counter()
        psi.psi_apply(B.catalog(name), [_form(f) for f in forms], N)
        assert time.perf_counter() - t < 10


def test_corrupted_catalog_is_caught(monkeypatch, capsys):
    good = B.catalog("I3")
    bad_poly = good.poly + MultiPoly.parse("6*a1^2*a2^2")  # flips the a1^2 a2^2 sign
    bad = B.InvariantSpec(bad_poly, good.spec, good.degrees, good.order, "I3")
    results = {r.check_name: r.status for r in verify.run_suite(N, 0, {**B.CATALOG, "I3": bad})}
    assert results["equivariance[I3]"] == verify.FAIL
    assert results["psi_I3_e4"] == verify.FAIL
    monkeypatch.setitem(B.CATALOG, "I3", bad)
    code = cli.main(["verify-paper"])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL  ] equivariance[I3]" in out


def test_verify_command_json_report(capsys):
    code = cli.main(["verify-paper", "--format", "json"])
    import json

    data = json.loads(capsys.readouterr().out)
    names = {c["check_name"]: c["status"] for c in data["checks"]}
    assert set(c for c in data["checks"][0]) == {"check_name", "status", "lhs", "rhs", "details"}
    assert names["self_bracket_constant[e4]_2"] == verify.REPORT
    hard_failures = sorted(n for n, s in names.items() if s == verify.FAIL)
    assert code == (1 if hard_failures else 0)
