"""Command-line driver: ``invmod <command> ...``.

Exit codes: 0 success, 1 check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import binforms, concomitants, modforms, psi, verify
from .binforms import BinaryFormSpec, Convention, form_poly
from .multipoly import MultiPoly
from .qseries import DEFAULT_PREC

DEFAULT_SEED = 20240101


class UsageError(Exception):
    pass


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_eis(args) -> int:
    if args.k < 2 or args.k % 2:
        raise UsageError(f"Eisenstein series need even k >= 2, got {args.k}")
    f = modforms.eisenstein(args.k, args.prec)
    _emit(args, str(f.series), {"name": f.name, "weight": f.weight, **f.series.to_json()})
    return 0


def cmd_delta(args) -> int:
    f = modforms.delta(args.prec)
    _emit(args, str(f.series), {"name": f.name, "weight": f.weight, **f.series.to_json()})
    return 0


def _forms(names, prec):
    try:
        return [modforms.form_by_name(n, prec) for n in names]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_psi(args) -> int:
    try:
        inv = binforms.catalog(args.invariant)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if len(args.forms) != len(inv.spec):
        raise UsageError(f"{inv.name} takes {len(inv.spec)} forms, got {len(args.forms)}")
    res = psi.psi_apply(inv, _forms(args.forms, args.prec), args.prec)
    text = "\n".join(
        [
            str(res.identification),
            f"weight {res.claimed_weight}{' (quasimodular)' if res.quasimodular else ''}, "
            f"certified with {res.certificate.surplus} surplus coefficients",
            f"series: {res.series.truncate(min(args.prec, 4))}",
        ]
    )
    _emit(args, text, res.to_json())
    return 0


def cmd_rc(args) -> int:
    f, g = _forms([args.f, args.g], args.prec)
    b = psi.rankin_cohen(f, g, args.r, args.prec)
    quasi = b.quasimodular
    ident = modforms.identify(b.series, b.weight, quasi)
    _emit(args, str(ident), {"name": b.name, "weight": b.weight, "identification": str(ident), "series": b.series.to_json()})
    return 0


def cmd_transvect(args) -> int:
    m, n = args.m, args.n
    spec = BinaryFormSpec((m, n), Convention(args.convention))
    F = MultiPoly.parse(args.F) if args.F else form_poly(0, spec)
    G = MultiPoly.parse(args.G) if args.G else form_poly(1, spec)
    try:
        out = binforms.transvectant(F, G, args.r, m, n)
    except binforms.DegreeMismatch as exc:
        raise UsageError(str(exc)) from None
    _emit(args, str(out), {"m": m, "n": n, "r": args.r, "F": str(F), "G": str(G), "result": str(out)})
    return 0


def _slots(raw, width, convert=int):
    out = []
    for s in raw or []:
        parts = s.split(",")
        if len(parts) != width:
            raise UsageError(f"slot {s!r} needs {width} comma-separated values")
        out.append(tuple(convert(p, i) for i, p in enumerate(parts)))
    return out


def cmd_weights(args) -> int:
    c = concomitants
    rule = args.rule
    need = {
        "siegel2-inv": [],
        "siegel2-cov": ["j", "k", "a", "b"],
        "siegel2-multicov": ["b"],
        "picard": ["k", "d1", "d2", "n"],
        "sym-disc": ["g", "k"],
        "elliptic-char": ["k", "d", "n"],
        "embedding": ["j", "k", "a", "b"],
    }[rule]
    missing = [p for p in need if getattr(args, p) is None]
    if missing:
        raise UsageError(f"rule {rule} needs --{', --'.join(missing)}")
    try:
        if rule == "siegel2-inv":
            slots = _slots(args.slot, 3, lambda p, i: int(p))
            w = c.siegel2_invariant_weight(slots)
            data, text = {"weight": list(w.jk)}, str(w)
        elif rule == "siegel2-cov":
            w = c.siegel2_covariant_weight(args.j, args.k, args.a, args.b)
            data, text = {"weight": list(w.jk)}, str(w)
        elif rule == "siegel2-multicov":
            slots = _slots(args.slot, 4, lambda p, i: p if i == 2 else int(p))
            w = c.siegel2_multicovariant_weight(slots, args.b)
            data = {"weight": list(w.jk), "character": str(w.character)}
            text = f"{w} {w.character}"
        elif rule == "picard":
            w = c.picard_weight(args.k, args.d1, args.d2, args.n)
            data, text = {"weight": list(w.jk)}, str(w)
        elif rule == "sym-disc":
            w = c.symmetric_discriminant_weight(args.g, args.k)
            data, text = {"weight": w}, str(w)
        elif rule == "elliptic-char":
            data = c.elliptic_character_weight(args.k, args.d, args.n)
            text = f"stated {data['stated']}, validated {data['validated']}, character chi^{data['character_power']}"
        else:
            w = c.embedding_exponent(args.j, args.k, args.a, args.b)
            data, text = {"l": w}, str(w)
    except c.NonIntegralWeight as exc:
        raise UsageError(str(exc)) from None
    _emit(args, text, {"rule": rule, **data})
    return 0


def cmd_invariants(args) -> int:
    if args.action == "list":
        rows = []
        for name in binforms.CATALOG:
            inv = binforms.catalog(name)
            rows.append(
                {
                    "name": name,
                    "form_degrees": list(inv.spec.degrees),
                    "conventions": [cv.value for cv in inv.spec.conventions],
                    "degrees": list(inv.degrees),
                    "order": inv.order,
                    "poly": str(inv.poly),
                }
            )
        text = "\n".join(
            f"{r['name']}: V{'+V'.join(map(str, r['form_degrees']))} d={tuple(r['degrees'])} n={r['order']}  {r['poly']}"
            for r in rows
        )
        _emit(args, text, rows)
        return 0
    if not args.name:
        raise UsageError("invariants check needs a catalog name")
    try:
        inv = binforms.catalog(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rep = binforms.verify_invariance(inv, trials=args.trials, seed=args.seed)
    _emit(args, f"{args.name}: {'pass' if rep.passed else 'fail'} (det^{inv.order}, {rep.trials} trials)", rep.to_json())
    return 0 if rep.passed else 1


def cmd_verify_paper(args) -> int:
    if args.prec < verify.MIN_VERIFY_PREC:
        raise UsageError(f"verify-paper needs --prec >= {verify.MIN_VERIFY_PREC}")
    results = verify.run_suite(args.prec, args.seed)
    ok = verify.suite_passed(results)
    if args.format == "json":
        print(json.dumps({"passed": ok, "checks": [r.to_json() for r in results]}, indent=2, sort_keys=True))
    else:
        for r in results:
            line = f"[{r.status.upper():6}] {r.check_name}"
            if r.status == verify.REPORT:
                line += f": {r.lhs} vs {r.rhs} {json.dumps(r.details, sort_keys=True)}"
            elif r.status == verify.FAIL:
                line += f": got {r.lhs!r}, expected {r.rhs!r}"
            print(line)
        nfail = sum(r.status == verify.FAIL for r in results)
        print(f"{len(results)} checks, {nfail} failed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=DEFAULT_PREC, help="series precision N (default 25)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="invmod", description="Modular forms from invariants of binary forms.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eis", parents=[common], help="normalized Eisenstein series e_k")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_eis)

    s = sub.add_parser("delta", parents=[common], help="the weight 12 cusp form Delta")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("psi", parents=[common], help="apply a catalog invariant to forms")
    s.add_argument("invariant")
    s.add_argument("forms", nargs="+")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("rc", parents=[common], help="Rankin-Cohen bracket [f,g]_r")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_rc)

    s = sub.add_parser("transvect", parents=[common], help="transvectant (F,G)_r")
    s.add_argument("m", type=int, help="x-degree of F")
    s.add_argument("n", type=int, help="x-degree of G")
    s.add_argument("r", type=int)
    s.add_argument("--F", help="polynomial in x1, x2 (default: generic form in a_i)")
    s.add_argument("--G", help="polynomial in x1, x2 (default: generic form in b_i)")
    s.add_argument("--convention", choices=("binomial", "plain"), default="binomial")
    s.set_defaults(func=cmd_transvect)

    s = sub.add_parser("weights", parents=[common], help="weight calculators")
    s.add_argument(
        "rule",
        choices=("siegel2-inv", "siegel2-cov", "siegel2-multicov", "picard", "sym-disc", "elliptic-char", "embedding"),
    )
    for name in ("j", "k", "a", "b", "d", "n", "g", "d1", "d2"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--slot", action="append", help="j,k,d (siegel2-inv) or j,k,chi,a (siegel2-multicov)")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("invariants", parents=[common], help="list or check catalog invariants")
    s.add_argument("action", choices=("list", "check"))
    s.add_argument("name", nargs="?")
    s.add_argument("--trials", type=int, default=5)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("verify-paper", parents=[common], help="run every reproduction check")
    s.set_defaults(func=cmd_verify_paper)
    return p


def _error(args, kind: str, msg: str, code: int) -> int:
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"error": kind, "message": msg}))
    else:
        print(f"error: {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.prec < 0:
        return _error(args, "UsageError", "--prec must be >= 0", 2)
    try:
        return args.func(args)
    except UsageError as exc:
        return _error(args, "UsageError", str(exc), 2)
    except (psi.VerificationFailed, modforms.NotInSpace, modforms.InsufficientPrecision) as exc:
        return _error(args, type(exc).__name__, str(exc), 1)


if __name__ == "__main__":
    sys.exit(main())
