"""Modular forms from invariants of binary forms applied to derivatives.

For a form f of weight k and a slot of degree r, the binomial-convention
coefficient a_i is replaced by i! * C(k + r - 1, i) * f^(r - i), where
f^(n) is the n-th tau-derivative.  The variant with C(k + r - i, i) is
kept as ``literal_theorem1_coeffs``; it gives modular forms only for
r <= 1.  Every tau-derivative carries a factor
2*pi*i, which is split off again before the result is identified in the
ring generated by e2, e4, e6.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .binforms import (
    Convention,
    InvariantSpec,
    SlotShape,
    self_transvectant_invariant,
    transvectant_invariant,
    unit_invariant,
)
from .exactnum import CoeffK, GaussianRational
from .modforms import (
    EllipticForm,
    Identification,
    InsufficientPrecision,
    Membership,
    NotInSpace,
    identify,
    membership,
)
from .qseries import DEFAULT_PREC, MixedUnits, QSeries, UnitScaledSeries, qs_extract_unit


class VerificationFailed(RuntimeError):
    """A computed series is not in the space it should land in."""


def gbinom(top: int, k: int) -> Fraction:
    """C(top, k) via the falling factorial; valid for any integer ``top``."""
    if k < 0:
        return Fraction(0)
    num = 1
    for s in range(k):
        num *= top - s
    return Fraction(num, factorial(k))


def theorem1_coeffs(k: int, r: int) -> list:
    """Multipliers m_i = i! * C(k + r - 1, i) for i = 0..r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return [factorial(i) * gbinom(k + r - 1, i) for i in range(r + 1)]


def literal_theorem1_coeffs(k: int, r: int) -> list:
    """m_i = i! * C(k + r - i, i); agrees with theorem1_coeffs only for r <= 1."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return [factorial(i) * gbinom(k + r - i, i) for i in range(r + 1)]


def _character_product(forms, degrees) -> str:
    labels = []
    for f, d in zip(forms, degrees):
        if f.character not in ("1", "") and d:
            labels.append(f.character if d == 1 else f"{f.character}^{d}")
    return "*".join(labels) or "1"


@dataclass
class PsiResult:
    invariant: str
    series: QSeries
    unit: UnitScaledSeries | None
    claimed_weight: int
    quasimodular: bool
    derivative_count: int
    character: str = "1"
    certificate: Membership | None = None
    identification: Identification | None = None

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "claimed_weight": self.claimed_weight,
            "quasimodular": self.quasimodular,
            "character": self.character,
            "unit": None
            if self.unit is None
            else {"i_exp": self.unit.i_exp, "pi_exp": self.unit.pi_exp},
            "series": self.series.to_json(),
            "certificate": None
            if self.certificate is None
            else {
                "weight": self.certificate.weight,
                "surplus": self.certificate.surplus,
                "coords": self.certificate.polynomial_str(),
            },
            "identification": None if self.identification is None else str(self.identification),
        }


def substitution_values(inv: InvariantSpec, forms, prec: int, multipliers=theorem1_coeffs) -> dict:
    """Series substituted for each coefficient variable of ``inv``."""
    values = {}
    for j, f in enumerate(forms):
        r = inv.spec.degrees[j]
        k = f.weight
        derivs = [f.series.truncate(prec)]
        for _ in range(r):
            derivs.append(derivs[-1].dtau())
        mult = multipliers(k, r)
        for i, v in enumerate(inv.spec.slot_vars(j)):
            c = mult[i]
            if inv.spec.conventions[j] is Convention.PLAIN:
                # plain coefficient = C(r, i) * binomial coefficient
                c = c * comb(r, i)
            values[v] = derivs[r - i] * c
    return values


def evaluate_invariant(inv: InvariantSpec, forms, prec: int = DEFAULT_PREC, multipliers=theorem1_coeffs) -> QSeries:
    if len(forms) != len(inv.spec):
        raise SlotShape(f"{inv.name} has {len(inv.spec)} slots, got {len(forms)} forms")
    for f in forms:
        if f.series.prec < prec:
            raise InsufficientPrecision(f"{f.name} is known only to q^{f.series.prec}")
    out = inv.poly.evaluate(substitution_values(inv, forms, prec, multipliers))
    if not isinstance(out, QSeries):
        out = QSeries.constant(out, prec)
    return out


def claimed_weight(inv: InvariantSpec, forms) -> int:
    return sum(d * (f.weight + r) for d, f, r in zip(inv.degrees, forms, inv.spec.degrees))


def psi_apply(inv: InvariantSpec, forms, prec: int = DEFAULT_PREC, certify: bool = True) -> PsiResult:
    """Apply ``inv`` to ``forms`` (one per slot).

    The result is certified at weight sum d_j (k_j + r_j) in the modular
    ring, or the quasimodular one when any input is quasimodular.
    """
    forms = list(forms)
    series = evaluate_invariant(inv, forms, prec)
    nderiv = sum(d * r for d, r in zip(inv.degrees, inv.spec.degrees)) - inv.order
    quasi = any(f.quasimodular for f in forms)
    w = claimed_weight(inv, forms)
    res = PsiResult(
        inv.name, series, None, w, quasi, nderiv, _character_product(forms, inv.degrees)
    )
    if series.is_zero():
        res.unit = UnitScaledSeries(0, nderiv, QSeries.constant(0, prec))
        if certify:
            res.certificate = Membership(w, quasi, {}, prec + 1)
            res.identification = Identification(CoeffK(), {}, 0, w, quasi)
        return res
    res.unit = qs_extract_unit(series)
    if res.unit.pi_exp != nderiv:
        raise MixedUnits(f"pi-degree {res.unit.pi_exp} differs from derivative count {nderiv}")
    if certify:
        try:
            res.certificate = membership(res.unit.body, w, quasi)
            res.identification = identify(res.unit.body, w, quasi, unit=res.unit.unit)
        except NotInSpace as exc:
            raise VerificationFailed(f"{inv.name}: result is not of weight {w}: {exc}") from exc
    return res


def rankin_cohen(f: EllipticForm, g: EllipticForm, r: int, prec: int = DEFAULT_PREC) -> EllipticForm:
    """The r-th Rankin-Cohen bracket [f, g]_r as a rational series."""
    if r < 0:
        raise ValueError("r must be >= 0")
    k1, k2 = f.weight, g.weight
    fd = [f.series.truncate(prec)]
    gd = [g.series.truncate(prec)]
    for _ in range(r):
        fd.append(fd[-1].dtau())
        gd.append(gd[-1].dtau())
    total = QSeries.constant(0, prec)
    for n in range(r + 1):
        m = r - n
        c = (-1) ** n * gbinom(k1 + r - 1, m) * gbinom(k2 + r - 1, n)
        if c:
            total = total + fd[n] * gd[m] * c
    series = total.div_monomial(GaussianRational(0, 2) ** r, r)
    return EllipticForm(
        f"[{f.name},{g.name}]_{r}",
        k1 + k2 + 2 * r,
        series,
        quasimodular=f.quasimodular or g.quasimodular,
    )


@dataclass(frozen=True)
class UnitRatio:
    """rational * i^i_exp * pi^pi_exp, with pi_exp possibly negative."""

    rational: Fraction
    i_exp: int
    pi_exp: int

    def __str__(self):
        parts = [str(self.rational)]
        if self.i_exp % 4:
            parts.append("i" if self.i_exp % 4 == 1 else f"i^{self.i_exp % 4}")
        if self.pi_exp:
            parts.append("pi" if self.pi_exp == 1 else f"pi^{self.pi_exp}")
        return "*".join(parts)

    def normalized(self) -> "UnitRatio":
        s = self.i_exp % 4
        r = self.rational
        if s >= 2:
            r, s = -r, s - 2
        return UnitRatio(r, s, self.pi_exp)


def series_ratio(lhs: QSeries, rhs: QSeries):
    """lhs / rhs as a UnitRatio when lhs is a unit multiple of rhs, else None."""
    if lhs.is_zero() or rhs.is_zero():
        return None
    try:
        ul, ur = qs_extract_unit(lhs), qs_extract_unit(rhs)
    except MixedUnits:
        return None
    bl, br = ul.body.rational_coeffs(), ur.body.rational_coeffs()
    n = next(i for i, x in enumerate(br) if x)
    c = bl[n] / br[n]
    if any(x != c * y for x, y in zip(bl, br)):
        return None
    return UnitRatio(c, ul.i_exp - ur.i_exp, ul.pi_exp - ur.pi_exp).normalized()


def _certify(series: QSeries, w: int, quasi: bool) -> dict:
    try:
        body = qs_extract_unit(series).body if not series.is_zero() else series
        m = membership(body, w, quasi)
        return {"weight": w, "certified": True, "surplus": m.surplus}
    except (NotInSpace, InsufficientPrecision) as exc:
        return {"weight": w, "certified": False, "reason": str(exc)}


@dataclass
class RelationReport:
    name: str
    lhs: QSeries
    rhs: QSeries
    equal: bool
    ratio: UnitRatio | None = None
    weight_certificates: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "ratio": None if self.ratio is None else str(self.ratio),
            "weight_certificates": self.weight_certificates,
            **self.notes,
        }


def verify_rc_relation(f: EllipticForm, g: EllipticForm, r: int, prec: int = DEFAULT_PREC) -> RelationReport:
    """Compare Psi_{(F,G)_r}(f, g) with (-1)^r r! (2 pi i)^r [f, g]_r."""
    inv = transvectant_invariant(r)
    res = psi_apply(inv, (f, g), prec, certify=False)
    bracket = rankin_cohen(f, g, r, prec)
    factor = CoeffK({r: GaussianRational(0, 2) ** r}) * ((-1) ** r * factorial(r))
    rhs = bracket.series.scale(factor)
    w = f.weight + g.weight + 2 * r
    quasi = f.quasimodular or g.quasimodular
    return RelationReport(
        f"rc_relation[{f.name},{g.name}]_{r}",
        res.series,
        rhs,
        res.series == rhs,
        series_ratio(res.series, rhs),
        {"lhs": _certify(res.series, w, quasi), "rhs": _certify(bracket.series, w, quasi)},
    )


def verify_self_bracket(f: EllipticForm, r: int, prec: int = DEFAULT_PREC) -> RelationReport:
    """Measure Psi_{(F,F)_{2r}}(f) against [f, f]_{2r}.

    Reports the exact ratio, the expected (2r)! (2 pi i)^(2r), and which of
    the weights 2k + 4r and 2k + 2r certify the result.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    inv = self_transvectant_invariant(2 * r)
    res = psi_apply(inv, (f,), prec, certify=False)
    bracket = rankin_cohen(f, f, 2 * r, prec)
    ratio = series_ratio(res.series, bracket.series)
    stated = UnitRatio(Fraction(factorial(2 * r) * 4**r * (-1) ** r), 0, 2 * r)
    quasi = f.quasimodular
    certs = {
        "2k+4r": _certify(res.series, 2 * f.weight + 4 * r, quasi),
        "2k+2r": _certify(res.series, 2 * f.weight + 2 * r, quasi),
    }
    return RelationReport(
        f"self_bracket[{f.name}]_{2 * r}",
        res.series,
        bracket.series,
        res.series.is_zero() and bracket.series.is_zero(),
        ratio,
        certs,
        {
            "stated_ratio": str(stated),
            "ratio_matches_stated": ratio == stated,
        },
    )


def psi_product_property(I: InvariantSpec, J: InvariantSpec | None, f: EllipticForm, prec: int = DEFAULT_PREC) -> RelationReport:
    """Check Psi_{I*J}(f) == Psi_I(f) * Psi_J(f); ``J=None`` means J = 1."""
    if J is None:
        J = unit_invariant(I.spec)
    if len(I.spec) != 1 or I.spec != J.spec:
        raise ValueError("both invariants must belong to the same single binary form")
    lhs = evaluate_invariant(I * J, (f,), prec)
    rhs = evaluate_invariant(I, (f,), prec) * evaluate_invariant(J, (f,), prec)
    return RelationReport(f"product[{I.name}*{J.name}]({f.name})", lhs, rhs, lhs == rhs)
