"""Level one (quasi-)modular forms as exact q-expansions.

The modular ring of SL(2, Z) is Q[e4, e6]; the quasimodular ring adds e2.
``membership`` writes a rational series in the monomial basis of a given
weight by exact elimination and checks every remaining coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm

from .exactnum import CoeffK, GaussianRational, fraction_str
from .qseries import DEFAULT_PREC, QSeries

MIN_SURPLUS = 10


class NotInSpace(ValueError):
    """The series is not a combination of the basis at this weight."""


class InsufficientPrecision(ValueError):
    """Too few coefficients to both solve and verify."""


@dataclass(frozen=True)
class EllipticForm:
    name: str
    weight: int
    series: QSeries
    quasimodular: bool = False
    character: str = "1"

    @property
    def prec(self) -> int:
        return self.series.prec


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """B_k from sum_{j<=n} C(n+1, j) B_j = 0 (so B_1 = -1/2)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = [Fraction(1)]
    for n in range(1, k + 1):
        b.append(-sum(comb(n + 1, j) * b[j] for j in range(n)) / (n + 1))
    return b[k]


def sigma(k: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


@lru_cache(maxsize=None)
def eisenstein(k: int, prec: int = DEFAULT_PREC) -> EllipticForm:
    if k < 2 or k % 2:
        raise ValueError(f"Eisenstein series need even weight >= 2, got {k}")
    c = -Fraction(2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [c * sigma(k - 1, n) for n in range(1, prec + 1)]
    return EllipticForm(f"e{k}", k, QSeries.rational(coeffs, prec), quasimodular=(k == 2))


@lru_cache(maxsize=None)
def delta(prec: int = DEFAULT_PREC) -> EllipticForm:
    e4 = eisenstein(4, prec).series
    e6 = eisenstein(6, prec).series
    return EllipticForm("Delta", 12, (e4**3 - e6**2) / 1728)


def form_by_name(name: str, prec: int = DEFAULT_PREC) -> EllipticForm:
    """``e2``, ``e4``, ... or ``Delta``."""
    if name.lower() == "delta":
        return delta(prec)
    if name.startswith(("e", "E")) and name[1:].isdigit():
        return eisenstein(int(name[1:]), prec)
    raise ValueError(f"unknown form {name!r}; use e<k> or Delta")


def basis_exponents(w: int, quasimodular: bool = False) -> list:
    """Exponent triples (c, a, b) of e2^c e4^a e6^b with weight w, in
    descending (c, a) order."""
    if w < 0 or w % 2:
        raise ValueError(f"weight must be even and >= 0, got {w}")
    out = []
    for c in range(w // 2 + 1 if quasimodular else 1):
        rest = w - 2 * c
        for a in range(rest // 4 + 1):
            r = rest - 4 * a
            if r % 6 == 0:
                out.append((c, a, r // 6))
    out.sort(key=lambda t: (-t[0], -t[1]))
    return out


@lru_cache(maxsize=None)
def _monomial_series(exps: tuple, prec: int) -> QSeries:
    c, a, b = exps
    out = QSeries.constant(1, prec)
    for k, e in ((2, c), (4, a), (6, b)):
        if e:
            out = out * eisenstein(k, prec).series ** e
    return out


def basis(w: int, quasimodular: bool = False, prec: int = DEFAULT_PREC) -> list:
    return [(exps, _monomial_series(exps, prec)) for exps in basis_exponents(w, quasimodular)]


def dim_modular(w: int) -> int:
    """dim M_w(SL(2, Z)) by the classical formula."""
    if w < 0 or w % 2:
        return 0
    if w % 12 == 2:
        return w // 12
    return w // 12 + 1


@dataclass
class Membership:
    weight: int
    quasimodular: bool
    coords: dict
    surplus: int
    pivot_rows: list = field(default_factory=list)

    def polynomial_str(self) -> str:
        return monomial_poly_str(self.coords)


def _solve_exact(columns, rhs):
    """Solve sum_j x_j columns[j] = rhs over Q; rows in order.

    Returns (solution, pivot_rows) or raises NotInSpace.
    """
    nrows = len(rhs)
    ncols = len(columns)
    rows = [[columns[j][i] for j in range(ncols)] + [rhs[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            raise InsufficientPrecision(f"basis columns are dependent at {nrows} coefficients")
        rows[r], rows[piv] = rows[piv], rows[r]
        pivots.append(piv)
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    for i in range(r, nrows):
        if rows[i][ncols]:
            raise NotInSpace("verification coefficients do not match")
    return [rows[i][ncols] for i in range(ncols)], pivots


def membership(s: QSeries, w: int, quasimodular: bool = False) -> Membership:
    """Exact coordinates of ``s`` in the weight-``w`` monomial basis.

    Raises NotInSpace if no combination matches all known coefficients.
    """
    if not s.is_rational():
        raise ValueError("membership needs a series with rational coefficients")
    if w < 0 or w % 2:
        if s.is_zero():
            return Membership(w, quasimodular, {}, s.prec + 1)
        raise NotInSpace(f"no nonzero forms of weight {w}")
    exps = basis_exponents(w, quasimodular)
    d = len(exps)
    if s.prec + 1 < d + MIN_SURPLUS:
        raise InsufficientPrecision(
            f"need at least {d + MIN_SURPLUS} coefficients for weight {w}, have {s.prec + 1}"
        )
    target = s.rational_coeffs()
    if not exps:
        if any(target):
            raise NotInSpace(f"M_{w} is zero but the series is not")
        return Membership(w, quasimodular, {}, s.prec + 1)
    cols = [_monomial_series(e, s.prec).rational_coeffs() for e in exps]
    sol, pivots = _solve_exact(cols, target)
    coords = {e: x for e, x in zip(exps, sol) if x}
    return Membership(w, quasimodular, coords, s.prec + 1 - d, pivots)


def monomial_poly_str(coords: dict) -> str:
    """Render {(c, a, b): coefficient} as a polynomial in e2, e4, e6."""
    if not coords:
        return "0"
    out = ""
    for i, (exps, x) in enumerate(sorted(coords.items(), key=lambda t: (-t[0][0], -t[0][1]))):
        mono = "*".join(
            f"e{k}" if e == 1 else f"e{k}^{e}" for k, e in zip((2, 4, 6), exps) if e
        )
        neg, a = x < 0, abs(x)
        if not mono:
            body = fraction_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{fraction_str(a)}*{mono}"
        if i == 0:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out


@dataclass
class Identification:
    """scalar * poly(e2, e4, e6) * Delta^delta_power, with ``poly`` primitive
    (coprime integer coefficients, positive leading term)."""

    scalar: CoeffK
    poly: dict
    delta_power: int
    weight: int
    quasimodular: bool

    def __str__(self):
        if not self.poly:
            return "0"
        factors = []
        sign = ""
        lead_terms = list(self.scalar)
        if len(lead_terms) == 1:
            t, g = lead_terms[0]
            # pull a sign or a pure i out of a single-term scalar
            if g.im == 0:
                r, ipart = g.re, ""
            elif g.re == 0:
                r, ipart = g.im, "i"
            else:
                r, ipart = None, None
            if r is not None:
                if r < 0:
                    sign, r = "-", -r
                if r != 1:
                    factors.append(fraction_str(r))
                if ipart:
                    factors.append(ipart)
                if t:
                    factors.append("pi" if t == 1 else f"pi^{t}")
            else:
                factors.append(f"({self.scalar})")
        else:
            factors.append(f"({self.scalar})")
        body = monomial_poly_str(self.poly)
        if body != "1":
            factors.append(f"({body})" if len(self.poly) > 1 else body)
        if self.delta_power:
            factors.append("Delta" if self.delta_power == 1 else f"Delta^{self.delta_power}")
        if not factors:
            factors = ["1"]
        return sign + " * ".join(factors)


def _primitive(coords: dict):
    """Split rational coords into (content, primitive integer coords)."""
    items = sorted(coords.items(), key=lambda t: (-t[0][0], -t[0][1]))
    num = 0
    den = 1
    for _, x in items:
        num = gcd(num, x.numerator)
        den = lcm(den, x.denominator)
    content = Fraction(num, den)
    if items[0][1] < 0:
        content = -content
    return content, {e: x / content for e, x in items}


def identify(s: QSeries, w: int, quasimodular: bool = False, unit: CoeffK | None = None) -> Identification:
    """Write a rational series as content * unit * P(e2, e4, e6) * Delta^c
    with c as large as possible.

    Every candidate is certified by ``membership`` on the quotient
    series, so precision drops by c coefficients.
    """
    unit = CoeffK.coerce(1) if unit is None else unit
    if s.is_zero():
        return Identification(CoeffK(), {}, 0, w, quasimodular)
    v = s.valuation()
    last_err = None
    for c in range(min(v, w // 12), -1, -1):
        q = s
        if c:
            dq = delta(s.prec).series.shift_down(1) ** c
            q = s.shift_down(c) * dq.truncate(s.prec - c).inverse()
        try:
            m = membership(q, w - 12 * c, quasimodular)
        except (NotInSpace, InsufficientPrecision) as exc:
            last_err = exc
            continue
        content, prim = _primitive(m.coords)
        return Identification(unit * content, prim, c, w, quasimodular)
    raise last_err if last_err else NotInSpace(f"not a form of weight {w}")


def series_from_expression(text: str, prec: int = DEFAULT_PREC) -> QSeries:
    """Evaluate an expression in e2, e4, ..., Delta, pi and i as a series,
    e.g. ``-53084160000 * pi^6 * e4 * Delta^2``."""
    from .multipoly import MultiPoly

    poly = MultiPoly.parse(text)
    values = {}
    for v in poly.variables():
        if v == "pi":
            values[v] = QSeries.constant(CoeffK({1: 1}), prec)
        elif v == "i":
            values[v] = QSeries.constant(GaussianRational(0, 1), prec)
        else:
            values[v] = form_by_name(v, prec).series
    out = poly.evaluate(values)
    if not isinstance(out, QSeries):
        out = QSeries.constant(out, prec)
    return out
