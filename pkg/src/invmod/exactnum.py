"""Exact scalars: rationals, Gaussian rationals and the ring Q(i)[pi].

Rationals are :class:`fractions.Fraction`. Every q-expansion coefficient
in this package lives in ``CoeffK``, a polynomial in pi with Gaussian
rational coefficients; pi is treated as transcendental, so two values are
equal exactly when their term maps agree.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

BigRational = Fraction


class DivisionNotExact(ArithmeticError):
    """A monomial division would need negative powers of pi."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        nrm = other.norm()
        if not nrm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * other.conjugate()
        return GaussianRational(p.re / nrm, p.im / nrm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (GaussianRational(1) / self) ** (-e)
        out, base = GaussianRational(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if not self.im:
            return fraction_str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{fraction_str(self.im)}*i"
        if not self.re:
            return im
        sign = "-" if im.startswith("-") else "+"
        return f"{fraction_str(self.re)}{sign}{im.lstrip('-')}"

    def __repr__(self):
        return f"GaussianRational({fraction_str(self.re)!r}, {fraction_str(self.im)!r})"


class CoeffK:
    """Polynomial in pi with Gaussian rational coefficients.

    ``terms`` maps a pi-exponent to its nonzero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if isinstance(terms, (int, Fraction, GaussianRational)):
            terms = {0: terms}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for t, c in items:
                if t < 0:
                    raise ValueError("pi-exponents must be nonnegative")
                c = GaussianRational.coerce(c)
                if c:
                    prev = clean.get(t)
                    c = c if prev is None else prev + c
                    if c:
                        clean[t] = c
                    else:
                        del clean[t]
        object.__setattr__(self, "_terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("CoeffK is immutable")

    @classmethod
    def coerce(cls, x) -> "CoeffK":
        if isinstance(x, CoeffK):
            return x
        return cls({0: GaussianRational.coerce(x)})

    @classmethod
    def monomial(cls, c, t: int = 0) -> "CoeffK":
        return cls({t: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        try:
            other = CoeffK.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __neg__(self):
        return CoeffK({t: -c for t, c in self._terms.items()})

    def __add__(self, other):
        try:
            other = CoeffK.coerce(other)
        except TypeError:
            return NotImplemented
        return CoeffK(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = CoeffK.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = CoeffK.coerce(other)
        except TypeError:
            return NotImplemented
        return CoeffK(
            [(t1 + t2, c1 * c2) for t1, c1 in self._terms.items() for t2, c2 in other._terms.items()]
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("CoeffK is a polynomial ring; negative powers are undefined")
        out, base = CoeffK.coerce(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def pi_degrees(self) -> list:
        return list(self._terms)

    def is_rational(self) -> bool:
        return set(self._terms) <= {0} and all(c.is_real() for c in self._terms.values())

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms[0].re if self._terms else Fraction(0)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for t, c in self._terms.items():
            cs = str(c)
            if t == 0:
                parts.append(cs)
                continue
            pi = "pi" if t == 1 else f"pi^{t}"
            if c.re and c.im:
                parts.append(f"({cs})*{pi}")
            elif cs == "1":
                parts.append(pi)
            elif cs == "-1":
                parts.append(f"-{pi}")
            else:
                parts.append(f"{cs}*{pi}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"CoeffK({str(self)!r})"


PI = CoeffK({1: 1})
I = CoeffK({0: GaussianRational(0, 1)})
TWO_PI_I = CoeffK({1: GaussianRational(0, 2)})


def k_add(a, b) -> CoeffK:
    return CoeffK.coerce(a) + CoeffK.coerce(b)


def k_mul(a, b) -> CoeffK:
    return CoeffK.coerce(a) * CoeffK.coerce(b)


def k_div_monomial(a, c, t: int) -> CoeffK:
    """Divide ``a`` exactly by ``c * pi**t``."""
    a = CoeffK.coerce(a)
    c = GaussianRational.coerce(c)
    if not c:
        raise ZeroDivisionError("monomial divisor has zero coefficient")
    if any(s < t for s in a.pi_degrees()):
        raise DivisionNotExact(f"{a} is not divisible by pi^{t}")
    return CoeffK({s - t: v / c for s, v in a})


def parse_coeffk(text: str) -> CoeffK:
    """Read the textual form produced by ``str(CoeffK)``."""
    from .multipoly import MultiPoly

    poly = MultiPoly.parse(text)
    extra = poly.variables() - {"pi", "i"}
    if extra:
        raise ValueError(f"unexpected symbols in coefficient: {sorted(extra)}")
    out = CoeffK()
    for mono, c in poly.terms.items():
        e = dict(mono)
        out = out + CoeffK({e.get("pi", 0): GaussianRational(c) * GaussianRational(0, 1) ** e.get("i", 0)})
    return out
