"""Truncated q-expansions over Q(i)[pi].

A ``QSeries`` of precision N is known modulo q^(N+1) and has N+1
coefficients.  Internally the series is split by unit: for each pair
(pi-exponent t, i-exponent s in {0, 1}) we keep one rational series,
stored as integer numerators over a common denominator.  Products of
those integer vectors are the hot loop and run through
``invmod._backend.convolve``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import _backend
from .exactnum import CoeffK, GaussianRational, fraction_str, to_fraction

DEFAULT_PREC = 25


class MixedUnits(ArithmeticError):
    """Coefficients are not all rational multiples of one i^s * pi^t."""


def _normalize(nums, den):
    if den < 0:
        nums, den = [-x for x in nums], -den
    g = math.gcd(den, *nums)
    if g > 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


def _add_into(parts, key, nums, den):
    if key in parts:
        a, da = parts[key]
        l = da * den // math.gcd(da, den)
        nums = _backend.axpby(l // da, list(a), l // den, list(nums))
        den = l
    nums, den = _normalize(list(nums), den)
    if any(nums):
        parts[key] = (nums, den)
    else:
        parts.pop(key, None)


class QSeries:
    """Immutable truncated power series in q."""

    __slots__ = ("prec", "_parts")

    def __init__(self, coeffs=(), prec=None):
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs) - 1
        if prec < 0:
            raise ValueError("precision must be >= 0")
        coeffs = coeffs[: prec + 1] + [0] * (prec + 1 - len(coeffs))
        parts: dict = {}
        buckets: dict = {}
        for n, c in enumerate(coeffs):
            for t, g in CoeffK.coerce(c):
                if g.re:
                    buckets.setdefault((t, 0), {})[n] = g.re
                if g.im:
                    buckets.setdefault((t, 1), {})[n] = g.im
        for key, entries in buckets.items():
            den = math.lcm(*(f.denominator for f in entries.values()))
            nums = [0] * (prec + 1)
            for n, f in entries.items():
                nums[n] = f.numerator * (den // f.denominator)
            _add_into(parts, key, nums, den)
        self.prec = prec
        self._parts = parts

    @classmethod
    def _from_parts(cls, parts, prec) -> "QSeries":
        out = cls.__new__(cls)
        out.prec = prec
        out._parts = parts
        return out

    @classmethod
    def rational(cls, coeffs, prec=None) -> "QSeries":
        return cls([to_fraction(c) for c in coeffs], prec)

    @classmethod
    def constant(cls, c, prec) -> "QSeries":
        return cls([c], prec)

    @classmethod
    def monomial(cls, n: int, prec: int, c=1) -> "QSeries":
        coeffs = [0] * (prec + 1)
        if n <= prec:
            coeffs[n] = c
        return cls(coeffs, prec)

    # -- access -------------------------------------------------------
    def __len__(self):
        return self.prec + 1

    def __getitem__(self, n: int) -> CoeffK:
        if not 0 <= n <= self.prec:
            raise IndexError(f"coefficient q^{n} not known at precision {self.prec}")
        terms = {}
        for (t, s), (nums, den) in self._parts.items():
            if nums[n]:
                val = Fraction(nums[n], den)
                g = GaussianRational(0, val) if s else GaussianRational(val)
                terms[t] = terms.get(t, GaussianRational(0)) + g
        return CoeffK(terms)

    @property
    def coeffs(self) -> list:
        return [self[n] for n in range(self.prec + 1)]

    def units(self) -> list:
        """Sorted (pi-exponent, i-exponent) pairs carrying nonzero parts."""
        return sorted(self._parts)

    def is_rational(self) -> bool:
        return set(self._parts) <= {(0, 0)}

    def rational_coeffs(self) -> list:
        if not self.is_rational():
            raise MixedUnits("series has non-rational coefficients")
        if not self._parts:
            return [Fraction(0)] * (self.prec + 1)
        nums, den = self._parts[(0, 0)]
        return [Fraction(x, den) for x in nums]

    def is_zero(self) -> bool:
        return not self._parts

    def valuation(self):
        """Index of the first nonzero coefficient, or None for zero."""
        best = None
        for nums, _ in self._parts.values():
            for n, x in enumerate(nums):
                if x:
                    best = n if best is None else min(best, n)
                    break
        return best

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.prec == other.prec and self._parts == other._parts
        return NotImplemented

    def __hash__(self):
        return hash((self.prec, frozenset(self._parts.items())))

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise ValueError(f"cannot raise precision {self.prec} to {prec}")
        parts = {}
        for key, (nums, den) in self._parts.items():
            _add_into(parts, key, list(nums[: prec + 1]), den)
        return QSeries._from_parts(parts, prec)

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality up to the smaller of the two precisions."""
        p = min(self.prec, other.prec)
        return self.truncate(p) == other.truncate(p)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Rational, GaussianRational, CoeffK)):
            return QSeries.constant(other, self.prec)
        raise TypeError

    def __neg__(self):
        return QSeries._from_parts({k: (tuple(-x for x in nums), den) for k, (nums, den) in self._parts.items()}, self.prec)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        prec = min(self.prec, other.prec)
        a = self if self.prec == prec else self.truncate(prec)
        b = other if other.prec == prec else other.truncate(prec)
        parts = dict(a._parts)
        for key, (nums, den) in b._parts.items():
            _add_into(parts, key, nums, den)
        return QSeries._from_parts(parts, prec)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, GaussianRational, CoeffK)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        parts: dict = {}
        for (t1, s1), (a, da) in self._parts.items():
            a = list(a)
            for (t2, s2), (b, db) in other._parts.items():
                conv = _backend.convolve(a, list(b), prec)
                s = s1 + s2
                if s == 2:
                    conv = [-x for x in conv]
                    s = 0
                _add_into(parts, (t1 + t2, s), conv, da * db)
        return QSeries._from_parts(parts, prec)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out, base = QSeries.constant(1, self.prec), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, c) -> "QSeries":
        c = CoeffK.coerce(c)
        parts: dict = {}
        for (t1, s1), (nums, den) in self._parts.items():
            for t2, g in c:
                for s2, val in ((0, g.re), (1, g.im)):
                    if not val:
                        continue
                    s = s1 + s2
                    sign = -1 if s == 2 else 1
                    scaled = [sign * val.numerator * x for x in nums]
                    _add_into(parts, (t1 + t2, s % 2), scaled, den * val.denominator)
        return QSeries._from_parts(parts, self.prec)

    def ddq(self, times: int = 1) -> "QSeries":
        """The operator D = q d/dq applied ``times`` times."""
        parts = {}
        for key, (nums, den) in self._parts.items():
            _add_into(parts, key, _backend.scale_by_index(list(nums), times), den)
        return QSeries._from_parts(parts, self.prec)

    def dtau(self, times: int = 1) -> "QSeries":
        """d/dtau = 2*pi*i * D, with q = exp(2*pi*i*tau)."""
        out = self
        for _ in range(times):
            out = out.ddq()
            parts = {}
            for (t, s), (nums, den) in out._parts.items():
                if s:
                    parts[(t + 1, 0)] = (tuple(-2 * x for x in nums), den)
                else:
                    parts[(t + 1, 1)] = (tuple(2 * x for x in nums), den)
            parts = {k: _normalize(list(v[0]), v[1]) for k, v in parts.items()}
            out = QSeries._from_parts(parts, out.prec)
        return out

    def div_monomial(self, c, t: int) -> "QSeries":
        """Divide every coefficient exactly by c * pi^t."""
        from .exactnum import k_div_monomial

        return QSeries([k_div_monomial(x, c, t) for x in self.coeffs], self.prec)

    def shift_down(self, n: int) -> "QSeries":
        """Divide by q^n; requires valuation >= n and loses n of precision."""
        v = self.valuation()
        if v is not None and v < n:
            raise ArithmeticError(f"series has valuation {v} < {n}")
        parts = {k: (nums[n:], den) for k, (nums, den) in self._parts.items()}
        return QSeries._from_parts(parts, self.prec - n)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse of a rational series with nonzero constant term."""
        c = self.rational_coeffs()
        if not c[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / c[0]]
        for n in range(1, self.prec + 1):
            s = sum(c[j] * inv[n - j] for j in range(1, n + 1))
            inv.append(-s / c[0])
        return QSeries.rational(inv, self.prec)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    # -- output -------------------------------------------------------
    def __str__(self):
        out = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            qn = "" if n == 0 else "q" if n == 1 else f"q^{n}"
            if c.is_rational():
                v = c.to_fraction()
                neg, a = v < 0, abs(v)
                if not qn:
                    body = fraction_str(a)
                elif a == 1:
                    body = qn
                elif a.denominator == 1:
                    body = f"{a}{qn}"
                else:
                    body = f"{fraction_str(a)}*{qn}"
            else:
                neg = False
                body = f"({c})" + (f"*{qn}" if qn else "")
            out.append(("-" if neg else "+", body))
        tail = f"O(q^{self.prec + 1})"
        if not out:
            return tail
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return f"{text} + {tail}"

    def __repr__(self):
        return f"QSeries({str(self)!r})"

    def to_json(self) -> dict:
        return {"prec": self.prec, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        from .exactnum import parse_coeffk

        return cls([parse_coeffk(c) for c in data["coeffs"]], data["prec"])

    @classmethod
    def parse(cls, text: str) -> "QSeries":
        """Read the text rendering ``1 + 240q + ... + O(q^N)``."""
        from .multipoly import MultiPoly

        m = re.search(r"\+?\s*O\(q\^(\d+)\)\s*$", text)
        if not m:
            raise ValueError("series text must end with O(q^N)")
        prec = int(m.group(1)) - 1
        body = text[: m.start()].strip() or "0"
        body = re.sub(r"(?<=[\d)])q", "*q", body)
        poly = MultiPoly.parse(body)
        coeffs = [CoeffK() for _ in range(prec + 1)]
        for mono, c in poly:
            e = dict(mono)
            if set(e) - {"q", "pi", "i"}:
                raise ValueError(f"unexpected symbols in series: {text!r}")
            n = e.get("q", 0)
            if n <= prec:
                coeffs[n] = coeffs[n] + CoeffK({e.get("pi", 0): GaussianRational(c) * GaussianRational(0, 1) ** e.get("i", 0)})
        return cls(coeffs, prec)


@dataclass(frozen=True)
class UnitScaledSeries:
    """``i**i_exp * pi**pi_exp * body`` with a rational ``body``."""

    i_exp: int
    pi_exp: int
    body: QSeries

    @property
    def unit(self) -> CoeffK:
        return CoeffK({self.pi_exp: GaussianRational(0, 1) ** self.i_exp})

    def recombine(self) -> QSeries:
        return self.body.scale(self.unit)


def qs_add(a: QSeries, b) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b) -> QSeries:
    return a * b


def qs_scale(a: QSeries, c) -> QSeries:
    return a.scale(c)


def qs_ddq(f: QSeries) -> QSeries:
    return f.ddq()


def qs_dtau(f: QSeries) -> QSeries:
    return f.dtau()


def qs_extract_unit(f: QSeries) -> UnitScaledSeries:
    """Split ``f`` as i^s * pi^t * (rational series), s in {0, 1}.

    Signs stay in the body, so the decomposition is unique.
    """
    if f.is_zero():
        raise ValueError("the zero series has no unit")
    keys = f.units()
    if len(keys) != 1:
        raise MixedUnits(f"coefficients mix units {keys}")
    (t, s), = keys
    nums, den = f._parts[(t, s)]
    body = QSeries._from_parts({(0, 0): (nums, den)}, f.prec)
    return UnitScaledSeries(i_exp=s, pi_exp=t, body=body)
