"""Sparse multivariate polynomials with exact rational coefficients.

Variables are strings.  A monomial is a tuple of ``(name, exponent)``
pairs sorted by :func:`var_key`, so coefficient variables of the binary
form slots come first (``a0 < a1 < b0 < ...``) and ``x1, x2`` last.
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction
from numbers import Rational

from .exactnum import fraction_str, to_fraction

_NAME_RE = re.compile(r"^([A-Za-z_]*?)(\d*)([A-Za-z_]*)$")
X_VARS = ("x1", "x2")


def var_key(name: str):
    m = _NAME_RE.match(name)
    is_x = name in X_VARS
    if not m:
        return (is_x, name, -1, "")
    prefix, idx, suffix = m.groups()
    return (is_x, prefix, int(idx) if idx else -1, suffix)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


def _mono_str(mono):
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


class MultiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                c = to_fraction(c)
                if not c:
                    continue
                mono = tuple(sorted(((v, e) for v, e in mono if e), key=lambda ve: var_key(ve[0])))
                c = clean.get(mono, 0) + c
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        return cls({((name, power),): 1})

    @classmethod
    def coerce(cls, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, str):
            return cls.var(x) if x.isidentifier() else cls.parse(x)
        return cls.const(x)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse ``3*a0*b1^3 - 1/2*x1^2 + (a0 + a1)^2`` style input."""
        try:
            tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
        return _from_ast(tree.body, text)

    # -- basic protocol -----------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return MultiPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return MultiPoly({m: c * other for m, c in self._terms.items()})
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = MultiPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- structure ----------------------------------------------------
    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree_in(self, names) -> set:
        """Set of total degrees, over monomials, in the given variables."""
        names = set(names)
        return {sum(e for v, e in m if v in names) for m in self._terms}

    def is_constant(self) -> bool:
        return set(self._terms) <= {()}

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coefficient(self, mono: dict) -> "MultiPoly":
        """Coefficient of the monomial ``mono`` (a ``{var: exp}`` map) as a
        polynomial in the remaining variables."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if all(d.get(v, 0) == e for v, e in mono.items()):
                rest = tuple((v, e) for v, e in m if v not in mono)
                out[rest] = c
        return MultiPoly(out)

    def diff(self, name: str, times: int = 1) -> "MultiPoly":
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if e < times:
                continue
            f = 1
            for s in range(times):
                f *= e - s
            d[name] = e - times
            out[tuple(d.items())] = c * f
        return MultiPoly(out)

    def subs(self, mapping: dict) -> "MultiPoly":
        """Simultaneous substitution of polynomials for variables."""
        mapping = {k: MultiPoly.coerce(v) for k, v in mapping.items()}
        return self.evaluate(mapping, keep_free=True)

    def evaluate(self, values: dict, keep_free: bool = False):
        """Evaluate with ``values[var]`` taken from any commutative ring
        supporting ``+``, ``*``, ``**`` and rational scalars.

        Powers are cached per variable.  With ``keep_free`` variables not in
        ``values`` are kept symbolic (the result is then a MultiPoly).
        """
        cache = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                if v not in values:
                    if not keep_free:
                        raise KeyError(f"no value for variable {v!r}")
                    cache[key] = MultiPoly.var(v, e)
                else:
                    cache[key] = values[v] ** e if e > 1 else values[v]
            return cache[key]

        total = None
        for m, c in self._terms.items():
            term = None
            for v, e in m:
                p = power(v, e)
                term = p if term is None else term * p
            if term is None:
                term = MultiPoly.const(c) if keep_free else c
            else:
                term = term * c
            total = term if total is None else total + term
        if total is None:
            return MultiPoly() if keep_free else Fraction(0)
        return total

    def sorted_terms(self):
        """Terms in graded lexicographic order (highest degree first)."""

        def key(item):
            m = item[0]
            deg = sum(e for _, e in m)
            return (-deg, [(var_key(v), -e) for v, e in m])

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            ms = _mono_str(m)
            if not ms:
                body = fraction_str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{fraction_str(a)}*{ms}"
            if i == 0:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def _from_ast(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return MultiPoly.const(node.value)
    if isinstance(node, ast.Name):
        return MultiPoly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        p = _from_ast(node.operand, text)
        return -p if isinstance(node.op, ast.USub) else p
    if isinstance(node, ast.BinOp):
        left = _from_ast(node.left, text)
        if isinstance(node.op, ast.Pow):
            right = _from_ast(node.right, text)
            if not right.is_constant() or right.constant_term().denominator != 1 or right.constant_term() < 0:
                raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
            return left ** int(right.constant_term())
        right = _from_ast(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or not right.constant_term():
                raise ValueError(f"division only by nonzero constants in {text!r}")
            return left / right.constant_term()
    raise ValueError(f"unsupported syntax in polynomial {text!r}")
