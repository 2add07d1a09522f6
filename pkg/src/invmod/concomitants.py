"""Weight bookkeeping for invariants and covariants of vector-valued forms.

Covers Siegel forms of degree 2 (weight (j, k) = Sym^j (x) det^k),
Picard forms of weight (1, k), the discriminant of a Sym^2-valued form
over GL(g), and scalar elliptic forms with a character.  Half-integers
such as k + j/2 are kept as Fractions and rejected unless the final
weight is integral.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .binforms import CovariantSpec, InvariantSpec, SlotShape
from .multipoly import MultiPoly


class NonIntegralWeight(ValueError):
    pass


class Character:
    """Formal multiplicative character label, e.g. chi^2 * det."""

    __slots__ = ("powers",)

    def __init__(self, powers=None):
        if isinstance(powers, str):
            powers = {} if powers in ("", "1", "trivial", "triv") else {powers: 1}
        self.powers = {k: v for k, v in dict(powers or {}).items() if v}

    def __mul__(self, other):
        c = Counter(self.powers)
        c.update(Character.coerce(other).powers)
        return Character(c)

    def __pow__(self, e: int):
        return Character({k: v * e for k, v in self.powers.items()})

    def __eq__(self, other):
        try:
            return self.powers == Character.coerce(other).powers
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.powers.items()))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Character):
            return x
        if x is None or isinstance(x, (str, dict)):
            return cls(x)
        raise TypeError(f"not a character label: {x!r}")

    def __str__(self):
        if not self.powers:
            return "1"
        return "*".join(k if v == 1 else f"{k}^{v}" for k, v in sorted(self.powers.items()))

    __repr__ = __str__


TRIVIAL = Character()


@dataclass(frozen=True)
class GLWeight:
    """Highest weight for GL(g); for g = 2, ``(j, k)`` means Sym^j (x) det^k."""

    g: int
    weight: tuple
    character: Character = TRIVIAL

    def __post_init__(self):
        if self.g < 1 or len(self.weight) != self.g:
            raise ValueError("weight tuple must have length g >= 1")
        if any(a < b for a, b in zip(self.weight, self.weight[1:])):
            raise ValueError("highest weight must be nonincreasing")

    @classmethod
    def siegel2(cls, j: int, k: int, character=TRIVIAL) -> "GLWeight":
        if j < 0:
            raise ValueError("j must be >= 0")
        return cls(2, (j + k, k), Character.coerce(character))

    @property
    def jk(self) -> tuple:
        if self.g != 2:
            raise ValueError("(j, k) form only exists for g = 2")
        return (self.weight[0] - self.weight[1], self.weight[1])

    def __str__(self):
        if self.g == 2:
            j, k = self.jk
            return f"({j},{k})"
        return "(" + ",".join(map(str, self.weight)) + ")"


@dataclass(frozen=True)
class ConcomitantMeta:
    """Degrees per slot, x-degree (0 for invariants) and the derived target."""

    degrees: tuple
    xdeg: int
    source: tuple
    target: GLWeight


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralWeight(f"{what} = {x} is not an integer")
    return int(x)


def siegel2_invariant_weight(slots) -> GLWeight:
    """Scalar weight sum d_i (k_i + j_i / 2) for slots (j_i, k_i, d_i)."""
    k = sum((d * (Fraction(kk) + Fraction(j, 2)) for j, kk, d in slots), Fraction(0))
    return GLWeight.siegel2(0, _integral(k, "sum d_i(k_i + j_i/2)"))


def siegel2_covariant_weight(j: int, k: int, a: int, b: int) -> GLWeight:
    """(b, a(k + j/2) - b/2) for a covariant of degree a and x-degree b."""
    kk = a * (Fraction(k) + Fraction(j, 2)) - Fraction(b, 2)
    return GLWeight.siegel2(b, _integral(kk, "a(k + j/2) - b/2"))


def siegel2_multicovariant_weight(slots, b: int) -> GLWeight:
    """Slots are (j_i, k_i, chi_i, a_i); the character is prod chi_i^a_i."""
    kk = Fraction(0)
    chi = TRIVIAL
    for j, k, c, a in slots:
        kk += a * (Fraction(k) + Fraction(j, 2))
        chi = chi * Character.coerce(c) ** a
    kk -= Fraction(b, 2)
    return GLWeight.siegel2(b, _integral(kk, "sum a_i(k_i + j_i/2) - b/2"), chi)


def embedding_exponent(j: int, k: int, a: int, b: int) -> int:
    """l with U[b + l, l] inside Sym^a(U[j + k, k]): 2l = aj + 2ak - b."""
    two_l = a * j + 2 * a * k - b
    if two_l % 2:
        raise NonIntegralWeight(f"aj + 2ak - b = {two_l} is odd")
    if two_l < 0:
        raise NonIntegralWeight(f"aj + 2ak - b = {two_l} is negative")
    return two_l // 2


def elliptic_character_weight(k: int, d: int, n: int) -> dict:
    """Target of an invariant of degree d and order n applied to a weight-k form.

    ``stated`` is kd + n, ``validated`` is kd + 2n (the weight the
    membership certificates confirm); the character is chi^d.
    """
    return {"stated": k * d + n, "validated": k * d + 2 * n, "character_power": d}


def elliptic_multi_weight(ks, ds, n: int) -> int:
    """sum d_j k_j + 2n, the certified weight for several slots."""
    return sum(k * d for k, d in zip(ks, ds)) + 2 * n


def picard_weight(k: int, d1: int, d2: int, n: int) -> GLWeight:
    """(0, d1 k + d2 (k + 1) + n) for a bi-invariant of V_1 + V_2."""
    return GLWeight.siegel2(0, d1 * k + d2 * (k + 1) + n)


def symmetric_discriminant_weight(g: int, k: int) -> int:
    """Scalar weight of det applied to a Sym^2(std) (x) det^k form over GL(g).

    The determinant has degree g and det-order 2.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    return g * k + 2


def apply_covariant_formal(C, components) -> list:
    """Substitute component symbols for the coefficient variables of C.

    ``components[j]`` lists r_j + 1 entries (symbol names or MultiPolys) for
    slot j.  An invariant gives a one-element list; a covariant gives its
    x-coefficient vector [coeff of x1^(b-i) x2^i for i = 0..b].
    """
    spec = C.spec
    if len(components) != len(spec):
        raise SlotShape(f"expected {len(spec)} component vectors, got {len(components)}")
    mapping = {}
    for j, comp in enumerate(components):
        names = spec.slot_vars(j)
        if len(comp) != len(names):
            raise SlotShape(f"slot {j} needs {len(names)} components, got {len(comp)}")
        for v, c in zip(names, comp):
            mapping[v] = MultiPoly.coerce(c)
    if isinstance(C, InvariantSpec):
        return [C.poly.subs(mapping)]
    if isinstance(C, CovariantSpec):
        return [P.subs(mapping) for P in C.x_coefficients()]
    raise TypeError("expected an InvariantSpec or CovariantSpec")


def covariant_meta(C: CovariantSpec, j: int, k: int) -> ConcomitantMeta:
    """Metadata of a single-slot covariant applied to a form of weight (j, k)."""
    if len(C.spec) != 1:
        raise SlotShape("single-slot covariant expected")
    tgt = siegel2_covariant_weight(j, k, C.degrees[0], C.xdeg)
    return ConcomitantMeta(C.degrees, C.xdeg, (j, k), tgt)
