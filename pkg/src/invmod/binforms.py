"""Binary forms, transvectants, the GL(2) action and an invariant catalog.

Slot j of a tuple of binary forms has coefficient variables
``<name_j>0 .. <name_j>r`` (``a0..a3``, ``b0, b1``, ...).  A slot uses
either the BINOMIAL convention F = sum a_i C(r, i) x1^(r-i) x2^i or the
PLAIN one F = sum a_i x1^(r-i) x2^i.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .multipoly import X_VARS, MultiPoly

X1 = MultiPoly.var("x1")
X2 = MultiPoly.var("x2")
SLOT_NAMES = "abcdefgh"


class Convention(enum.Enum):
    BINOMIAL = "binomial"
    PLAIN = "plain"


class DegreeMismatch(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


class SlotShape(ValueError):
    pass


class InvalidInvariant(ValueError):
    pass


@dataclass(frozen=True)
class BinaryFormSpec:
    degrees: tuple
    conventions: tuple = None
    names: tuple = None

    def __post_init__(self):
        degrees = tuple(int(r) for r in self.degrees)
        if any(r < 0 for r in degrees):
            raise ValueError("form degrees must be >= 0")
        conv = self.conventions
        if conv is None:
            conv = (Convention.BINOMIAL,) * len(degrees)
        elif isinstance(conv, Convention):
            conv = (conv,) * len(degrees)
        conv = tuple(Convention(c) for c in conv)
        names = tuple(self.names) if self.names is not None else tuple(SLOT_NAMES[: len(degrees)])
        if len(conv) != len(degrees) or len(names) != len(degrees):
            raise ValueError("degrees, conventions and names must have equal length")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "conventions", conv)
        object.__setattr__(self, "names", names)

    def __len__(self):
        return len(self.degrees)

    def slot_vars(self, j: int) -> list:
        return [f"{self.names[j]}{i}" for i in range(self.degrees[j] + 1)]

    def weight_factor(self, j: int, i: int) -> int:
        """Coefficient of a_i x1^(r-i) x2^i in the slot's generic form."""
        r = self.degrees[j]
        return comb(r, i) if self.conventions[j] is Convention.BINOMIAL else 1

    def __add__(self, other: "BinaryFormSpec") -> "BinaryFormSpec":
        return BinaryFormSpec(self.degrees + other.degrees, self.conventions + other.conventions, self.names + other.names)


def form_poly(j: int, spec: BinaryFormSpec) -> MultiPoly:
    r = spec.degrees[j]
    if not 0 <= j < len(spec):
        raise IndexError(f"no slot {j}")
    out = MultiPoly()
    for i, v in enumerate(spec.slot_vars(j)):
        out = out + MultiPoly({((v, 1), ("x1", r - i), ("x2", i)): spec.weight_factor(j, i)})
    return out


def x_degree(P: MultiPoly):
    """The common x-degree of P, or None if P is not homogeneous in x."""
    degs = P.degree_in(X_VARS)
    if not degs:
        return 0
    return degs.pop() if len(degs) == 1 else None


def transvectant(F: MultiPoly, G: MultiPoly, r: int, m: int, n: int) -> MultiPoly:
    """(F, G)_r for F, G homogeneous in (x1, x2) of degrees m and n."""
    for P, d, label in ((F, m, "F"), (G, n, "G")):
        deg = x_degree(P)
        if P and deg != d:
            raise DegreeMismatch(f"{label} is not homogeneous of x-degree {d}")
    if not 0 <= r <= min(m, n):
        raise DegreeMismatch(f"need 0 <= r <= min(m, n), got r={r}, m={m}, n={n}")
    scale = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    total = MultiPoly()
    for j in range(r + 1):
        dF = F.diff("x1", r - j).diff("x2", j)
        dG = G.diff("x1", j).diff("x2", r - j)
        total = total + dF * dG * ((-1) ** j * comb(r, j))
    return total * scale


def _det(g) -> Fraction:
    return Fraction(g[0][0]) * g[1][1] - Fraction(g[0][1]) * g[1][0]


def transformed_coefficients(g, spec: BinaryFormSpec) -> dict:
    """Coefficient variables of F(g x) as linear forms in the old ones."""
    sub = {
        "x1": X1 * Fraction(g[0][0]) + X2 * Fraction(g[0][1]),
        "x2": X1 * Fraction(g[1][0]) + X2 * Fraction(g[1][1]),
    }
    out = {}
    for j in range(len(spec)):
        r = spec.degrees[j]
        moved = form_poly(j, spec).subs(sub)
        for i, v in enumerate(spec.slot_vars(j)):
            out[v] = moved.coefficient({"x1": r - i, "x2": i}) / spec.weight_factor(j, i)
    return out


def act(g, P: MultiPoly, spec: BinaryFormSpec) -> MultiPoly:
    """P evaluated at the coefficients of the forms F_j(g x).

    This is a right action: act(g, act(h, P)) == act(g @ h, P).
    """
    if _det(g) == 0:
        raise SingularMatrix("matrix is not invertible")
    return P.subs(transformed_coefficients(g, spec))


def matmul(g, h):
    return [[sum(Fraction(g[i][k]) * h[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def random_matrix(rng: random.Random, bound: int = 10):
    while True:
        g = [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(2)] for _ in range(2)]
        if _det(g):
            return g


def _index(v: str) -> int:
    return int("".join(ch for ch in v if ch.isdigit()))


@dataclass(frozen=True)
class InvariantSpec:
    """A multi-invariant of the forms described by ``spec``.

    ``degrees[j]`` is the degree in slot-j coefficients and ``order`` the
    common index sum; construction checks both and 2n = sum d_j r_j.
    """

    poly: MultiPoly
    spec: BinaryFormSpec
    degrees: tuple
    order: int
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        check_invariant_shape(self.poly, self.spec, self.degrees, self.order)

    def __mul__(self, other: "InvariantSpec") -> "InvariantSpec":
        if other.spec != self.spec:
            raise SlotShape("product of invariants needs identical form specs")
        return InvariantSpec(
            self.poly * other.poly,
            self.spec,
            tuple(a + b for a, b in zip(self.degrees, other.degrees)),
            self.order + other.order,
            f"{self.name}*{other.name}",
        )


def check_invariant_shape(poly: MultiPoly, spec: BinaryFormSpec, degrees, order: int) -> None:
    if len(degrees) != len(spec):
        raise InvalidInvariant("one degree per slot is required")
    known = {v: j for j in range(len(spec)) for v in spec.slot_vars(j)}
    stray = poly.variables() - set(known)
    if stray:
        raise InvalidInvariant(f"unexpected variables {sorted(stray)}")
    for mono, _ in poly:
        per_slot = [0] * len(spec)
        weight = 0
        for v, e in mono:
            per_slot[known[v]] += e
            weight += e * _index(v)
        if tuple(per_slot) != tuple(degrees):
            raise InvalidInvariant(f"monomial {mono} has slot degrees {per_slot}, expected {list(degrees)}")
        if weight != order:
            raise InvalidInvariant(f"monomial {mono} has index sum {weight}, expected {order}")
    if 2 * order != sum(d * r for d, r in zip(degrees, spec.degrees)):
        raise InvalidInvariant(f"2n = {2 * order} differs from sum d_j r_j")


@dataclass(frozen=True)
class CovariantSpec:
    """A covariant: degree ``degrees[j]`` in slot j, degree ``xdeg`` in x."""

    poly: MultiPoly
    spec: BinaryFormSpec
    degrees: tuple
    xdeg: int
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.poly and x_degree(self.poly) != self.xdeg:
            raise InvalidInvariant(f"covariant is not homogeneous of x-degree {self.xdeg}")
        total = sum(d * r for d, r in zip(self.degrees, self.spec.degrees))
        if (total - self.xdeg) % 2:
            raise InvalidInvariant("sum a_j r_j - b must be even")

    @property
    def index(self) -> int:
        """lambda with 2*lambda + b = sum a_j r_j."""
        return (sum(d * r for d, r in zip(self.degrees, self.spec.degrees)) - self.xdeg) // 2

    def x_coefficients(self) -> list:
        b = self.xdeg
        return [self.poly.coefficient({"x1": b - i, "x2": i}) for i in range(b + 1)]


@dataclass
class InvarianceReport:
    name: str
    order: int
    trials: int
    passed: bool
    counterexample: list = None
    matrices: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "trials": self.trials,
            "passed": self.passed,
            "counterexample": None
            if self.counterexample is None
            else [[str(x) for x in row] for row in self.counterexample],
        }


def verify_invariance(inv: InvariantSpec, trials: int = 5, seed: int = 0) -> InvarianceReport:
    """Check act(g, I) == det(g)^n I for random rational g."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    mats = []
    for _ in range(trials):
        g = random_matrix(rng)
        mats.append(g)
        if act(g, inv.poly, inv.spec) != inv.poly * _det(g) ** inv.order:
            return InvarianceReport(inv.name, inv.order, trials, False, g, mats)
    return InvarianceReport(inv.name, inv.order, trials, True, None, mats)


def invariant_to_covariant(inv: InvariantSpec) -> CovariantSpec:
    """Substitute l1 = -x2, l2 = x1 for the last (linear) slot's coefficients."""
    if not len(inv.spec) or inv.spec.degrees[-1] != 1:
        raise SlotShape("the last slot must be a linear form")
    l1, l2 = inv.spec.slot_vars(len(inv.spec) - 1)
    poly = inv.poly.subs({l1: -X2, l2: X1})
    n = len(inv.spec) - 1
    spec = BinaryFormSpec(inv.spec.degrees[:n], inv.spec.conventions[:n], inv.spec.names[:n])
    return CovariantSpec(poly, spec, inv.degrees[:n], inv.degrees[-1], inv.name)


def covariant_to_invariant(cov: CovariantSpec, name: str | None = None) -> InvariantSpec:
    """Inverse of :func:`invariant_to_covariant`: x1 -> l2, x2 -> -l1,
    with (l1, l2) the coefficients of an appended linear slot."""
    if name is None:
        name = next(ch for ch in SLOT_NAMES if ch not in cov.spec.names)
    spec = cov.spec + BinaryFormSpec((1,), (Convention.PLAIN,), (name,))
    l1, l2 = spec.slot_vars(len(spec) - 1)
    poly = cov.poly.subs({"x1": MultiPoly.var(l2), "x2": -MultiPoly.var(l1)})
    order = cov.index + cov.xdeg
    return InvariantSpec(poly, spec, cov.degrees + (cov.xdeg,), order, cov.name)


# -- catalog -------------------------------------------------------------

def transvectant_invariant(r: int, names=("a", "b")) -> InvariantSpec:
    """(F, G)_r for F, G in V_r (binomial convention); order r."""
    spec = BinaryFormSpec((r, r), Convention.BINOMIAL, names)
    poly = transvectant(form_poly(0, spec), form_poly(1, spec), r, r, r)
    return InvariantSpec(poly, spec, (1, 1), r, f"({names[0]},{names[1]})_{r}")


def self_transvectant_invariant(r: int) -> InvariantSpec:
    """(F, F)_r for F in V_r; degree 2 and order r."""
    spec = BinaryFormSpec((r,), Convention.BINOMIAL)
    F = form_poly(0, spec)
    return InvariantSpec(transvectant(F, F, r, r, r), spec, (2,), r, f"(F,F)_{r}")


def hessian_covariant() -> CovariantSpec:
    spec = BinaryFormSpec((3,), Convention.BINOMIAL)
    F = form_poly(0, spec)
    return CovariantSpec(transvectant(F, F, 2, 3, 3), spec, (2,), 2, "Hessian")


def unit_invariant(spec: BinaryFormSpec) -> InvariantSpec:
    return InvariantSpec(MultiPoly.const(1), spec, (0,) * len(spec), 0, "1")


def i3() -> InvariantSpec:
    poly = MultiPoly.parse("a0^2*a3^2 - 6*a0*a1*a2*a3 + 4*a0*a2^3 + 4*a1^3*a3 - 3*a1^2*a2^2")
    return InvariantSpec(poly, BinaryFormSpec((3,), Convention.BINOMIAL), (4,), 6, "I3")


def disc2() -> InvariantSpec:
    poly = MultiPoly.parse("a1^2 - 4*a0*a2")
    return InvariantSpec(poly, BinaryFormSpec((2,), Convention.PLAIN), (2,), 2, "disc2")


def j12() -> InvariantSpec:
    poly = MultiPoly.parse(
        "6*a0*b2^2 - 3*a1*b1*b2 + 2*a2*b0*b2 + a2*b1^2 - 3*a3*b0*b1 + 6*a4*b0^2"
    )
    return InvariantSpec(poly, BinaryFormSpec((4, 2), Convention.PLAIN), (1, 2), 4, "J12")


CUBIC_LINEAR_TEXT = "a0*b1^3 - 3*a1*b0*b1^2 + 3*a2*b0^2*b1 - a3*b0^3"


def cubic_linear() -> InvariantSpec:
    """Bi-invariant of a binomial cubic F and G = b0 x1 + b1 x2.

    Equal to (F, G^3)_3 under the transvectant normalization used here.
    """
    spec = BinaryFormSpec((3, 1), (Convention.BINOMIAL, Convention.PLAIN))
    return InvariantSpec(MultiPoly.parse(CUBIC_LINEAR_TEXT), spec, (1, 3), 3, "cubic_linear")


TRI321_TEXT = "a0*b2*c1 - 2*a1*b1*c1 - a1*b2*c0 + a2*b0*c1 + 2*a2*b1*c0 - a3*b0*c0"
# Selected by tests/test_catalog.py::test_tri321_convention_is_pinned
TRI321_CONVENTIONS = (Convention.BINOMIAL, Convention.BINOMIAL, Convention.PLAIN)


def tri321(conventions=TRI321_CONVENTIONS) -> InvariantSpec:
    spec = BinaryFormSpec((3, 2, 1), conventions)
    return InvariantSpec(MultiPoly.parse(TRI321_TEXT), spec, (1, 1, 1), 3, "tri321")


def picard_bi() -> InvariantSpec:
    spec = BinaryFormSpec((1, 2), (Convention.PLAIN, Convention.BINOMIAL))
    poly = MultiPoly.parse("a0^2*b2 - 2*a0*a1*b1 + a1^2*b0")
    return InvariantSpec(poly, spec, (2, 1), 2, "picard_bi")


CATALOG = {
    "I3": i3,
    "disc2": disc2,
    "J12": j12,
    "cubic_linear": cubic_linear,
    "tri321": tri321,
    "picard_bi": picard_bi,
}


def catalog(name: str) -> InvariantSpec:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown invariant {name!r}; known: {', '.join(CATALOG)}") from None
