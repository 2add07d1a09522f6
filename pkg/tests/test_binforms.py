import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from invmod import binforms as B
from invmod.binforms import BinaryFormSpec, Convention, act, form_poly, transvectant
from invmod.multipoly import MultiPoly

P = MultiPoly.parse
BIN, PLAIN = Convention.BINOMIAL, Convention.PLAIN


def test_form_poly():
    assert form_poly(0, BinaryFormSpec((1,), PLAIN)) == P("a0*x1 + a1*x2")
    assert form_poly(0, BinaryFormSpec((3,), BIN)) == P("a0*x1^3 + 3*a1*x1^2*x2 + 3*a2*x1*x2^2 + a3*x2^3")
    spec = BinaryFormSpec((1, 2), BIN)
    assert form_poly(1, spec) == P("b0*x1^2 + 2*b1*x1*x2 + b2*x2^2")


def test_transvectant_examples():
    F = form_poly(0, BinaryFormSpec((2,), BIN))
    assert transvectant(F, F, 2, 2, 2) == P("2*a0*a2 - 2*a1^2")
    G = form_poly(1, BinaryFormSpec((2, 3), BIN))
    assert transvectant(F, G, 0, 2, 3) == F * G
    with pytest.raises(B.DegreeMismatch):
        transvectant(F, F, 3, 2, 2)


def test_cubic_linear_transvectant_is_one_twentieth_of_display():
    # (F, G^3)_3 for a binomial cubic F and linear G: the displayed polynomial
    # comes out with coefficient 1, so 20*(F,G^3)_3 is 20 times it.
    spec = BinaryFormSpec((3, 1), (BIN, PLAIN))
    F, G = form_poly(0, spec), form_poly(1, spec)
    assert transvectant(F, G**3, 3, 3, 3) == P(B.CUBIC_LINEAR_TEXT)


def test_transvectant_symmetry():
    spec = BinaryFormSpec((3, 4), BIN)
    F, G = form_poly(0, spec), form_poly(1, spec)
    for r in range(4):
        assert transvectant(G, F, r, 4, 3) == transvectant(F, G, r, 3, 4) * (-1) ** r


def test_transvectant_bilinear():
    spec = BinaryFormSpec((2, 2, 2), PLAIN)
    F, G, H = (form_poly(j, spec) for j in range(3))
    lhs = transvectant(F * 3 + G, H, 1, 2, 2)
    assert lhs == transvectant(F, H, 1, 2, 2) * 3 + transvectant(G, H, 1, 2, 2)


def test_act_examples():
    spec = BinaryFormSpec((2,), PLAIN)
    disc = P("a1^2 - 4*a0*a2")
    assert act([[1, 0], [0, 1]], disc, spec) == disc
    assert act([[2, 0], [0, 1]], disc, spec) == disc * 4
    with pytest.raises(B.SingularMatrix):
        act([[1, 2], [2, 4]], disc, spec)


def test_act_is_right_action():
    rng = random.Random(3)
    spec = BinaryFormSpec((3,), BIN)
    P3 = P("a0*a3 + 2*a1^2 - a2")
    for _ in range(3):
        g, h = B.random_matrix(rng), B.random_matrix(rng)
        assert act(g, act(h, P3, spec), spec) == act(B.matmul(g, h), P3, spec)


@pytest.mark.parametrize("name,order", [("disc2", 2), ("I3", 6), ("J12", 4), ("cubic_linear", 3), ("tri321", 3), ("picard_bi", 2)])
def test_catalog_invariance(name, order):
    inv = B.catalog(name)
    assert inv.order == order
    rep = B.verify_invariance(inv, trials=5, seed=11)
    assert rep.passed and rep.counterexample is None


def test_non_invariants_are_caught():
    spec = BinaryFormSpec((2,), PLAIN)
    with pytest.raises(B.InvalidInvariant):
        B.InvariantSpec(P("a0^2"), spec, (2,), 2)
    assert act([[2, 0], [0, 1]], P("a0^2"), spec) == P("16*a0^2")  # det^2 would be 4
    shaped = B.InvariantSpec(P("a0*a2"), spec, (2,), 2, "a0a2")
    assert not B.verify_invariance(shaped).passed


def test_tri321_convention_is_pinned():
    passing = []
    for conv in [(x, y, z) for x in (BIN, PLAIN) for y in (BIN, PLAIN) for z in (BIN, PLAIN)]:
        try:
            inv = B.tri321(conv)
        except B.InvalidInvariant:
            continue
        if B.verify_invariance(inv, seed=1).passed:
            passing.append(conv)
    assert B.TRI321_CONVENTIONS in passing
    assert all(c[:2] == (BIN, BIN) for c in passing)


def test_invariant_covariant_substitution():
    spec = BinaryFormSpec((1, 1), PLAIN)
    inv = B.InvariantSpec(P("a0*b1 - a1*b0"), spec, (1, 1), 1, "F")
    cov = B.invariant_to_covariant(inv)
    assert cov.poly == P("a0*x1 + a1*x2")
    assert B.covariant_to_invariant(cov).poly == inv.poly
    H = B.hessian_covariant()
    back = B.invariant_to_covariant(B.covariant_to_invariant(H))
    assert back.poly == H.poly
    assert B.verify_invariance(B.covariant_to_invariant(H)).passed


def test_constant_covariant_roundtrip():
    cov = B.CovariantSpec(MultiPoly.const(5), BinaryFormSpec((), ()), (), 0)
    assert B.covariant_to_invariant(cov).poly == MultiPoly.const(5)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4).filter(lambda m: m[0] * m[3] != m[1] * m[2]))
def test_disc_scales_by_det_squared(m):
    g = [[m[0], m[1]], [m[2], m[3]]]
    inv = B.catalog("disc2")
    det = Fraction(m[0] * m[3] - m[1] * m[2])
    assert act(g, inv.poly, inv.spec) == inv.poly * det**2
