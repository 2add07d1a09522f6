import pytest

from invmod import binforms as B
from invmod import concomitants as C
from invmod.multipoly import MultiPoly


def test_siegel2_invariant_weight():
    for k in range(-3, 15):
        assert C.siegel2_invariant_weight([(2, k, 2)]).jk == (0, 2 * k + 2)
    assert str(C.siegel2_invariant_weight([(4, 3, 1), (2, 7, 2)])) == "(0,21)"
    assert C.siegel2_invariant_weight([]).jk == (0, 0)
    with pytest.raises(C.NonIntegralWeight):
        C.siegel2_invariant_weight([(1, 2, 1)])


def test_covariant_weight_and_embedding():
    for j in range(0, 8, 2):
        for k in range(0, 6):
            assert C.siegel2_covariant_weight(j, k, 1, j).jk == (j, k)
            assert C.embedding_exponent(j, k, 1, j) == k
    assert C.siegel2_covariant_weight(6, 8, 2, 8).jk == (8, 18)
    assert C.embedding_exponent(6, 8, 2, 8) == 18
    with pytest.raises(C.NonIntegralWeight):
        C.embedding_exponent(6, 8, 2, 100)


def test_covariant_weight_consistency_sweep():
    # the two weight rules agree wherever the target is integral
    for j in range(0, 7):
        for k in range(0, 6):
            for a in range(1, 4):
                for b in range(0, a * j + 1):
                    try:
                        l = C.embedding_exponent(j, k, a, b)
                    except C.NonIntegralWeight:
                        with pytest.raises(C.NonIntegralWeight):
                            C.siegel2_covariant_weight(j, k, a, b)
                        continue
                    assert C.siegel2_covariant_weight(j, k, a, b).jk == (b, l)


def test_multicovariant_characters():
    w = C.siegel2_multicovariant_weight([(6, 8, "1", 1), (2, 4, "chi", 2)], 2)
    assert w.jk == (2, 20)
    assert w.character == C.Character({"chi": 2})
    assert str(w.character) == "chi^2"
    empty = C.siegel2_multicovariant_weight([(6, 8, "chi", 0)], 0)
    assert empty.jk == (0, 0) and empty.character == C.TRIVIAL


def test_elliptic_character_weight():
    assert C.elliptic_character_weight(4, 4, 6) == {"stated": 22, "validated": 28, "character_power": 4}
    w = C.elliptic_character_weight(4, 1, 0)
    assert w["stated"] == w["validated"] == 4
    w = C.elliptic_character_weight(6, 2, 2)
    assert (w["stated"], w["validated"]) == (14, 16)
    assert C.elliptic_multi_weight([6, 4], [1, 3], 3) == 24


def test_picard_and_discriminant():
    assert str(C.picard_weight(1, 2, 1, 2)) == "(0,6)"
    assert C.picard_weight(7, 1, 0, 0).jk == (0, 7)
    assert C.picard_weight(3, 2, 1, 2).jk == (0, 12)
    assert C.symmetric_discriminant_weight(4, 8) == 34
    assert C.symmetric_discriminant_weight(2, 0) == B.catalog("disc2").order
    assert C.symmetric_discriminant_weight(3, 4) == 14


def test_apply_covariant_formal():
    (v,) = C.apply_covariant_formal(B.catalog("disc2"), [["f0", "f1", "f2"]])
    assert v == MultiPoly.parse("f1^2 - 4*f0*f2")
    (v,) = C.apply_covariant_formal(B.catalog("picard_bi"), [["f0", "f1"], ["f0u", "(f1u + f0v)/2", "f1v"]])
    assert v == MultiPoly.parse("f0^2*f1v - f0*f1*(f1u + f0v) + f1^2*f0u")
    ident = B.CovariantSpec(B.form_poly(0, B.BinaryFormSpec((3,), B.Convention.PLAIN)), B.BinaryFormSpec((3,), B.Convention.PLAIN), (1,), 3)
    assert C.apply_covariant_formal(ident, [["f0", "f1", "f2", "f3"]]) == [MultiPoly.var(f"f{i}") for i in range(4)]
    with pytest.raises(B.SlotShape):
        C.apply_covariant_formal(B.catalog("disc2"), [["f0", "f1"]])


def test_covariant_meta():
    meta = C.covariant_meta(B.hessian_covariant(), 3, 5)
    # Hessian of a cubic: degree 2, x-degree 2
    assert meta.target == C.siegel2_covariant_weight(3, 5, 2, 2)
