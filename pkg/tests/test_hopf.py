import dataclasses

import pytest

from smashkit.hopf import (H4_BASIS, NoAntipodeError, group_z, h4_reduce, preset_hopf,
                           semigroup_zplus, sweedler, sweedler_h4, verify_antipode,
                           verify_bialgebra, verify_coalgebra, verify_cocommutative,
                           verify_hopf)
from smashkit.kernel import AlgebraError, LinComb, UndefinedOnBasis

L = LinComb.basis

# H4 multiplication worked out by hand from g^2 = 1, x^2 = 0, xg = -gx
H4_TABLE = {
    ("g", "g"): L("1"), ("g", "x"): L("gx"), ("g", "gx"): L("x"),
    ("x", "g"): L("gx", -1), ("x", "x"): LinComb.zero(), ("x", "gx"): LinComb.zero(),
    ("gx", "g"): L("x", -1), ("gx", "x"): LinComb.zero(), ("gx", "gx"): LinComb.zero(),
}


def test_h4_multiplication_table():
    H = sweedler_h4()
    for (a, b), expected in H4_TABLE.items():
        assert H.mul(L(a), L(b)) == expected, (a, b)
    for b in H4_BASIS:
        assert H.mul(L("1"), L(b)) == L(b) == H.mul(L(b), L("1"))


def test_h4_word_reduction():
    assert h4_reduce("xgxg") == LinComb.zero()
    assert h4_reduce("xggg") == L("gx", -1)
    with pytest.raises(UndefinedOnBasis):
        h4_reduce("xy")


def test_grouplike_coproduct():
    assert group_z().comul(L(1)) == L((1, 1))


def test_grouplike_second_order_expansion():
    assert sweedler(group_z(), L(3), order=2).terms == L((3, 3, 3))


def test_h4_first_order_expansion():
    assert sweedler(sweedler_h4(), L("x")).terms == LinComb({("x", "1"): 1, ("g", "x"): 1})


def test_h4_second_order_expansion():
    expected = LinComb({("x", "1", "1"): 1, ("g", "x", "1"): 1, ("g", "g", "x"): 1})
    assert sweedler(sweedler_h4(), L("x"), order=2).terms == expected
    assert len(sweedler(sweedler_h4(), L("x"), order=2).summands) == 3


def test_sweedler_rejects_bad_order():
    with pytest.raises(ValueError):
        sweedler(group_z(), L(0), order=3)


def test_h4_antipode_on_x_sums_to_zero():
    H = sweedler_h4()
    total = H.mul(H.antipode(L("x")), L("1")) + H.mul(H.antipode(L("g")), L("x"))
    assert total.is_zero()
    assert H.counit(L("x")) == 0


def test_semigroup_has_no_antipode():
    with pytest.raises(NoAntipodeError, match="no antipode"):
        semigroup_zplus().antipode(L(1))
    with pytest.raises(NoAntipodeError):
        verify_antipode(semigroup_zplus())


@pytest.mark.parametrize("name", ["GroupZ", "SweedlerH4"])
def test_hopf_presets_pass_everything(name):
    report = verify_hopf(preset_hopf(name), depth=6)
    assert report.passed, report.to_text()
    axioms = set(report.summary())
    assert {"coassociativity", "counit-left", "counit-right", "comul-mult", "counit-mult",
            "antipode-left", "antipode-right"} <= axioms


def test_semigroup_passes_bialgebra_and_notes_missing_antipode():
    report = verify_hopf(semigroup_zplus(), depth=6)
    assert report.passed
    assert "antipode-left" not in report.summary()
    assert any("no antipode" in n for n in report.notes)


def test_group_checks_are_bounded_exhaustive():
    report = verify_bialgebra(group_z(), depth=6)
    assert report.summary()["comul-mult"] == (169, 169)


def test_h4_bialgebra_exhaustive_pairs():
    report = verify_bialgebra(sweedler_h4())
    assert report.summary()["comul-mult"] == (16, 16)
    assert report.passed


def test_h4_comul_of_gx_from_product():
    H = sweedler_h4()
    assert H.tensor_mul(H.comul(L("g")), H.comul(L("x"))) == \
        LinComb({("gx", "g"): 1, ("1", "gx"): 1})


def test_h4_coproduct_squares_to_zero():
    H = sweedler_h4()
    dx = H.comul(L("x"))
    assert H.tensor_mul(dx, dx).is_zero()


def test_corrupted_coproduct_fails_left_counit_only():
    H = sweedler_h4()
    table = {"1": L(("1", "1")), "g": L(("g", "g")), "x": L(("x", "1")),
             "gx": L(("gx", "g")) + L(("1", "gx"))}
    bad = dataclasses.replace(H, comul_basis=table.__getitem__)
    report = verify_coalgebra(bad)
    failed = {(c.axiom, tuple(c.labels)) for c in report.failures}
    assert failed == {("counit-left", ("x",))}


def test_non_coassociative_spec_raises():
    G = group_z()
    bad = dataclasses.replace(G, comul_basis=lambda k: L((k, k + 1)))
    assert not verify_coalgebra(bad, labels=[1]).passed
    with pytest.raises(AlgebraError):
        sweedler(bad, L(1), order=2)


@pytest.mark.parametrize("spec", [group_z(), semigroup_zplus()], ids=lambda s: s.name)
def test_semigroup_algebras_are_cocommutative(spec):
    assert verify_cocommutative(spec).passed


def test_h4_is_not_cocommutative():
    report = verify_cocommutative(sweedler_h4())
    assert {c.labels[0] for c in report.failures} == {"x", "gx"}


def test_preset_names_are_forgiving():
    assert preset_hopf("sweedler-h4") is sweedler_h4()
    assert preset_hopf("semigroup_z+") is semigroup_zplus()
    with pytest.raises(ValueError, match="unknown preset"):
        preset_hopf("Taft9")


def test_group_labels_validated():
    with pytest.raises(UndefinedOnBasis):
        semigroup_zplus().algebra.basis(-1)


def test_report_json_shape():
    doc = verify_hopf(sweedler_h4()).to_json()
    assert doc["schema"] == 1 and doc["pass"] is True
    check = doc["checks"][0]
    assert set(check) == {"preset", "axiom", "labels", "pass", "lhs", "rhs"}
