from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from smashkit.kernel import (I, ONE, ZERO, LinComb, Scalar, UndefinedOnBasis, bilinear_extend,
                             combine, multilinear_extend, tensor)

from conftest import lincombs, scalars


def test_conjugate_product():
    assert (1 + I) * (1 - I) == 2


def test_inverse_of_two():
    assert Scalar(2).inv() == Fraction(1, 2)


def test_abs_sq_of_unit_modulus():
    assert Scalar(Fraction(3, 5), Fraction(4, 5)).abs_sq() == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        Scalar.coerce(1j)


def test_scalar_hash_matches_fraction():
    assert hash(Scalar(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert {Scalar(2): "two"}[2] == "two"


def test_scalar_text_and_json():
    s = Scalar(Fraction(1, 2), Fraction(-3, 4))
    assert Scalar.from_json(s.to_json()) == s
    assert s.to_json() == {"re": "1/2", "im": "-3/4"}
    assert str(I) == "i"
    assert str(Scalar(-2)) == "-2"


def test_negative_powers():
    assert Scalar(2) ** -3 == Fraction(1, 8)
    assert I ** 4 == 1


def test_cancellation_gives_empty_combination():
    x = LinComb.basis("x")
    assert combine(x, x, -1).is_zero()
    assert combine(x, x, -1) == LinComb.zero()
    assert str(combine(x, x, -1)) == "0"


def test_combine_distinct_labels():
    x, y = LinComb.basis("x"), LinComb.basis("y")
    assert combine(x, y, 1) == LinComb({"x": 1, "y": 1})
    assert str(combine(x, y, 1)) == "x + y"


def test_combine_collects_coefficients():
    two_x = LinComb.basis("x", 2)
    assert combine(two_x, two_x, Fraction(1, 2)) == LinComb.basis("x", 3)


def test_zero_coefficients_never_stored():
    u = LinComb({"a": 0, "b": 1, "c": Scalar(0, 0)})
    assert u.support() == ["b"]


def test_bilinear_extend_of_zero():
    u = bilinear_extend(lambda a, b: LinComb.basis(a + b), LinComb.zero(), LinComb.basis(1))
    assert u.is_zero()


def test_bilinear_extend_tensor_pairing():
    u = tensor(LinComb.basis("x"), LinComb.basis("h"))
    assert u == LinComb.basis(("x", "h"))


def test_bilinear_extend_group_law():
    group = lambda a, b: LinComb.basis(a + b)
    u = bilinear_extend(group, LinComb({1: 1, 2: 1}), LinComb.basis(1))
    assert u == LinComb({2: 1, 3: 1})


def test_undefined_label_pair_is_named():
    def partial(a, b):
        return {("a", "a"): LinComb.basis("a")}[(a, b)]

    with pytest.raises(UndefinedOnBasis) as info:
        bilinear_extend(partial, LinComb.basis("a"), LinComb.basis("b"))
    assert info.value.labels == ("a", "b")
    assert "('a', 'b')" in str(info.value)


def test_render_order_and_signs():
    u = LinComb({"y": -1, "x": Fraction(1, 2), "1": 3})
    assert u.render() == "3 + 1/2 * x - y"


@given(lincombs(), lincombs(), lincombs(), scalars)
def test_combine_associative(u, v, w, s):
    assert combine(combine(u, v, s), w, s) == combine(u, combine(v, w, 1), s)


@given(lincombs(), lincombs())
def test_addition_commutative(u, v):
    assert combine(u, v, 1) == combine(v, u, 1)


@given(lincombs(), scalars, scalars)
def test_scaling_distributes(u, s, t):
    assert u.scale(s + t) == u.scale(s) + u.scale(t)
    assert u.scale(s).scale(t) == u.scale(s * t)


def _juxtapose(a, b):
    return LinComb.basis(a + b)


@given(lincombs(), lincombs(), lincombs(), scalars)
def test_bilinear_in_both_arguments(u, u2, v, s):
    f = lambda a, b: bilinear_extend(_juxtapose, a, b)
    assert f(combine(u, u2, s), v) == combine(f(u, v), f(u2, v), s)
    assert f(v, combine(u, u2, s)) == combine(f(v, u), f(v, u2), s)


@given(scalars, scalars)
def test_abs_sq_multiplicative(s, t):
    assert (s * t).abs_sq() == s.abs_sq() * t.abs_sq()


@given(scalars)
def test_abs_sq_vanishes_only_at_zero(s):
    assert (s.abs_sq() == 0) == s.is_zero()


@given(scalars, scalars.filter(bool))
def test_division_inverts_multiplication(s, t):
    assert (s * t) / t == s


@given(st.lists(lincombs(max_size=2), min_size=1, max_size=3))
def test_multilinear_matches_iterated_bilinear(args):
    joined = multilinear_extend(lambda *ls: LinComb.basis("".join(ls)), *args)
    acc = args[0]
    for v in args[1:]:
        acc = bilinear_extend(_juxtapose, acc, v)
    assert joined == acc
