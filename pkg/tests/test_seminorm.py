import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from smashkit.kernel import InexactNormError, LinComb, ParameterError, Scalar
from smashkit.modalg import h4_on_dual_numbers, q_dilation
from smashkit.qplane import QPlaneElement
from smashkit.seminorm import (NormValue, SeminormFamily, abs_value, check_submultiplicative,
                               evaluate, induced_seminorms, l1, matmul, stability_scan,
                               truncated_representation, verify_induced_stability,
                               witness_divergence, witness_element)
from smashkit.smash import random_smash_element, smash_mul

from conftest import rationals

HALF = Fraction(1, 2)
SF = SeminormFamily
L = LinComb.basis


def qp(terms, q=HALF):
    return QPlaneElement(LinComb(terms), q)


# -- evaluation ------------------------------------------------------------


def test_envelope_on_xy():
    assert SF.envelope(2, HALF)(qp({(1, 1): 1})).exact == 2


def test_trunc_on_zero():
    assert SF.trunc(3)(LinComb.zero()).exact == 0


def test_mixed_on_witness_coefficients():
    a = qp({(i, 0): 2 ** (i * i) for i in range(6)})
    assert SF.mixed(1, 3)(a).exact == 531
    assert SF.mixed(1, 3)(a).exact == witness_divergence(HALF, 1, 3, 5).mixed(5).exact


def test_weighted_on_group_labels():
    assert SF.weighted(2)(LinComb({-2: 1, 1: -3})).exact == 4 + 6


def test_exact_moduli():
    assert abs_value(Scalar(Fraction(3, 5), Fraction(4, 5))).exact == 1
    assert abs_value(Scalar(0, -7)).exact == 7
    assert abs_value(Scalar(3, 4)).exact == 5
    root2 = abs_value(Scalar(1, 1))
    assert root2.exact is None
    assert abs(root2.approx ** 2 - 2) < Fraction(1, 2 ** 60)
    with pytest.raises(InexactNormError):
        root2.require_exact()
    assert str(root2).startswith("~1.41421356")


def test_norm_value_json():
    v = NormValue.of(Fraction(531))
    assert v.to_json() == {"value_exact": "531", "value_approx": "531"}


def test_family_parameters_validated():
    with pytest.raises(ParameterError):
        SF.envelope(0, HALF)
    with pytest.raises(ParameterError):
        SF.envelope(1, -HALF)
    with pytest.raises(ParameterError):
        SF("mixed", rho=1)
    with pytest.raises(ParameterError):
        SF("sup", N=1)


def test_trunc_refuses_two_variables():
    with pytest.raises(TypeError):
        SF.trunc(2)(qp({(1, 1): 1}))


# -- seminorm axioms ---------------------------------------------------------

FAMILIES = [SF.trunc(3), SF.envelope(2, HALF), SF.envelope(HALF, Fraction(3, 4)),
            SF.mixed(Fraction(3, 2), 2), SF.weighted(Fraction(1, 3))]
# scalars whose modulus is rational
UNIT_PHASES = [Scalar(1), Scalar(-1), Scalar(0, 1), Scalar(Fraction(3, 5), Fraction(4, 5)),
               Scalar(Fraction(-5, 13), Fraction(12, 13))]


def elements(one_variable: bool):
    label = st.tuples(st.integers(0, 6), st.just(0) if one_variable else st.integers(0, 4))
    return st.dictionaries(label, rationals.filter(bool), max_size=5).map(lambda d: qp(d))


def _one_variable(f):
    return f.kind in ("trunc", "weighted")


@pytest.mark.parametrize("f", FAMILIES, ids=str)
@settings(max_examples=200)
@given(data=st.data())
def test_homogeneous_and_subadditive(f, data):
    a = data.draw(elements(_one_variable(f)))
    b = data.draw(elements(_one_variable(f)))
    r = data.draw(rationals)
    phase = data.draw(st.sampled_from(UNIT_PHASES))
    lam = phase * r
    assert f(a * lam).exact == abs(r) * f(a).exact
    assert f(a + b).exact <= f(a).exact + f(b).exact


# -- submultiplicativity -------------------------------------------------------


def test_trunc_monomials():
    for N in range(7):
        f = SF.trunc(N)
        pairs = [(qp({(a, 0): 1}), qp({(b, 0): 1})) for a in range(9) for b in range(9)]
        assert check_submultiplicative(f, pairs).passed


def test_zero_pair():
    for f in FAMILIES:
        zero = qp({})
        assert check_submultiplicative(f, [(zero, qp({(1, 0): 3}))]).passed


def test_envelope_square_of_xy():
    xy = qp({(1, 1): 1})
    report = check_submultiplicative(SF.envelope(2, HALF), [(xy, xy)])
    assert report.passed
    assert (report.checks[0].lhs, report.checks[0].rhs) == ("2", "4")


def _random_pairs(rng, one_variable, q, count=200):
    def el():
        return qp({(rng.randint(0, 5), 0 if one_variable else rng.randint(0, 5)):
                   Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)}, q)
    return [(el(), el()) for _ in range(count)]


@pytest.mark.parametrize("N", range(7))
def test_trunc_submultiplicative_random(N):
    pairs = _random_pairs(random.Random(N), True, HALF)
    assert check_submultiplicative(SF.trunc(N), pairs).passed


@pytest.mark.parametrize("rho", [HALF, Fraction(1), Fraction(2)], ids=str)
@pytest.mark.parametrize("abs_q", [HALF, Fraction(3, 4)], ids=str)
@pytest.mark.parametrize("sign", [1, -1])
def test_envelope_submultiplicative_random(rho, abs_q, sign):
    pairs = _random_pairs(random.Random(7), False, sign * abs_q)
    assert check_submultiplicative(SF.envelope(rho, abs_q), pairs).passed


def test_envelope_fails_for_large_modulus():
    # with |q| > 1 the envelope weights no longer dominate the product
    x, y = qp({(1, 0): 1}, 2), qp({(0, 1): 1}, 2)
    assert not check_submultiplicative(SF.envelope(1, 2), [(x, y)]).passed


def test_inexact_input_raises():
    a = qp({(1, 0): Scalar(1, 1)})
    with pytest.raises(InexactNormError):
        check_submultiplicative(SF.envelope(1, HALF), [(a, a)])


# -- monotonicity --------------------------------------------------------------


@given(elements(False), st.integers(0, 5), st.integers(0, 5),
       st.fractions(min_value=Fraction(1, 10), max_value=4, max_denominator=10),
       st.fractions(min_value=Fraction(1, 10), max_value=4, max_denominator=10))
def test_monotone_in_parameters(a, N1, N2, r1, r2):
    (N1, N2), (r1, r2) = sorted((N1, N2)), sorted((r1, r2))
    assert SF.mixed(r1, N1)(a).exact <= SF.mixed(r1, N2)(a).exact
    assert SF.mixed(r1, N1)(a).exact <= SF.mixed(r2, N1)(a).exact
    assert SF.envelope(r1, HALF)(a).exact <= SF.envelope(r2, HALF)(a).exact


# -- stability scans ---------------------------------------------------------------


def test_trunc_scan_bounded():
    scan = stability_scan(q_dilation(HALF), SF.trunc(3), L(1), 8)
    assert str(scan.verdict) == "UniformlyBounded(8)"
    assert scan.per_degree[:4] == [(0, 1), (1, 2), (2, 4), (3, 8)]
    assert all(c == "unconstrained" for _, c in scan.per_degree[4:])


def test_unit_scan():
    scan = stability_scan(q_dilation(HALF), SF.weighted(1), L(0), 8)
    assert (scan.verdict.kind, scan.verdict.value) == ("UniformlyBounded", 1)


def test_l1_scan_diverges_with_ratio_two():
    scan = stability_scan(q_dilation(HALF), SF.weighted(1), L(1), 10)
    assert (scan.verdict.kind, scan.verdict.value) == ("Diverges", 2)
    assert [c for _, c in scan.per_degree] == [2 ** n for n in range(11)]


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("N", [0, 2, 3])
def test_trunc_stable_under_every_delta(k, N):
    scan = stability_scan(q_dilation(HALF), SF.trunc(N), L(k), 9)
    assert (scan.verdict.kind, scan.verdict.value) == ("UniformlyBounded", 2 ** (k * N))


def test_scan_bounded_verdict_dominates_rows():
    for k in range(4):
        scan = stability_scan(q_dilation(Fraction(3)), SF.weighted(1), L(k), 8)
        assert scan.verdict.kind == "UniformlyBounded"
        assert all(c <= scan.verdict.value for _, c in scan.per_degree)


def test_scan_unbounded_degree():
    # mixed(N=0) sees only x^0, while the H4 action moves t onto 1
    scan = stability_scan(h4_on_dual_numbers(), SF.mixed(1, 0), L("x"), 1)
    assert scan.per_degree[1] == (1, "unbounded")
    assert str(scan.verdict) == "Diverges(?)"


# -- witness ------------------------------------------------------------------------


def test_witness_example_table():
    table = witness_divergence(HALF, 1, 3, 6)
    assert [table.mixed(D).exact for D in range(3, 7)] == [531] * 4
    assert table.envelope(5).exact >= 2 ** 25
    assert table.envelope(6).exact >= 2 ** 36


def test_witness_single_term():
    table = witness_divergence(HALF, 1, 3, 0)
    assert table.mixed(0).exact == table.envelope(0).exact == 1


def test_witness_without_mixed_room():
    table = witness_divergence(HALF, 1, 0, 7)
    assert all(table.mixed(D).exact == 1 for D in range(8))


def test_witness_needs_small_modulus():
    for bad in (1, 2, 0):
        with pytest.raises(ParameterError):
            witness_divergence(bad, 1, 3, 4)


@pytest.mark.parametrize("abs_q", [HALF, Fraction(2, 3), Fraction(9, 10)], ids=str)
@pytest.mark.parametrize("rho", [HALF, Fraction(1), Fraction(3)], ids=str)
@pytest.mark.parametrize("N", [0, 2, 4])
def test_witness_invariants(abs_q, rho, N):
    D_max = 9
    t = witness_divergence(abs_q, rho, N, D_max)
    env = [t.envelope(D).exact for D in range(D_max + 1)]
    assert all(t.mixed(D).exact == t.mixed(N).exact for D in range(N, D_max + 1))
    assert all(env[D] < env[D + 1] for D in range(D_max))
    new = [env[0]] + [env[D] - env[D - 1] for D in range(1, D_max + 1)]
    assert new == [abs_q ** (-D * D) * rho ** D for D in range(D_max + 1)]
    assert all(new[D] / new[D - 1] == abs_q ** -(2 * D - 1) * rho for D in range(1, D_max + 1))
    assert all(env[D] >= abs_q ** (-D * D) * rho ** D for D in range(D_max + 1))


def test_witness_column_ratio_is_not_the_term_ratio():
    t = witness_divergence(HALF, 1, 3, 3)
    assert t.envelope(2).exact / t.envelope(1).exact < 2 ** 3


def test_witness_element_is_one_variable():
    w = witness_element(HALF, 3)
    assert [m for m, _ in w.items()] == [(0, 0), (1, 0), (2, 0), (3, 0)]


def test_witness_text_table_is_aligned():
    lines = witness_divergence(HALF, 1, 3, 6).to_text().splitlines()
    assert len({len(line) for line in lines}) == 1
    assert lines[-1].split() == ["6", "531", "68753097235"]


# -- induced seminorms ---------------------------------------------------------------


def test_truncated_representation_is_multiplicative():
    for spec in (q_dilation(HALF, group=True), q_dilation(Fraction(2), group=True),
                 h4_on_dual_numbers()):
        phi = truncated_representation(spec, 5)
        rng = random.Random(9)
        for _ in range(40):
            u, v = random_smash_element(spec, rng), random_smash_element(spec, rng)
            assert matmul(phi(u), phi(v)) == phi(smash_mul(spec, u, v))


@pytest.mark.parametrize("q", [HALF, Fraction(2)], ids=str)
def test_induced_stability_grouplike(q):
    spec = q_dilation(q, group=True)
    report = verify_induced_stability(spec, range(-4, 5), range(9), N=8)
    assert report.passed
    assert len(report.checks) == 81


def test_induced_stability_h4():
    spec = h4_on_dual_numbers()
    report = verify_induced_stability(spec, ["1", "g", "x", "gx"], [0, 1], N=1)
    assert report.passed


def test_induced_norms_are_submultiplicative():
    spec = q_dilation(HALF, group=True)
    norm_a, norm_h = induced_seminorms(spec, 6)
    for m in range(7):
        for n in range(7):
            assert norm_a(L(m + n)).exact <= norm_a(L(m)).exact * norm_a(L(n)).exact
    for j in range(-3, 4):
        for k in range(-3, 4):
            assert norm_h(L(j + k)).exact <= norm_h(L(j)).exact * norm_h(L(k)).exact


@pytest.mark.parametrize("q,k", [(HALF, 1), (Fraction(2), -1)], ids=str)
def test_envelope_weights_are_not_induced(q, k):
    """The bare weights rho^n on A and rho^|k| on H do not satisfy the bound."""
    spec = q_dilation(q, group=True)
    norms = (SF.envelope(1, abs(q)), SF.weighted(1))
    report = verify_induced_stability(spec, [k], range(1, 4), N=3, norms=norms)
    assert not report.passed


def test_l1_over_any_basis():
    assert l1(LinComb({"x": -2, "gx": Scalar(0, 3)})).exact == 5
    assert evaluate(SF.weighted(1), LinComb({(1, 0): 2})).exact == 2
