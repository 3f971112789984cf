from fractions import Fraction

from hypothesis import settings, strategies as st

from smashkit.kernel import LinComb, Scalar

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)


def lincombs(labels=st.sampled_from("abcde"), coeffs=scalars, max_size=5):
    return st.dictionaries(labels, coeffs, max_size=max_size).map(LinComb)


def half() -> Fraction:
    return Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
