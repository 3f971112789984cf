"""
Seminorms, stability and the divergence witness
===============================================

A seminorm on C[x] is H-stable when each ``d(k)`` is bounded for it.  The
truncated norms are stable, the plain l1 norm is not, and over the quantum
plane a single element separates the mixed norms from the envelope norms.
"""
from fractions import Fraction

from smashkit.kernel import LinComb
from smashkit.modalg import q_dilation
from smashkit.seminorm import (SeminormFamily, stability_scan, verify_induced_stability,
                               witness_divergence)

half = Fraction(1, 2)
spec = q_dilation(half)

###############################################################################
# Stability scans
# ---------------
# ``d(1)`` multiplies ``x^n`` by ``2^n``.  The truncation at N = 3 forgets
# everything above degree 3, so the constant stays at 8.

print(stability_scan(spec, SeminormFamily.trunc(3), LinComb.basis(1), 6).to_text())
print()
print(stability_scan(spec, SeminormFamily.weighted(1), LinComb.basis(1), 6).to_text())

###############################################################################
# The witness
# -----------
# Partial sums of ``sum 2^{i^2} x^i`` are constant for the mixed norm once
# D reaches N, while the envelope norm explodes.

print()
print(witness_divergence(half, 1, 3, 6).to_text())

###############################################################################
# With an antipode
# ----------------
# Over the group Z the induced seminorms of a concrete representation obey
# the bound ``||h·a|| <= C ||a||`` for both small and large ``|q|``.

for q in (half, Fraction(2)):
    report = verify_induced_stability(q_dilation(q, group=True), range(-4, 5), range(9), N=8)
    print(f"|q| = {q}:", "bound holds" if report.passed else "bound FAILS",
          f"({len(report.checks)} checks)")
