"""
Hopf algebras on basis labels
=============================

Three small structures drive everything else: the group algebra of Z, the
semigroup algebra of Z+ (a bialgebra with no antipode) and Sweedler's
four-dimensional Hopf algebra H4, which is not cocommutative.
"""
from smashkit.hopf import (group_z, semigroup_zplus, sweedler, sweedler_h4, verify_cocommutative,
                           verify_hopf)
from smashkit.kernel import LinComb

###############################################################################
# Coproducts
# ----------
# Group elements are grouplike.  In H4 the skew-primitive ``x`` splits into
# two summands, and the iterated coproduct has three.

Z, H4 = group_z(), sweedler_h4()
print("Δ d(1) =", Z.algebra.render_tensor(Z.comul(LinComb.basis(1))))
print("Δ x    =", H4.algebra.render_tensor(sweedler(H4, LinComb.basis("x")).terms))
print("Δ² x   =", sweedler(H4, LinComb.basis("x"), order=2).terms.render(" ⊗ ".join))

###############################################################################
# Axioms
# ------
# Each family is checked exactly.  Z+ passes the bialgebra checks and only
# notes that it has no antipode.

for spec in (Z, semigroup_zplus(), H4):
    print(verify_hopf(spec, depth=4).to_text())
    print()

###############################################################################
# Cocommutativity
# ---------------
# The flip of Δx differs from Δx, which is why H4 is the interesting case.

for check in verify_cocommutative(H4).failures:
    print(f"flip(Δ{check.labels[0]}) = {check.lhs}  but  Δ{check.labels[0]} = {check.rhs}")
