"""
The smash product A # H
=======================

Products in ``A # H`` move ``h`` past ``a`` through the coproduct.  We compute
a few by hand-checkable examples, compare the two product routes, and
walk through the antipode identity chain for H4 acting on the dual numbers.
"""
import random
from fractions import Fraction

from smashkit.modalg import h4_on_dual_numbers, q_dilation
from smashkit.smash import (proof_identity, pure, random_smash_element, render, smash_mul,
                            smash_mul_composed, tau, verify_proof_identity)
from smashkit.kernel import LinComb

###############################################################################
# Dilations of C[x]
# -----------------
# With ``q = 1/2`` the group element ``d(1)`` doubles ``x``.

spec = q_dilation(Fraction(1, 2))
u = pure(spec, 1, 1)
print("(x # d(1))^2 =", render(spec, smash_mul(spec, u, u)))
print("tau(d(1), x) =", render(spec, tau(spec, LinComb.basis(1), LinComb.basis(1))))

###############################################################################
# H4 on the dual numbers
# ----------------------
# ``g`` flips the sign of ``t`` and ``x`` sends ``t`` to ``1``.

h4 = h4_on_dual_numbers()
print("tau(x, t)    =", render(h4, tau(h4, LinComb.basis("x"), LinComb.basis(1))))

###############################################################################
# Two routes to one product
# -------------------------
# The Sweedler formula and the composite of tensor maps agree.

rng = random.Random(0)
agree = all(smash_mul(h4, a, b) == smash_mul_composed(h4, a, b)
            for a, b in ((random_smash_element(h4, rng), random_smash_element(h4, rng))
                         for _ in range(50)))
print("product routes agree on 50 random pairs:", agree)

###############################################################################
# The identity chain
# ------------------
# ``(h·a) ⊗ 1`` is rewritten through the counit, the antipode, tau and the
# commutation rule.  Each step is checked on its own.

print(proof_identity(h4, "x", 1).to_text())
print(verify_proof_identity(h4).summary())

###############################################################################
# Without an antipode the chain cannot even be written down.

try:
    proof_identity(spec, 1, 1)
except Exception as exc:
    print(type(exc).__name__ + ":", exc)
