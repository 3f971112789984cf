"""
The quantum plane
=================

Words in ``x`` and ``y`` reduce to ``x^i y^j`` with ``yx -> q^{-1} xy``.  The
resulting algebra is the smash product of C[x] with the semigroup Z+.
"""
import random
from fractions import Fraction

from smashkit.kernel import LinComb
from smashkit.qplane import (QPlaneElement, all_normal_forms, from_smash, normalize,
                             random_element, smash_spec, to_smash)
from smashkit.smash import smash_mul

q = Fraction(1, 2)

###############################################################################
# Normal forms
# ------------
# Every rewrite order reaches the same monomial; the exponent of ``q^{-1}``
# counts inversions.

for word in ("xy", "yx", "yxyx", "yyxx"):
    print(f"{word:>5} -> {normalize(word, q)}   reachable: {len(all_normal_forms(word, q))}")

print("xy - q yx ->", normalize(LinComb({"xy": 1, "yx": -q}), q))

###############################################################################
# The identification
# ------------------
# ``x^i y^j`` corresponds to ``x^i # d(j)``, and the products match.

spec = smash_spec(q)
xy = QPlaneElement.monomial(1, 1, q)
print("(xy)(xy) in the plane :", xy * xy)
print("(xy)(xy) via A # H    :", from_smash(smash_mul(spec, to_smash(xy), to_smash(xy)), spec))

rng = random.Random(1)
pairs = [(random_element(rng, q), random_element(rng, q)) for _ in range(100)]
print("agree on 100 random pairs:",
      all(from_smash(smash_mul(spec, to_smash(u), to_smash(v)), spec) == u * v
          for u, v in pairs))
