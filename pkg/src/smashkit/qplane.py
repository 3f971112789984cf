"""The quantum plane ``C_q<x, y | xy = q yx>``.

Words over ``{x, y}`` are reduced with the single rule ``yx -> q^{-1} xy`` to
the PBW basis ``x^i y^j``.  Arithmetic on :class:`QPlaneElement` uses the
monomial rule ``(x^i y^j)(x^k y^l) = q^{-jk} x^{i+k} y^{j+l}``, which follows
from the rewrite rule (moving ``y^j`` past ``x^k`` costs ``jk`` swaps) and
is cross-checked against :func:`normalize` in the tests.

``to_smash``/``from_smash`` realize the vector-space identification
``x^i y^j <-> x^i ⊗ d(j)`` with ``C[x] # C[Z+]`` under the q-dilation
action, which turns out to be multiplicative.
"""

from __future__ import annotations

import functools
import random
from typing import Iterable

from .kernel import ONE, AlgebraError, LinComb, ParameterError, Scalar, bilinear_extend, lin_sum
from .modalg import ModuleAlgebraSpec, q_dilation
from .smash import SmashElement, random_scalar


class QMismatchError(AlgebraError, ValueError):
    """Two quantum-plane elements with different q were combined."""


def _check_q(q) -> Scalar:
    q = Scalar.coerce(q)
    if q.is_zero():
        raise ParameterError("q must be nonzero")
    return q


def format_monomial(label: tuple[int, int]) -> str:
    i, j = label
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) or "1"


class QPlaneElement:
    """An element ``sum c_ij x^i y^j`` of the quantum plane at parameter ``q``."""

    __slots__ = ("terms", "q")

    def __init__(self, terms: LinComb | dict | Iterable, q):
        object.__setattr__(self, "q", _check_q(q))
        if not isinstance(terms, LinComb):
            terms = LinComb(terms)
        for i, j in terms:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("QPlaneElement is immutable")

    @classmethod
    def monomial(cls, i: int, j: int, q, coeff=1) -> "QPlaneElement":
        return cls(LinComb.basis((i, j), coeff), q)

    @classmethod
    def one(cls, q) -> "QPlaneElement":
        return cls.monomial(0, 0, q)

    def _same_q(self, other: "QPlaneElement"):
        if self.q != other.q:
            raise QMismatchError(f"q mismatch: {self.q} vs {other.q}")

    def __add__(self, other):
        if not isinstance(other, QPlaneElement):
            return NotImplemented
        self._same_q(other)
        return QPlaneElement(self.terms + other.terms, self.q)

    def __sub__(self, other):
        if not isinstance(other, QPlaneElement):
            return NotImplemented
        self._same_q(other)
        return QPlaneElement(self.terms - other.terms, self.q)

    def __neg__(self):
        return QPlaneElement(-self.terms, self.q)

    def __mul__(self, other):
        if isinstance(other, QPlaneElement):
            return qplane_mul(self, other)
        try:
            return QPlaneElement(self.terms.scale(other), self.q)
        except TypeError:
            return NotImplemented

    def __rmul__(self, s):
        try:
            return QPlaneElement(self.terms.scale(s), self.q)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        result, base = QPlaneElement.one(self.q), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, QPlaneElement):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, self.terms))

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return self.terms.is_zero()

    def __str__(self):
        return self.terms.render(format_monomial)

    def __repr__(self):
        return f"QPlaneElement({self}, q={self.q})"


def qplane_mul(u: QPlaneElement, v: QPlaneElement) -> QPlaneElement:
    u._same_q(v)
    qinv = u.q.inv()

    def on_monomials(m, n):
        (i, j), (k, l) = m, n
        return LinComb.basis((i + k, j + l), qinv ** (j * k))

    return QPlaneElement(bilinear_extend(on_monomials, u.terms, v.terms), u.q)


# -- rewriting -------------------------------------------------------------


def _check_word(word: str) -> str:
    if set(word) - {"x", "y"}:
        raise ValueError(f"quantum-plane words use only x and y, got {word!r}")
    return word


def redexes(word: str) -> list[int]:
    """Positions ``p`` with ``word[p:p+2] == 'yx'``."""
    return [p for p in range(len(word) - 1) if word[p:p + 2] == "yx"]


def rewrite_at(word: str, p: int) -> str:
    """Apply ``yx -> xy`` at position ``p`` (the coefficient picks up ``q^{-1}``)."""
    if word[p:p + 2] != "yx":
        raise ValueError(f"no redex at position {p} of {word!r}")
    return word[:p] + "xy" + word[p + 2:]


def reduce_word(word: str, q, strategy: str = "leftmost",
                rng: random.Random | None = None) -> tuple[Scalar, tuple[int, int]]:
    """Rewrite ``word`` to normal form along one strategy.

    Returns ``(coefficient, (i, j))`` meaning ``coefficient * x^i y^j``.
    ``strategy`` is ``leftmost``, ``rightmost`` or ``random``.
    """
    qinv = _check_q(q).inv()
    w = _check_word("" if word == "1" else word)
    rng = rng or random.Random(0)
    coeff = ONE
    while True:
        spots = redexes(w)
        if not spots:
            break
        if strategy == "leftmost":
            p = spots[0]
        elif strategy == "rightmost":
            p = spots[-1]
        elif strategy == "random":
            p = rng.choice(spots)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        w = rewrite_at(w, p)
        coeff = coeff * qinv
    return coeff, (w.count("x"), w.count("y"))


def all_normal_forms(word: str, q) -> set[tuple[Scalar, tuple[int, int]]]:
    """Every ``(coefficient, monomial)`` reachable by some maximal rewrite
    sequence, found by exhaustive search.  A singleton means confluence."""
    qinv = _check_q(q).inv()
    _check_word(word)

    @functools.lru_cache(maxsize=None)
    def reach(w: str) -> frozenset:
        spots = redexes(w)
        if not spots:
            return frozenset({(0, w)})
        return frozenset((s + 1, nf) for p in spots for s, nf in reach(rewrite_at(w, p)))

    return {(qinv ** s, (nf.count("x"), nf.count("y"))) for s, nf in reach(word)}


def normalize(w: LinComb | str, q) -> QPlaneElement:
    """PBW normal form of a linear combination of words (or a single word)."""
    q = _check_q(q)
    if isinstance(w, str):
        w = LinComb.basis(w)
    out = []
    for word, c in w.items():
        coeff, mono = reduce_word(word, q)
        out.append(LinComb.basis(mono, c * coeff))
    return QPlaneElement(lin_sum(out), q)


# -- identification with the smash product --------------------------------


def smash_spec(q) -> ModuleAlgebraSpec:
    """The q-dilation module algebra over Z+ whose smash product is C_q[x, y]."""
    return q_dilation(q, group=False)


def to_smash(u: QPlaneElement) -> SmashElement:
    """``x^i y^j ↦ x^i ⊗ d(j)``."""
    return u.terms.map_labels(lambda m: (m[0], m[1]))


def from_smash(s: SmashElement, spec: ModuleAlgebraSpec) -> QPlaneElement:
    """Inverse of :func:`to_smash`; ``spec`` must be the Z+ q-dilation preset."""
    if spec.name != "QDilationZplus":
        raise ValueError(f"from_smash needs the QDilationZplus preset, got {spec.name}")
    return QPlaneElement(s.map_labels(lambda p: (p[0], p[1])), spec.params["q"])


def random_element(rng: random.Random, q, terms: int = 3, degree: int = 3,
                   gaussian: bool = False) -> QPlaneElement:
    return QPlaneElement(
        LinComb(((rng.randint(0, degree), rng.randint(0, degree)),
                 random_scalar(rng, gaussian)) for _ in range(rng.randint(1, terms))),
        q,
    )


def random_word(rng: random.Random, max_len: int = 8) -> str:
    return "".join(rng.choice("xy") for _ in range(rng.randint(0, max_len)))
