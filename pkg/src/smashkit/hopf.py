"""Algebras, bialgebras and Hopf algebras given on basis labels.

Every structure map is a Python function on basis labels returning a
:class:`~smashkit.kernel.LinComb`; :mod:`smashkit.kernel` extends it
(bi)linearly.  The verifiers check the coalgebra, bialgebra and antipode axioms
exactly on finite label sets and return a :class:`~smashkit.report.Report`.

Three presets are provided:

``GroupZ``
    the group algebra of the integers, ``d(a) d(b) = d(a+b)``, grouplike
    comultiplication, antipode ``d(k) -> d(-k)``.
``SemigroupZplus``
    the same formulas on ``k >= 0``; a bialgebra with no antipode.
``SweedlerH4``
    Sweedler's four-dimensional Hopf algebra on ``{1, g, x, gx}``, which is
    neither commutative nor cocommutative.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .kernel import (
    ONE,
    AlgebraError,
    LinComb,
    Scalar,
    UndefinedOnBasis,
    bilinear_extend,
    lin_sum,
    linear_extend,
    multilinear_extend,
    tensor,
    tensor_mul,
)
from .report import Report

DEFAULT_DEPTH = 6


class NoAntipodeError(AlgebraError):
    """Raised when an antipode is requested from a bialgebra that has none."""


@dataclass(frozen=True)
class AlgebraSpec:
    """A unital algebra described by its product on basis labels.

    ``basis_sample(D)`` lists the labels of "size" at most ``D`` and is what
    the bounded-exhaustive verifiers iterate over.  ``generators`` maps the
    single-letter names accepted by the expression parser to basis labels.
    """

    name: str
    mul_basis: Callable[[Any, Any], LinComb]
    unit: LinComb
    basis_sample: Callable[[int], list]
    format_label: Callable[[Any], str] = str
    contains: Callable[[Any], bool] = lambda b: True
    generators: dict = field(default_factory=dict)

    def mul(self, u: LinComb, v: LinComb) -> LinComb:
        return bilinear_extend(self._checked_mul, u, v)

    def _checked_mul(self, a, b):
        for lab in (a, b):
            if not self.contains(lab):
                raise UndefinedOnBasis((a, b), f"{lab!r} is not a basis label of {self.name}")
        return self.mul_basis(a, b)

    def one(self) -> LinComb:
        return self.unit

    def power(self, u: LinComb, n: int) -> LinComb:
        result, base = self.unit, u
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def basis(self, label) -> LinComb:
        if not self.contains(label):
            raise UndefinedOnBasis((label,), f"not a basis label of {self.name}")
        return LinComb.basis(label)

    def render(self, u: LinComb) -> str:
        return u.render(self.format_label)

    def render_tensor(self, u: LinComb) -> str:
        return u.render(lambda t: " ⊗ ".join(self.format_label(b) for b in t))


@dataclass(frozen=True)
class BialgebraSpec:
    algebra: AlgebraSpec
    comul_basis: Callable[[Any], LinComb]
    counit_basis: Callable[[Any], Scalar]

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def has_antipode(self) -> bool:
        return False

    def mul(self, u: LinComb, v: LinComb) -> LinComb:
        return self.algebra.mul(u, v)

    def one(self) -> LinComb:
        return self.algebra.unit

    def comul(self, h: LinComb) -> LinComb:
        """Coproduct; the result is a LinComb over label pairs."""
        return linear_extend(self.comul_basis, h)

    def counit(self, h: LinComb) -> Scalar:
        total = Scalar(0)
        for b, c in h.items():
            total = total + c * Scalar.coerce(self.counit_basis(b))
        return total

    def antipode(self, h: LinComb) -> LinComb:
        raise NoAntipodeError(f"no antipode: {self.name} is a bialgebra without an antipode")

    def tensor_mul(self, u: LinComb, v: LinComb) -> LinComb:
        """Product in H ⊗ H ⊗ ... (arity read off the labels)."""
        arity = len(next(iter(u))) if u else 2
        return tensor_mul((self.algebra.mul_basis,) * arity, u, v)


@dataclass(frozen=True)
class HopfSpec(BialgebraSpec):
    antipode_basis: Callable[[Any], LinComb] = None

    @property
    def has_antipode(self) -> bool:
        return True

    def antipode(self, h: LinComb) -> LinComb:
        return linear_extend(self.antipode_basis, h)


def require_antipode(spec: BialgebraSpec) -> HopfSpec:
    if not spec.has_antipode:
        raise NoAntipodeError(f"no antipode: {spec.name} is a bialgebra without an antipode")
    return spec


# -- Sweedler expansions ---------------------------------------------------


@dataclass(frozen=True)
class SweedlerExpansion:
    """Iterated coproduct of an element, as a LinComb over label tuples."""

    terms: LinComb

    @property
    def summands(self) -> list[tuple]:
        """``[(coeff, h1, h2[, h3]), ...]`` in label order."""
        return [(c, *labels) for labels, c in self.terms.items()]

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.terms)


def _comul_left(spec: BialgebraSpec, t: LinComb) -> LinComb:
    """(Δ ⊗ id) applied to a LinComb over pairs; result over triples."""
    def f(p):
        return LinComb((pq + p[1:], c) for pq, c in spec.comul_basis(p[0]).items())
    return multilinear_extend(f, t)


def _comul_right(spec: BialgebraSpec, t: LinComb) -> LinComb:
    """(id ⊗ Δ) applied to a LinComb over pairs; result over triples."""
    def f(p):
        return LinComb((p[:1] + pq, c) for pq, c in spec.comul_basis(p[1]).items())
    return multilinear_extend(f, t)


def sweedler(spec: BialgebraSpec, h: LinComb, order: int = 1) -> SweedlerExpansion:
    """Sweedler expansion of ``h``: Δh for ``order=1``, the twofold coproduct
    for ``order=2``.

    For ``order=2`` both bracketings are computed and must agree; a
    non-coassociative spec raises :class:`AlgebraError`.
    """
    delta = spec.comul(h)
    if order == 1:
        return SweedlerExpansion(delta)
    if order != 2:
        raise ValueError("order must be 1 or 2")
    left = _comul_left(spec, delta)
    right = _comul_right(spec, delta)
    if left != right:
        raise AlgebraError(
            f"{spec.name} is not coassociative on {spec.algebra.render(h)}"
        )
    return SweedlerExpansion(left)


# -- verifiers -------------------------------------------------------------


def _labels(spec: BialgebraSpec, labels, depth):
    return list(labels) if labels is not None else spec.algebra.basis_sample(depth)


def verify_coalgebra(spec: BialgebraSpec, labels: Iterable | None = None,
                     depth: int = DEFAULT_DEPTH) -> Report:
    """Coassociativity and both counit laws on each basis label."""
    alg = spec.algebra
    report = Report(spec.name)
    for b in _labels(spec, labels, depth):
        hb = LinComb.basis(b)
        delta = spec.comul(hb)
        report.record("coassociativity", [alg.format_label(b)],
                      _comul_left(spec, delta), _comul_right(spec, delta),
                      alg.render_tensor)
        eps_id = lin_sum(
            LinComb.basis(p[1], c * spec.counit_basis(p[0])) for p, c in delta.items()
        )
        id_eps = lin_sum(
            LinComb.basis(p[0], c * spec.counit_basis(p[1])) for p, c in delta.items()
        )
        report.record("counit-left", [alg.format_label(b)], eps_id, hb, alg.render)
        report.record("counit-right", [alg.format_label(b)], id_eps, hb, alg.render)
    return report


def verify_bialgebra(spec: BialgebraSpec, pairs: Iterable | None = None,
                     depth: int = DEFAULT_DEPTH) -> Report:
    """Δ and ε are unital and multiplicative on each pair of basis labels."""
    alg = spec.algebra
    report = Report(spec.name)
    if pairs is None:
        sample = alg.basis_sample(depth)
        pairs = [(a, b) for a in sample for b in sample]
    one = spec.one()
    report.record("comul-unit", ["1"], spec.comul(one), tensor(one, one),
                  alg.render_tensor)
    report.record("counit-unit", ["1"], spec.counit(one), ONE)
    for a, b in pairs:
        ha, hb = LinComb.basis(a), LinComb.basis(b)
        names = [alg.format_label(a), alg.format_label(b)]
        prod = alg.mul(ha, hb)
        report.record("comul-mult", names, spec.comul(prod),
                      spec.tensor_mul(spec.comul(ha), spec.comul(hb)),
                      alg.render_tensor)
        report.record("counit-mult", names, spec.counit(prod),
                      spec.counit(ha) * spec.counit(hb))
    return report


def verify_antipode(spec: BialgebraSpec, labels: Iterable | None = None,
                    depth: int = DEFAULT_DEPTH) -> Report:
    """``S(h1) h2 = ε(h) 1 = h1 S(h2)`` on each basis label."""
    require_antipode(spec)
    alg = spec.algebra
    report = Report(spec.name)
    for b in _labels(spec, labels, depth):
        hb = LinComb.basis(b)
        expected = spec.counit(hb) * spec.one()
        delta = spec.comul(hb)
        left = lin_sum(
            c * alg.mul(spec.antipode(LinComb.basis(p[0])), LinComb.basis(p[1]))
            for p, c in delta.items()
        )
        right = lin_sum(
            c * alg.mul(LinComb.basis(p[0]), spec.antipode(LinComb.basis(p[1])))
            for p, c in delta.items()
        )
        report.record("antipode-left", [alg.format_label(b)], left, expected, alg.render)
        report.record("antipode-right", [alg.format_label(b)], right, expected, alg.render)
    return report


def verify_cocommutative(spec: BialgebraSpec, labels: Iterable | None = None,
                         depth: int = DEFAULT_DEPTH) -> Report:
    alg = spec.algebra
    report = Report(spec.name)
    for b in _labels(spec, labels, depth):
        delta = spec.comul(LinComb.basis(b))
        flipped = delta.map_labels(lambda p: (p[1], p[0]))
        report.record("cocommutative", [alg.format_label(b)], flipped, delta,
                      alg.render_tensor)
    return report


def verify_hopf(spec: BialgebraSpec, depth: int = DEFAULT_DEPTH) -> Report:
    """Every applicable axiom family on the preset's bounded basis sample.

    For a bialgebra without antipode the antipode checks are skipped and the
    report carries a ``no antipode`` note.
    """
    report = Report(spec.name)
    report.extend(verify_coalgebra(spec, depth=depth))
    report.extend(verify_bialgebra(spec, depth=depth))
    if spec.has_antipode:
        report.extend(verify_antipode(spec, depth=depth))
    else:
        report.notes.append(f"no antipode: {spec.name} is a bialgebra only")
    return report


# -- presets ---------------------------------------------------------------


def _delta(k: int) -> str:
    return f"d({k})"


def _is_int(b) -> bool:
    return isinstance(b, int) and not isinstance(b, bool)


def _group_algebra(name, contains, sample) -> AlgebraSpec:
    return AlgebraSpec(
        name=name,
        mul_basis=lambda a, b: LinComb.basis(a + b),
        unit=LinComb.basis(0),
        basis_sample=sample,
        format_label=_delta,
        contains=contains,
    )


def _grouplike(k):
    return LinComb.basis((k, k))


@functools.lru_cache(maxsize=None)
def group_z() -> HopfSpec:
    alg = _group_algebra("GroupZ", _is_int, lambda d: list(range(-d, d + 1)))
    return HopfSpec(alg, _grouplike, lambda k: ONE, lambda k: LinComb.basis(-k))


@functools.lru_cache(maxsize=None)
def semigroup_zplus() -> BialgebraSpec:
    alg = _group_algebra("SemigroupZplus", lambda b: _is_int(b) and b >= 0,
                         lambda d: list(range(0, d + 1)))
    return BialgebraSpec(alg, _grouplike, lambda k: ONE)


H4_BASIS = ("1", "g", "x", "gx")


def h4_reduce(word: str) -> LinComb:
    """Rewrite a word in g, x with ``gg -> 1``, ``xx -> 0``, ``xg -> -gx``."""
    sign = 1
    w = "" if word == "1" else word
    if set(w) - {"g", "x"}:
        raise UndefinedOnBasis((word,), "H4 words use only g and x")
    while True:
        if "xx" in w:
            return LinComb.zero()
        if "gg" in w:
            w = w.replace("gg", "", 1)
        elif "xg" in w:
            w = w.replace("xg", "gx", 1)
            sign = -sign
        else:
            break
    return LinComb.basis(w or "1", sign)


def _h4_mul(a: str, b: str) -> LinComb:
    if a not in H4_BASIS or b not in H4_BASIS:
        raise UndefinedOnBasis((a, b), "not an H4 basis word")
    return h4_reduce(("" if a == "1" else a) + ("" if b == "1" else b))


_H4_COMUL = {
    "1": LinComb.basis(("1", "1")),
    "g": LinComb.basis(("g", "g")),
    "x": LinComb({("x", "1"): 1, ("g", "x"): 1}),
    "gx": LinComb({("gx", "g"): 1, ("1", "gx"): 1}),
}
_H4_COUNIT = {"1": ONE, "g": ONE, "x": Scalar(0), "gx": Scalar(0)}
_H4_ANTIPODE = {
    "1": LinComb.basis("1"),
    "g": LinComb.basis("g"),
    "x": LinComb.basis("gx", -1),
    "gx": LinComb.basis("x"),
}


@functools.lru_cache(maxsize=None)
def sweedler_h4() -> HopfSpec:
    alg = AlgebraSpec(
        name="SweedlerH4",
        mul_basis=_h4_mul,
        unit=LinComb.basis("1"),
        basis_sample=lambda d: list(H4_BASIS),
        contains=lambda b: b in H4_BASIS,
        generators={"g": "g", "x": "x"},
    )
    return HopfSpec(alg, _H4_COMUL.__getitem__, _H4_COUNIT.__getitem__,
                    _H4_ANTIPODE.__getitem__)


_PRESETS = {
    "groupz": group_z,
    "semigroupzplus": semigroup_zplus,
    "sweedlerh4": sweedler_h4,
    "h4": sweedler_h4,
}


def _key(name: str) -> str:
    return name.lower().replace("-", "").replace("_", "").replace("+", "plus")


def preset_hopf(name: str) -> BialgebraSpec:
    """Look up ``GroupZ``, ``SemigroupZplus`` or ``SweedlerH4`` (case and
    dashes ignored)."""
    try:
        return _PRESETS[_key(name)]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of "
                         "GroupZ, SemigroupZplus, SweedlerH4") from None
