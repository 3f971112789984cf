"""Module algebras over a bialgebra.

An action ``H ⊗ A -> A`` is stored on basis pairs and extended bilinearly.
``verify_module_algebra`` checks that the action is a unital module structure
and that the product and unit of ``A`` are module maps.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .hopf import (
    DEFAULT_DEPTH,
    AlgebraSpec,
    BialgebraSpec,
    _key,
    group_z,
    semigroup_zplus,
    sweedler_h4,
)
from .kernel import LinComb, ParameterError, Scalar, bilinear_extend, lin_sum
from .report import Report


def _monomial(n: int) -> str:
    if n == 0:
        return "1"
    return "x" if n == 1 else f"x^{n}"


@functools.lru_cache(maxsize=None)
def polynomial_algebra() -> AlgebraSpec:
    """C[x] with basis labels ``n`` standing for ``x^n``."""
    return AlgebraSpec(
        name="C[x]",
        mul_basis=lambda m, n: LinComb.basis(m + n),
        unit=LinComb.basis(0),
        basis_sample=lambda d: list(range(d + 1)),
        format_label=_monomial,
        contains=lambda n: isinstance(n, int) and n >= 0,
        generators={"x": 1},
    )


def _dual_mul(a: int, b: int) -> LinComb:
    return LinComb.basis(a + b) if a + b < 2 else LinComb.zero()


@functools.lru_cache(maxsize=None)
def dual_numbers() -> AlgebraSpec:
    """C[t]/(t^2) with labels 0 (the unit) and 1 (t)."""
    return AlgebraSpec(
        name="C[t]/(t^2)",
        mul_basis=_dual_mul,
        unit=LinComb.basis(0),
        basis_sample=lambda d: [0, 1],
        format_label=lambda b: "1" if b == 0 else "t",
        contains=lambda b: b in (0, 1),
        generators={"t": 1},
    )


@dataclass(frozen=True)
class ModuleAlgebraSpec:
    name: str
    hopf: BialgebraSpec
    algebra: AlgebraSpec
    action_basis: Callable[[Any, Any], LinComb]
    params: dict = field(default_factory=dict)

    def act(self, h: LinComb, a: LinComb) -> LinComb:
        return act(self, h, a)


def act(spec: ModuleAlgebraSpec, h: LinComb, a: LinComb) -> LinComb:
    """The action ``h · a``, bilinear in both arguments."""
    return bilinear_extend(spec.action_basis, h, a)


def _check_q(q) -> Scalar:
    if q is None:
        raise ParameterError("q-dilation presets need a parameter q")
    q = Scalar.coerce(q)
    if q.is_zero():
        raise ParameterError("q must be nonzero")
    return q


def q_dilation(q, group: bool = False) -> ModuleAlgebraSpec:
    """``C[x]`` with ``d(k) · x^n = q^(-k n) x^n``, i.e. ``(k·f)(x) = f(q^{-k} x)``.

    ``group=False`` uses the semigroup Z+ (a bialgebra), ``group=True`` the
    group Z (a Hopf algebra).
    """
    q = _check_q(q)
    hopf = group_z() if group else semigroup_zplus()
    qinv = q.inv()

    def action(k, n):
        if not hopf.algebra.contains(k):
            raise ValueError(f"{k!r} is not a basis label of {hopf.name}")
        return LinComb.basis(n, qinv ** (k * n))

    name = "QDilationZ" if group else "QDilationZplus"
    return ModuleAlgebraSpec(name, hopf, polynomial_algebra(), action, {"q": q})


_H4_DUAL_TABLE = {
    ("g", 0): LinComb.basis(0),
    ("g", 1): LinComb.basis(1, -1),
    ("x", 0): LinComb.zero(),
    ("x", 1): LinComb.basis(0),
}


def _h4_dual_action(h: str, a: int) -> LinComb:
    if h == "1":
        return LinComb.basis(a)
    if h == "gx":
        # (gx)·a := g·(x·a)
        inner = _H4_DUAL_TABLE[("x", a)]
        return lin_sum(c * _H4_DUAL_TABLE[("g", b)] for b, c in inner.items())
    return _H4_DUAL_TABLE[(h, a)]


@functools.lru_cache(maxsize=None)
def h4_on_dual_numbers() -> ModuleAlgebraSpec:
    """Sweedler's H4 acting on ``C[t]/(t^2)`` by ``g·t = -t``, ``x·t = 1``."""
    return ModuleAlgebraSpec("H4OnDualNumbers", sweedler_h4(), dual_numbers(),
                             _h4_dual_action)


def preset_module_algebra(name: str, q=None) -> ModuleAlgebraSpec:
    """``QDilationZplus``, ``QDilationZ`` (both need ``q``) or ``H4OnDualNumbers``."""
    key = _key(name)
    if key in ("qdilationzplus", "qdilation"):
        return q_dilation(q, group=False)
    if key == "qdilationz":
        return q_dilation(q, group=True)
    if key in ("h4ondualnumbers", "h4dual", "h4"):
        return h4_on_dual_numbers()
    raise ValueError(f"unknown module-algebra preset {name!r}; expected one of "
                     "QDilationZplus, QDilationZ, H4OnDualNumbers")


def default_samples(spec: ModuleAlgebraSpec, depth: int = DEFAULT_DEPTH) -> list[tuple]:
    hs = spec.hopf.algebra.basis_sample(depth)
    As = spec.algebra.basis_sample(depth)
    return list(itertools.product(hs, As, As))


def verify_module_algebra(spec: ModuleAlgebraSpec, samples: Iterable | None = None,
                          depth: int = DEFAULT_DEPTH) -> Report:
    """Module axioms and module-algebra axioms on ``(h, a, a')`` samples.

    ``module-assoc`` is checked for every ordered pair of H-labels occurring
    in the samples against every a-label.
    """
    samples = list(samples) if samples is not None else default_samples(spec, depth)
    H, A = spec.hopf, spec.algebra
    fh, fa = H.algebra.format_label, A.format_label
    report = Report(spec.name)

    def basis_act(h, a):
        return act(spec, LinComb.basis(h), LinComb.basis(a))

    h_labels = sorted({s[0] for s in samples}, key=repr)
    a_labels = sorted({s[1] for s in samples} | {s[2] for s in samples}, key=repr)

    for a in a_labels:
        report.record("module-unit", ["1", fa(a)], act(spec, H.one(), LinComb.basis(a)),
                      LinComb.basis(a), A.render)
    for h, h2, a in itertools.product(h_labels, h_labels, a_labels):
        prod = H.mul(LinComb.basis(h), LinComb.basis(h2))
        report.record("module-assoc", [fh(h), fh(h2), fa(a)],
                      act(spec, prod, LinComb.basis(a)),
                      act(spec, LinComb.basis(h), basis_act(h2, a)), A.render)
    for h in h_labels:
        hb = LinComb.basis(h)
        report.record("action-unit", [fh(h)], act(spec, hb, A.one()),
                      H.counit(hb) * A.one(), A.render)
    for h, a, a2 in samples:
        lhs = act(spec, LinComb.basis(h), A.mul(LinComb.basis(a), LinComb.basis(a2)))
        rhs = lin_sum(
            c * A.mul(basis_act(p[0], a), basis_act(p[1], a2))
            for p, c in H.comul(LinComb.basis(h)).items()
        )
        report.record("action-product", [fh(h), fa(a), fa(a2)], lhs, rhs, A.render)
    return report
