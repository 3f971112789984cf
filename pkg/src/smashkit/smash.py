"""The smash product ``A # H`` of a module algebra by a bialgebra.

Elements are :class:`~smashkit.kernel.LinComb` objects over label pairs
``(a, h)`` standing for ``a ⊗ h``.  The product

    (a ⊗ h)(a' ⊗ h') = sum (a (h1 · a')) ⊗ h2 h'

is implemented twice: directly from the Sweedler formula (:func:`smash_mul`)
and as the composite ``(μ_A ⊗ μ_H)(id ⊗ τ ⊗ id)`` of elementary tensor maps
(:func:`smash_mul_composed`), so the two can be tested against each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .hopf import require_antipode, sweedler
from .kernel import (
    InexactNormError,
    LinComb,
    Scalar,
    bilinear_extend,
    lin_sum,
    multilinear_extend,
    tensor,
)
from .modalg import ModuleAlgebraSpec, act
from .report import Report

SmashElement = LinComb


def embed_a(spec: ModuleAlgebraSpec, a: LinComb) -> SmashElement:
    """``a ↦ a ⊗ 1``."""
    return tensor(a, spec.hopf.one())


def embed_h(spec: ModuleAlgebraSpec, h: LinComb) -> SmashElement:
    """``h ↦ 1 ⊗ h``."""
    return tensor(spec.algebra.one(), h)


def smash_one(spec: ModuleAlgebraSpec) -> SmashElement:
    return tensor(spec.algebra.one(), spec.hopf.one())


def pure(spec: ModuleAlgebraSpec, a, h, coeff=1) -> SmashElement:
    """The basis tensor ``coeff * (a ⊗ h)`` from raw labels."""
    return tensor(spec.algebra.basis(a), spec.hopf.algebra.basis(h)).scale(coeff)


def render(spec: ModuleAlgebraSpec, u: SmashElement) -> str:
    fa = spec.algebra.format_label
    fh = spec.hopf.algebra.format_label
    return u.render(lambda p: f"{fa(p[0])} # {fh(p[1])}")


def tau(spec: ModuleAlgebraSpec, h: LinComb, a: LinComb) -> SmashElement:
    """``τ(h ⊗ a) = sum (h1 · a) ⊗ h2``."""
    delta = sweedler(spec.hopf, h).terms
    return lin_sum(
        c * tensor(act(spec, LinComb.basis(h1), a), LinComb.basis(h2))
        for (h1, h2), c in delta.items()
    )


def smash_mul(spec: ModuleAlgebraSpec, u: SmashElement, v: SmashElement) -> SmashElement:
    """Product in ``A # H`` from the Sweedler formula, extended bilinearly."""
    A, H = spec.algebra, spec.hopf

    def on_pairs(p, r):
        (a, h), (a2, h2) = p, r
        out = []
        for (h1, hh), c in H.comul_basis(h).items():
            left = A.mul(LinComb.basis(a), act(spec, LinComb.basis(h1), LinComb.basis(a2)))
            right = H.algebra.mul_basis(hh, h2)
            out.append(c * tensor(left, right))
        return lin_sum(out)

    return bilinear_extend(on_pairs, u, v)


def smash_product(spec: ModuleAlgebraSpec, *factors: SmashElement) -> SmashElement:
    result = smash_one(spec)
    for f in factors:
        result = smash_mul(spec, result, f)
    return result


def _apply(f: Callable, t: LinComb) -> LinComb:
    return multilinear_extend(f, t)


def smash_mul_composed(spec: ModuleAlgebraSpec, u: SmashElement,
                       v: SmashElement) -> SmashElement:
    """Product in ``A # H`` as a composite of elementary tensor maps.

    ``A⊗H⊗A⊗H --id⊗Δ⊗id⊗id--> A⊗H⊗H⊗A⊗H --flip--> A⊗H⊗A⊗H⊗H
    --id⊗act⊗id⊗id--> A⊗A⊗H⊗H --μ_A⊗μ_H--> A⊗H``.
    Independent of :func:`smash_mul` except for the structure maps themselves.
    """
    A, H = spec.algebra, spec.hopf
    t = tensor(u, v).map_labels(lambda pr: pr[0] + pr[1])
    t = _apply(lambda l: LinComb(((l[0], x, y, l[2], l[3]), c)
                                 for (x, y), c in H.comul_basis(l[1]).items()), t)
    t = t.map_labels(lambda l: (l[0], l[1], l[3], l[2], l[4]))
    t = _apply(lambda l: LinComb(((l[0], b, l[3], l[4]), c)
                                 for b, c in spec.action_basis(l[1], l[2]).items()), t)
    return _apply(lambda l: tensor(A.mul_basis(l[0], l[1]), H.algebra.mul_basis(l[2], l[3])), t)


# -- verification ----------------------------------------------------------


def verify_embeddings(spec: ModuleAlgebraSpec, samples: Iterable | None = None,
                      depth: int = 3) -> Report:
    """Check the factorization identities of the smash product.

    ``samples`` holds ``(a, h, a', h')`` label tuples.  Checked per sample:
    ``(a⊗1)(a'⊗h') = aa'⊗h'``, ``(a⊗h)(1⊗h') = a⊗hh'``,
    ``(1⊗h)(a⊗1) = τ(h⊗a)``, and multiplicativity of both embeddings.
    """
    A, H = spec.algebra, spec.hopf
    if samples is None:
        As, Hs = A.basis_sample(depth), H.algebra.basis_sample(depth)
        samples = [(a, h, a2, h2) for a in As for h in Hs for a2 in As for h2 in Hs]
    report = Report(spec.name)
    show = lambda u: render(spec, u)  # noqa: E731
    fa, fh = A.format_label, H.algebra.format_label
    for a, h, a2, h2 in samples:
        ea, eh = LinComb.basis(a), LinComb.basis(h)
        ea2, eh2 = LinComb.basis(a2), LinComb.basis(h2)
        report.record("left-a-factor", [fa(a), fa(a2), fh(h2)],
                      smash_mul(spec, embed_a(spec, ea), tensor(ea2, eh2)),
                      tensor(A.mul(ea, ea2), eh2), show)
        report.record("right-h-factor", [fa(a), fh(h), fh(h2)],
                      smash_mul(spec, tensor(ea, eh), embed_h(spec, eh2)),
                      tensor(ea, H.mul(eh, eh2)), show)
        report.record("commutation-tau", [fh(h), fa(a)],
                      smash_mul(spec, embed_h(spec, eh), embed_a(spec, ea)),
                      tau(spec, eh, ea), show)
        report.record("embed-a-mult", [fa(a), fa(a2)],
                      smash_mul(spec, embed_a(spec, ea), embed_a(spec, ea2)),
                      embed_a(spec, A.mul(ea, ea2)), show)
        report.record("embed-h-mult", [fh(h), fh(h2)],
                      smash_mul(spec, embed_h(spec, eh), embed_h(spec, eh2)),
                      embed_h(spec, H.mul(eh, eh2)), show)
    return report


def verify_associativity(spec: ModuleAlgebraSpec, triples: Iterable) -> Report:
    report = Report(spec.name)
    show = lambda u: render(spec, u)  # noqa: E731
    for u, v, w in triples:
        left = smash_mul(spec, smash_mul(spec, u, v), w)
        right = smash_mul(spec, u, smash_mul(spec, v, w))
        report.record("smash-assoc", [show(u), show(v), show(w)], left, right, show)
    return report


def verify_product_forms(spec: ModuleAlgebraSpec, pairs: Iterable) -> Report:
    """Differential check: Sweedler-form product vs. composite-map product."""
    report = Report(spec.name)
    show = lambda u: render(spec, u)  # noqa: E731
    for u, v in pairs:
        report.record("product-forms", [show(u), show(v)], smash_mul(spec, u, v),
                      smash_mul_composed(spec, u, v), show)
    return report


def proof_identity(spec: ModuleAlgebraSpec, h, a) -> Report:
    """Verify the antipode identity chain for basis labels ``h``, ``a``:

        (h·a) ⊗ 1 = sum (h1·a) ⊗ ε(h2) 1
                  = sum (h1·a) ⊗ h2 S(h3)
                  = sum τ(h1 ⊗ a) (1 ⊗ S(h2))
                  = sum (1 ⊗ h1)(a ⊗ 1)(1 ⊗ S(h2))

    Each adjacent equality is its own check (``counit-step``,
    ``antipode-step``, ``tau-step``, ``commutation-step``), plus
    ``chain-ends`` for the outer two.  Raises
    :class:`~smashkit.hopf.NoAntipodeError` when ``H`` has no antipode.
    """
    H = require_antipode(spec.hopf)
    A = spec.algebra
    hb, ab = H.algebra.basis(h), A.basis(a)
    one_h = H.one()
    delta = sweedler(H, hb, 1).terms
    triple = sweedler(H, hb, 2).terms

    def S(label):
        return H.antipode(LinComb.basis(label))

    def act_on_a(label):
        return act(spec, LinComb.basis(label), ab)

    e0 = tensor(act(spec, hb, ab), one_h)
    e1 = lin_sum(
        (c * H.counit_basis(h2)) * tensor(act_on_a(h1), one_h)
        for (h1, h2), c in delta.items()
    )
    e2 = lin_sum(
        c * tensor(act_on_a(h1), H.mul(LinComb.basis(h2), S(h3)))
        for (h1, h2, h3), c in triple.items()
    )
    e3 = lin_sum(
        c * smash_mul(spec, tau(spec, LinComb.basis(h1), ab), embed_h(spec, S(h2)))
        for (h1, h2), c in delta.items()
    )
    e4 = lin_sum(
        c * smash_product(spec, embed_h(spec, LinComb.basis(h1)), embed_a(spec, ab),
                          embed_h(spec, S(h2)))
        for (h1, h2), c in delta.items()
    )
    labels = [H.algebra.format_label(h), A.format_label(a)]
    show = lambda u: render(spec, u)  # noqa: E731
    report = Report(spec.name)
    report.record("counit-step", labels, e0, e1, show)
    report.record("antipode-step", labels, e1, e2, show)
    report.record("tau-step", labels, e2, e3, show)
    report.record("commutation-step", labels, e3, e4, show)
    report.record("chain-ends", labels, e0, e4, show)
    return report


def verify_proof_identity(spec: ModuleAlgebraSpec, h_depth: int = 5,
                          a_depth: int = 8) -> Report:
    """:func:`proof_identity` over the bounded basis samples of H and A."""
    require_antipode(spec.hopf)
    report = Report(spec.name)
    for h in spec.hopf.algebra.basis_sample(h_depth):
        for a in spec.algebra.basis_sample(a_depth):
            report.extend(proof_identity(spec, h, a))
    return report


# -- the stability constant ------------------------------------------------


def exact_value(v) -> Fraction:
    """Extract an exact rational from a number or a norm value."""
    if hasattr(v, "exact"):
        if v.exact is None:
            raise InexactNormError(f"norm value {v} is not exactly representable")
        return v.exact
    return Fraction(v)


@dataclass(frozen=True)
class StabilityConstant:
    value: Fraction
    summands: tuple[tuple[Fraction, Fraction], ...]


def stability_constant(spec: ModuleAlgebraSpec, h: LinComb,
                       norm_h: Callable[[LinComb], object]) -> StabilityConstant:
    """``C = sum ||h1|| ||S(h2)||`` over the Sweedler summands of ``h``.

    The scalar coefficient of each summand is kept with its left leg; with
    the presets' canonical coproducts the decomposition is deterministic.
    """
    H = require_antipode(spec.hopf)
    summands = []
    for (h1, h2), c in sweedler(H, h).terms.items():
        left = exact_value(norm_h(LinComb.basis(h1, c)))
        right = exact_value(norm_h(H.antipode(LinComb.basis(h2))))
        summands.append((left, right))
    return StabilityConstant(sum((l * r for l, r in summands), Fraction(0)), tuple(summands))


# -- random elements and JSON ---------------------------------------------


def random_scalar(rng: random.Random, gaussian: bool = False) -> Scalar:
    re = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if gaussian else 0
    return Scalar(re, im)


def random_smash_element(spec: ModuleAlgebraSpec, rng: random.Random, terms: int = 3,
                         depth: int = 3, gaussian: bool = False) -> SmashElement:
    As = spec.algebra.basis_sample(depth)
    Hs = spec.hopf.algebra.basis_sample(depth)
    return LinComb(
        ((rng.choice(As), rng.choice(Hs)), random_scalar(rng, gaussian))
        for _ in range(rng.randint(1, terms))
    )


def _label_json(b):
    return list(b) if isinstance(b, tuple) else b


def _label_from_json(b):
    return tuple(b) if isinstance(b, list) else b


def to_json(u: SmashElement) -> dict:
    return {
        "schema": 1,
        "terms": [
            {"coeff": c.to_json(), "a": _label_json(a), "h": _label_json(h)}
            for (a, h), c in u.items()
        ],
    }


def from_json(data: dict) -> SmashElement:
    return LinComb(
        ((_label_from_json(t["a"]), _label_from_json(t["h"])), Scalar.from_json(t["coeff"]))
        for t in data["terms"]
    )
