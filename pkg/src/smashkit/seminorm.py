"""Weighted l1 seminorms, H-stability scans and the divergence witness.

Four families are evaluated exactly on finitely supported elements:

========== ============================================ =====================
kind       value                                        on
========== ============================================ =====================
trunc      ``sum_{i<=N} |c_i|``                         C[x]
envelope   ``sum |c_ij| |q|^(ij) rho^(i+j)``             C_q[x, y] (and C[x])
mixed      ``sum_{i<=N} sum_j |c_ij| rho^j``             C_q[x, y] (and C[x])
weighted   ``sum |c_k| rho^|k|``                         C[x], C[Z]
========== ============================================ =====================

``|q|`` and ``rho`` are exact positive rationals.  A value is exact whenever
every ``|c|`` is rational; otherwise only the decimal approximation is
available and anything that needs an exact comparison raises
:class:`~smashkit.kernel.InexactNormError`.

The module also models a concrete target for the induced seminorms
``||a||' = ||φ(a ⊗ 1)||`` and ``||h||'' = ||φ(1 ⊗ h)||``: the action of
``A # H`` on a finite truncation of ``A``, with the l1 operator norm.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .hopf import AlgebraSpec
from .kernel import InexactNormError, LinComb, ParameterError, Scalar
from .modalg import ModuleAlgebraSpec, act, polynomial_algebra
from .qplane import QPlaneElement
from .report import Report
from .smash import SmashElement, embed_a, embed_h, stability_constant

_CTX = decimal.Context(prec=40)


@dataclass(frozen=True)
class NormValue:
    """A nonnegative value, exact when possible, always with a decimal
    approximation (relative error far below 2**-50)."""

    exact: Fraction | None
    approx: decimal.Decimal

    @classmethod
    def of(cls, value: Fraction) -> "NormValue":
        value = Fraction(value)
        return cls(value, _CTX.divide(decimal.Decimal(value.numerator),
                                      decimal.Decimal(value.denominator)))

    def __add__(self, other: "NormValue") -> "NormValue":
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = self.exact + other.exact
        return NormValue(exact, _CTX.add(self.approx, other.approx))

    def scaled(self, w: Fraction) -> "NormValue":
        exact = None if self.exact is None else self.exact * w
        return NormValue(exact, _CTX.multiply(self.approx, NormValue.of(w).approx))

    def __mul__(self, other: "NormValue") -> "NormValue":
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = self.exact * other.exact
        return NormValue(exact, _CTX.multiply(self.approx, other.approx))

    def require_exact(self) -> Fraction:
        if self.exact is None:
            raise InexactNormError(f"value {self} is only approximately known")
        return self.exact

    def __str__(self):
        if self.exact is not None:
            return str(self.exact)
        return f"~{self.approx:.20g}"

    def to_json(self) -> dict:
        return {
            "value_exact": None if self.exact is None else str(self.exact),
            "value_approx": f"{self.approx:.20g}",
        }


ZERO_NORM = NormValue.of(Fraction(0))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def abs_value(c) -> NormValue:
    """``|c|`` for a Gaussian rational; exact iff ``|c|^2`` is a rational square."""
    c = Scalar.coerce(c)
    sq = c.abs_sq()
    root = _rational_sqrt(sq)
    if root is not None:
        return NormValue.of(root)
    approx = _CTX.sqrt(_CTX.divide(decimal.Decimal(sq.numerator),
                                   decimal.Decimal(sq.denominator)))
    return NormValue(None, approx)


KINDS = ("trunc", "envelope", "mixed", "weighted")


@dataclass(frozen=True)
class SeminormFamily:
    """One member of a parameterized seminorm family; call it on an element."""

    kind: str
    N: int | None = None
    rho: Fraction | None = None
    abs_q: Fraction | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown seminorm kind {self.kind!r}")
        for name in ("rho", "abs_q"):
            v = getattr(self, name)
            if v is not None:
                v = Fraction(v)
                object.__setattr__(self, name, v)
                if v <= 0:
                    raise ParameterError(f"{name} must be positive")
        if self.N is not None and self.N < 0:
            raise ParameterError("N must be nonnegative")
        need = {"trunc": ("N",), "envelope": ("rho", "abs_q"), "mixed": ("rho", "N"),
                "weighted": ("rho",)}[self.kind]
        for name in need:
            if getattr(self, name) is None:
                raise ParameterError(f"{self.kind} seminorm needs {name}")

    @classmethod
    def trunc(cls, N: int) -> "SeminormFamily":
        return cls("trunc", N=N)

    @classmethod
    def envelope(cls, rho, abs_q) -> "SeminormFamily":
        return cls("envelope", rho=rho, abs_q=abs_q)

    @classmethod
    def mixed(cls, rho, N: int) -> "SeminormFamily":
        return cls("mixed", N=N, rho=rho)

    @classmethod
    def weighted(cls, rho=1) -> "SeminormFamily":
        return cls("weighted", rho=rho)

    def weight(self, i: int, j: int = 0) -> Fraction:
        """Weight of the basis monomial ``x^i y^j`` (or of ``d(i)`` for ``weighted``)."""
        if self.kind == "trunc":
            if j:
                raise TypeError("the trunc family is defined on C[x] only")
            return Fraction(int(0 <= i <= self.N))
        if self.kind == "envelope":
            return self.abs_q ** (i * j) * self.rho ** (i + j)
        if self.kind == "mixed":
            return self.rho ** j if i <= self.N else Fraction(0)
        if j:
            raise TypeError("the weighted family is defined on one-variable labels only")
        return self.rho ** abs(i)

    def __call__(self, a) -> NormValue:
        return evaluate(self, a)

    def __str__(self):
        parts = [f"{k}={getattr(self, k)}" for k in ("N", "rho", "abs_q")
                 if getattr(self, k) is not None]
        return f"{self.kind}({', '.join(parts)})"


def _labels_and_coeffs(a):
    if isinstance(a, QPlaneElement):
        return [((i, j), c) for (i, j), c in a.items()]
    if isinstance(a, LinComb):
        out = []
        for b, c in a.items():
            if isinstance(b, tuple):
                out.append((b, c))
            elif isinstance(b, int):
                out.append(((b, 0), c))
            else:
                raise TypeError(f"cannot weigh basis label {b!r}")
        return out
    raise TypeError(f"cannot evaluate a seminorm on {type(a).__name__}")


def evaluate(f: SeminormFamily, a) -> NormValue:
    """Seminorm value of ``a`` (a C[x]/C[Z] LinComb or a QPlaneElement)."""
    total = ZERO_NORM
    for (i, j), c in _labels_and_coeffs(a):
        if f.kind == "trunc" and i < 0:
            raise TypeError("the trunc family is defined on C[x] only")
        w = f.weight(i, j)
        if w:
            total = total + abs_value(c).scaled(w)
    return total


def l1(a: LinComb) -> NormValue:
    """Plain l1 norm over any basis."""
    total = ZERO_NORM
    for _, c in a.items():
        total = total + abs_value(c)
    return total


def _default_mul(a, b):
    if isinstance(a, QPlaneElement):
        return a * b
    return polynomial_algebra().mul(a, b)


def check_submultiplicative(f: SeminormFamily | Callable, pairs: Iterable,
                            mul: Callable | None = None, name: str | None = None) -> Report:
    """Exact check of ``||ab|| <= ||a|| ||b||`` on each pair."""
    mul = mul or _default_mul
    report = Report(name or str(f))
    for a, b in pairs:
        lhs = f(mul(a, b)).require_exact()
        rhs = f(a).require_exact() * f(b).require_exact()
        report.record_le("submultiplicative", [str(a), str(b)], lhs, rhs)
    return report


# -- stability scans -------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str  # "UniformlyBounded" or "Diverges"
    value: Fraction | None

    def __str__(self):
        return f"{self.kind}({'?' if self.value is None else self.value})"


@dataclass
class StabilityReport:
    h: str
    family: str
    per_degree: list = field(default_factory=list)
    verdict: Verdict | None = None

    def to_json(self) -> dict:
        rows = []
        for n, c in self.per_degree:
            row = {"n": n}
            if isinstance(c, Fraction):
                row.update(NormValue.of(c).to_json())
            else:
                row.update({"value_exact": None, "value_approx": None, "status": c})
            rows.append(row)
        return {
            "schema": 1,
            "h": self.h,
            "family": self.family,
            "rows": rows,
            "verdict": {"kind": self.verdict.kind,
                        "value": None if self.verdict.value is None else str(self.verdict.value)},
        }

    def to_text(self) -> str:
        lines = [f"stability of {self.family} under {self.h}",
                 f"{'n':>4}  C_n"]
        lines += [f"{n:>4}  {c}" for n, c in self.per_degree]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def stability_scan(spec: ModuleAlgebraSpec, f: SeminormFamily | Callable, h: LinComb,
                   max_degree: int) -> StabilityReport:
    """Minimal constants ``C_n`` with ``||h·b_n|| <= C_n ||b_n||`` over the
    basis ``b_n`` of A up to ``max_degree``.

    ``C_n`` is ``"unconstrained"`` when both sides vanish and ``"unbounded"``
    when only ``||b_n||`` does.  The verdict is ``Diverges(γ)`` when every
    consecutive ratio ``C_{n+1}/C_n`` in the upper half of the scan is at
    least ``γ > 1`` (γ the smallest such ratio), ``Diverges(?)`` if some
    degree is unbounded, and ``UniformlyBounded(max C_n)`` otherwise.
    """
    A = spec.algebra
    report = StabilityReport(spec.hopf.algebra.render(h), str(f))
    unbounded = False
    for n in A.basis_sample(max_degree):
        b = LinComb.basis(n)
        nb = f(b).require_exact()
        nh = f(act(spec, h, b)).require_exact()
        if nb == 0:
            c = "unconstrained" if nh == 0 else "unbounded"
            unbounded |= nh != 0
        else:
            c = nh / nb
        report.per_degree.append((n, c))

    if unbounded:
        report.verdict = Verdict("Diverges", None)
        return report
    constrained = dict((n, c) for n, c in report.per_degree if isinstance(c, Fraction))
    lo = max_degree // 2
    ratios = [constrained[n + 1] / constrained[n]
              for n in range(lo, max_degree)
              if n in constrained and n + 1 in constrained and constrained[n] > 0]
    upper = [n for n in constrained if n >= lo]
    if ratios and len(ratios) == len(upper) - 1 and min(ratios) > 1:
        report.verdict = Verdict("Diverges", min(ratios))
    else:
        report.verdict = Verdict("UniformlyBounded", max(constrained.values(), default=Fraction(0)))
    return report


# -- the divergence witness ---------------------------------------------------


@dataclass
class WitnessTable:
    abs_q: Fraction
    rho: Fraction
    N: int
    rows: list  # (D, mixed NormValue, envelope NormValue)

    def mixed(self, D: int) -> NormValue:
        return self.rows[D][1]

    def envelope(self, D: int) -> NormValue:
        return self.rows[D][2]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "abs_q": str(self.abs_q),
            "rho": str(self.rho),
            "N": self.N,
            "mixed": [{"D": D, **m.to_json()} for D, m, _ in self.rows],
            "envelope": [{"D": D, **e.to_json()} for D, _, e in self.rows],
        }

    def to_text(self) -> str:
        head = ("D", f"mixed(rho={self.rho}, N={self.N})",
                f"envelope(rho={self.rho}, |q|={self.abs_q})")
        body = [(str(D), str(m), str(e)) for D, m, e in self.rows]
        widths = [max(len(r[k]) for r in [head, *body]) for k in range(3)]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [head, *body])


def witness_element(abs_q, D: int) -> QPlaneElement:
    """``sum_{i<=D} |q|^(-i^2) x^i``; coefficients chosen to outgrow every
    envelope seminorm while staying Cauchy for the mixed ones."""
    abs_q = Fraction(abs_q)
    return QPlaneElement(LinComb(((i, 0), abs_q ** (-i * i)) for i in range(D + 1)), abs_q)


def witness_divergence(abs_q, rho, N: int, max_degree: int) -> WitnessTable:
    """Tabulate mixed and envelope seminorms of the truncated witnesses.

    The mixed column is constant once ``D >= N`` while the envelope column
    grows at least like ``|q|^(-D^2) rho^D``.  Requires ``|q| < 1``.
    """
    abs_q, rho = Fraction(abs_q), Fraction(rho)
    if not 0 < abs_q < 1:
        raise ParameterError("the witness needs 0 < |q| < 1")
    mixed = SeminormFamily.mixed(rho, N)
    env = SeminormFamily.envelope(rho, abs_q)
    rows = []
    for D in range(max_degree + 1):
        w = witness_element(abs_q, D)
        rows.append((D, mixed(w), env(w)))
    return WitnessTable(abs_q, rho, N, rows)


# -- seminorms induced by a finite representation -------------------------


Matrix = dict  # (row, col) -> Scalar


def truncated_representation(spec: ModuleAlgebraSpec, N: int) -> Callable[[SmashElement], Matrix]:
    """``φ(a ⊗ h): b ↦ a (h · b)`` on the span of ``basis_sample(N)`` of A,
    discarding components outside that span.

    This is an algebra homomorphism from ``A # H`` whenever the discarded
    span is an H-stable ideal (true for the q-dilations, where it is
    ``x^{N+1} C[x]``, and trivially for the dual numbers with ``N >= 1``).
    """
    A: AlgebraSpec = spec.algebra
    basis = A.basis_sample(N)
    keep = set(basis)

    def phi(u: SmashElement) -> Matrix:
        m: dict = {}
        for (a, h), c in u.items():
            for col in basis:
                image = A.mul(LinComb.basis(a), act(spec, LinComb.basis(h), LinComb.basis(col)))
                for row, v in image.items():
                    if row in keep:
                        m[(row, col)] = m.get((row, col), Scalar(0)) + c * v
        return {k: v for k, v in m.items() if v}

    return phi


def operator_norm(m: Matrix) -> NormValue:
    """l1 operator norm: the largest column sum of ``|entries|``."""
    cols: dict = {}
    for (row, col), v in m.items():
        cols[col] = cols.get(col, ZERO_NORM) + abs_value(v)
    if not cols:
        return ZERO_NORM
    if any(v.exact is None for v in cols.values()):
        return NormValue(None, max(v.approx for v in cols.values()))
    return NormValue.of(max(v.exact for v in cols.values()))


def matmul(m1: Matrix, m2: Matrix) -> Matrix:
    out: dict = {}
    for (i, k), a in m1.items():
        for (k2, j), b in m2.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), Scalar(0)) + a * b
    return {k: v for k, v in out.items() if v}


def induced_seminorms(spec: ModuleAlgebraSpec, N: int):
    """``(||.||', ||.||'')`` on A and H induced by :func:`truncated_representation`."""
    phi = truncated_representation(spec, N)

    def norm_a(a: LinComb) -> NormValue:
        return operator_norm(phi(embed_a(spec, a)))

    def norm_h(h: LinComb) -> NormValue:
        return operator_norm(phi(embed_h(spec, h)))

    return norm_a, norm_h


def verify_induced_stability(spec: ModuleAlgebraSpec, h_labels: Iterable, a_labels: Iterable,
                             N: int, norms=None) -> Report:
    """``||h·a||' <= C ||a||'`` with ``C = sum ||h1||'' ||S(h2)||''``.

    ``norms`` defaults to the seminorms induced by the truncated
    representation of level ``N``.
    """
    norm_a, norm_h = norms or induced_seminorms(spec, N)
    report = Report(spec.name)
    fh, fa = spec.hopf.algebra.format_label, spec.algebra.format_label
    for h in h_labels:
        hb = LinComb.basis(h)
        C = stability_constant(spec, hb, norm_h).value
        for a in a_labels:
            ab = LinComb.basis(a)
            lhs = norm_a(act(spec, hb, ab)).require_exact()
            rhs = C * norm_a(ab).require_exact()
            report.record_le("induced-stability", [fh(h), fa(a)], lhs, rhs)
    return report
