"""Exact scalars and finite formal linear combinations.

Coefficients live in the Gaussian rationals Q(i), built on
:class:`fractions.Fraction`.  A :class:`LinComb` is a finite map from basis
labels to nonzero scalars; every algebra, coalgebra and tensor element in the
package is one of these, with structure maps supplied on basis labels and
extended (bi)linearly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping


class AlgebraError(Exception):
    """Base class for errors raised by the package."""


class ParameterError(AlgebraError, ValueError):
    """A structural parameter (q, rho, N, ...) is out of its allowed range."""


class InexactNormError(AlgebraError):
    """An exact value was demanded but only an approximation exists."""


class UndefinedOnBasis(AlgebraError, KeyError):
    """A structure map was evaluated on basis labels outside its domain."""

    def __init__(self, labels, reason=""):
        self.labels = labels
        msg = f"structure map undefined on {labels!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Scalar:
    """A Gaussian rational ``re + im*i``.

    Instances are immutable and hash/compare equal to the matching ``int`` or
    ``Fraction`` when the imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        return cls(value)

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return NotImplemented
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "Scalar":
        d = self.abs_sq()
        if d == 0:
            raise ZeroDivisionError("inverse of the zero scalar")
        return Scalar(self.re / d, -self.im / d)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and comparison ----------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text ---------------------------------------------------------------

    def _sign_and_body(self) -> tuple[bool, str]:
        """Split into (negative, magnitude text) for term rendering."""
        if self.im == 0:
            return self.re < 0, str(abs(self.re))
        if self.re == 0:
            mag = abs(self.im)
            return self.im < 0, "i" if mag == 1 else f"{mag}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}*i"
        return False, f"({self.re}{sign}{imag})"

    def __str__(self):
        neg, body = self._sign_and_body()
        return f"-{body}" if neg else body

    def __repr__(self):
        return f"Scalar({str(self.re)!r}, {str(self.im)!r})"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Scalar":
        return cls(Fraction(data["re"]), Fraction(data["im"]))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _sort_labels(labels: Iterable) -> list:
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=repr)


class LinComb:
    """A finite formal linear combination ``sum c_b * b`` over basis labels.

    Zero coefficients are never stored, so equality is plain map equality.
    Labels must be hashable; iteration follows the labels' natural order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for label, c in items:
                c = Scalar.coerce(c)
                acc[label] = acc.get(label, ZERO) + c
        object.__setattr__(
            self, "_terms", {b: c for b, c in acc.items() if not c.is_zero()}
        )

    def __setattr__(self, name, value):
        raise AttributeError("LinComb is immutable")

    @classmethod
    def basis(cls, label, coeff=1) -> "LinComb":
        return cls({label: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return _ZERO_LC

    @classmethod
    def _trusted(cls, terms: dict) -> "LinComb":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        return obj

    # -- mapping protocol --------------------------------------------------

    def __getitem__(self, label) -> Scalar:
        return self._terms.get(label, ZERO)

    coeff = __getitem__

    def __contains__(self, label):
        return label in self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(_sort_labels(self._terms))

    def items(self) -> list[tuple[Any, Scalar]]:
        return [(b, self._terms[b]) for b in self]

    def support(self) -> list:
        return list(self)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    # -- vector space structure -------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return combine(self, other, ONE)

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return combine(self, other, -ONE)

    def __neg__(self):
        return LinComb._trusted({b: -c for b, c in self._terms.items()})

    def scale(self, s) -> "LinComb":
        s = Scalar.coerce(s)
        if s.is_zero():
            return _ZERO_LC
        return LinComb._trusted({b: s * c for b, c in self._terms.items()})

    def __rmul__(self, s):
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_labels(self, f: Callable) -> "LinComb":
        """Relabel each basis element by ``f`` (linear, summing collisions)."""
        return LinComb((f(b), c) for b, c in self._terms.items())

    # -- text ---------------------------------------------------------------

    def render(self, fmt: Callable[[Any], str] = str) -> str:
        """Canonical text, terms in label order, e.g. ``2 * x^2 - y``."""
        if not self._terms:
            return "0"
        parts = []
        for b in self:
            neg, body = self._terms[b]._sign_and_body()
            label = fmt(b)
            if label == "1":
                term = body
            elif body == "1":
                term = label
            else:
                term = f"{body} * {label}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f" - {term}" if neg else f" + {term}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LinComb({dict(self.items())!r})"


_ZERO_LC = LinComb._trusted({})


def combine(u: LinComb, v: LinComb, s=1) -> LinComb:
    """Return ``u + s*v`` in canonical form."""
    s = Scalar.coerce(s)
    out = dict(u._terms)
    if s.is_zero():
        return LinComb._trusted(out)
    for b, c in v._terms.items():
        new = out.get(b, ZERO) + s * c
        if new.is_zero():
            out.pop(b, None)
        else:
            out[b] = new
    return LinComb._trusted(out)


def lin_sum(items: Iterable[LinComb]) -> LinComb:
    out: dict = {}
    for v in items:
        for b, c in v._terms.items():
            out[b] = out.get(b, ZERO) + c
    return LinComb._trusted({b: c for b, c in out.items() if not c.is_zero()})


def _call(f, labels):
    try:
        result = f(*labels)
    except UndefinedOnBasis:
        raise
    except (KeyError, IndexError, ValueError) as exc:
        raise UndefinedOnBasis(labels, str(exc)) from exc
    if not isinstance(result, LinComb):
        raise UndefinedOnBasis(labels, f"got {result!r} instead of a LinComb")
    return result


def linear_extend(f: Callable, u: LinComb) -> LinComb:
    """Extend a map on basis labels (returning LinComb) linearly to ``u``."""
    return multilinear_extend(f, u)


def bilinear_extend(f: Callable, u: LinComb, v: LinComb) -> LinComb:
    """``sum_{b,b'} u[b] v[b'] f(b, b')``.

    ``f`` maps a pair of labels to a :class:`LinComb`.  If it raises
    ``KeyError``/``ValueError`` or returns a non-LinComb the failure is reported as
    :class:`UndefinedOnBasis` naming the offending pair.
    """
    return multilinear_extend(f, u, v)


def multilinear_extend(f: Callable, *args: LinComb) -> LinComb:
    out: dict = {}
    for combo in itertools.product(*(a._terms.items() for a in args)):
        labels = tuple(b for b, _ in combo)
        coeff = ONE
        for _, c in combo:
            coeff = coeff * c
        for b, c in _call(f, labels)._terms.items():
            out[b] = out.get(b, ZERO) + coeff * c
    return LinComb._trusted({b: c for b, c in out.items() if not c.is_zero()})


def tensor(*args: LinComb) -> LinComb:
    """Tensor product of elements; labels become tuples, flattening nothing."""
    return multilinear_extend(lambda *bs: LinComb._trusted({bs: ONE}), *args)


def tensor_mul(muls: tuple[Callable, ...], u: LinComb, v: LinComb) -> LinComb:
    """Product in a tensor product of algebras: factorwise multiplication.

    ``muls[k]`` multiplies basis labels of the k-th tensor factor.
    """

    def on_labels(p, r):
        return tensor(*(m(a, b) for m, a, b in zip(muls, p, r)))

    return bilinear_extend(on_labels, u, v)
