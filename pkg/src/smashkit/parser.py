"""Expression language for algebra elements.

Grammar (juxtaposition is an alternative to ``*``)::

    top     := ['-'] term (('+' | '-') term)*
    term    := product ['#' product]
    inner   := ['-'] product (('+' | '-') product)*
    product := factor ('*'? factor)*
    factor  := atom ['^' nat]
    atom    := rational | 'i' | 'q' | 'x' | 'y' | 't' | 'g' | 'd(' int ')' | '(' inner ')'

Rationals are written ``p`` or ``p/q``.  ``#`` builds a smash-product pair
and is only allowed at top level.  :func:`parse` returns an AST whose nodes
compare structurally (source spans are carried but ignored by ``==``);
:func:`to_text` prints an AST back so that ``parse(to_text(e)) == e``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .kernel import I, LinComb, Scalar, UndefinedOnBasis, bilinear_extend, tensor

MAX_EXPONENT = 10 ** 6
LETTERS = "iqxytg"


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: frozenset = frozenset()):
        self.position = position
        self.expected = expected
        if expected:
            message += f"; expected one of {', '.join(sorted(expected))}"
        super().__init__(f"syntax error at position {position}: {message}")


class EvalError(ValueError):
    """An expression is well formed but meaningless in the target algebra."""


@dataclass(frozen=True)
class Span:
    start: int
    end: int


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: Fraction
    span: Span = _span()


@dataclass(frozen=True)
class Sym:
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class Delta:
    k: int
    span: Span = _span()


@dataclass(frozen=True)
class Neg:
    arg: object
    span: Span = _span()


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    span: Span = _span()


@dataclass(frozen=True)
class Sub:
    left: object
    right: object
    span: Span = _span()


@dataclass(frozen=True)
class Mul:
    left: object
    right: object
    span: Span = _span()


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    span: Span = _span()


@dataclass(frozen=True)
class Smash:
    left: object
    right: object
    span: Span = _span()


# -- lexer -----------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, SYM, DELTA, OP, EOF
    value: object
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    toks = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            num = int(text[start:pos])
            den = 1
            if pos < n and text[pos] == "/":
                pos += 1
                dstart = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                if dstart == pos:
                    raise ParseError("denominator missing", pos, frozenset({"integer"}))
                den = int(text[dstart:pos])
                if den == 0:
                    raise ParseError("zero denominator", dstart)
            # value: (number, written as a plain integer)
            toks.append(Token("NUM", (Fraction(num, den), "/" not in text[start:pos]),
                              start, pos))
        elif ch == "d":
            start = pos
            pos += 1
            if pos >= n or text[pos] != "(":
                raise ParseError("'d' must be followed by '('", pos, frozenset({"'('"}))
            pos += 1
            istart = pos
            if pos < n and text[pos] == "-":
                pos += 1
            dstart = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if dstart == pos:
                raise ParseError("index of d(...) missing", pos, frozenset({"integer"}))
            k = int(text[istart:pos])
            if pos >= n or text[pos] != ")":
                raise ParseError("unclosed d(...)", pos, frozenset({"')'"}))
            pos += 1
            toks.append(Token("DELTA", k, start, pos))
        elif ch in LETTERS:
            toks.append(Token("SYM", ch, pos, pos + 1))
            pos += 1
        elif ch in "+-*^#()":
            toks.append(Token("OP", ch, pos, pos + 1))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos,
                             frozenset({"number", "generator", "operator"}))
    toks.append(Token("EOF", None, n, n))
    return toks


# -- parser ----------------------------------------------------------------

_ATOM_START = frozenset({"number", "i", "q", "x", "y", "t", "g", "d(k)", "'('"})


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def is_op(self, ch: str) -> bool:
        return self.tok.kind == "OP" and self.tok.value == ch

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        got = "end of input" if t.kind == "EOF" else repr(str(t.value if t.kind != "NUM" else t.value[0]))
        raise ParseError(f"unexpected {got}", t.start, frozenset(expected))

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("NUM", "SYM", "DELTA") or (t.kind == "OP" and t.value == "(")

    def top(self):
        node = self.sum(self.term)
        if self.tok.kind != "EOF":
            self.fail({"'+'", "'-'", "'*'", "'#'", "end of input"})
        return node

    def sum(self, operand):
        start = self.tok.start
        if self.is_op("-"):
            self.advance()
            arg = operand()
            node = Neg(arg, Span(start, self.toks[self.i - 1].end))
        else:
            node = operand()
        while self.is_op("+") or self.is_op("-"):
            op = self.advance().value
            right = operand()
            cls = Add if op == "+" else Sub
            node = cls(node, right, Span(start, self.toks[self.i - 1].end))
        return node

    def term(self):
        start = self.tok.start
        left = self.product()
        if self.is_op("#"):
            self.advance()
            right = self.product()
            if self.is_op("#"):
                raise ParseError("a smash pair has exactly one '#'", self.tok.start)
            return Smash(left, right, Span(start, self.toks[self.i - 1].end))
        return left

    def product(self):
        start = self.tok.start
        node = self.factor()
        while True:
            if self.is_op("*"):
                self.advance()
                right = self.factor()
            elif self.starts_atom():
                right = self.factor()
            else:
                return node
            node = Mul(node, right, Span(start, self.toks[self.i - 1].end))

    def factor(self):
        start = self.tok.start
        base = self.atom()
        if self.is_op("^"):
            self.advance()
            t = self.tok
            if t.kind != "NUM" or t.value[0].denominator != 1 or not t.value[1]:
                self.fail({"natural number"})
            self.advance()
            exp = t.value[0].numerator
            if exp > MAX_EXPONENT:
                raise ParseError(f"exponent {exp} exceeds {MAX_EXPONENT}", t.start)
            return Pow(base, exp, Span(start, t.end))
        return base

    def atom(self):
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return Num(t.value[0], Span(t.start, t.end))
        if t.kind == "SYM":
            self.advance()
            return Sym(t.value, Span(t.start, t.end))
        if t.kind == "DELTA":
            self.advance()
            return Delta(t.value, Span(t.start, t.end))
        if self.is_op("("):
            self.advance()
            node = self.sum(self.product)
            if self.is_op("#"):
                raise ParseError("'#' is only allowed at top level", self.tok.start)
            if not self.is_op(")"):
                self.fail({"')'", "'+'", "'-'", "'*'"})
            self.advance()
            return node
        self.fail(_ATOM_START)


def parse(text: str):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).top()


# -- printer ---------------------------------------------------------------


def _prec(node) -> int:
    if isinstance(node, (Add, Sub, Neg)):
        return 1
    if isinstance(node, Smash):
        return 2
    if isinstance(node, Mul):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def _wrap(node, need: int) -> str:
    s = to_text(node)
    return s if _prec(node) >= need else f"({s})"


def to_text(node) -> str:
    """Print an expression tree in the input syntax."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Delta):
        return f"d({node.k})"
    if isinstance(node, Neg):
        return f"-{_wrap(node.arg, 2)}"
    if isinstance(node, (Add, Sub)):
        op = "+" if isinstance(node, Add) else "-"
        return f"{to_text(node.left)} {op} {_wrap(node.right, 2)}"
    if isinstance(node, Smash):
        return f"{_wrap(node.left, 3)} # {_wrap(node.right, 3)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 3)}*{_wrap(node.right, 4)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, 5)}^{node.exp}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ----------------------------------------------------------


@dataclass
class Context:
    """How to interpret an expression in one algebra of LinCombs."""

    name: str
    one: LinComb
    mul: Callable[[LinComb, LinComb], LinComb]
    generators: dict
    delta: Callable[[int], LinComb] | None = None
    q: Scalar | None = None

    def generator(self, node: Sym) -> LinComb:
        if node.name == "i":
            return self.one.scale(I)
        if node.name == "q":
            if self.q is None:
                raise EvalError("'q' used but no q parameter is set")
            return self.one.scale(self.q)
        if node.name not in self.generators:
            raise EvalError(f"generator {node.name!r} is not available in {self.name}")
        return LinComb.basis(self.generators[node.name])


def algebra_context(alg, q=None, deltas: bool = False) -> Context:
    """Context for an :class:`~smashkit.hopf.AlgebraSpec`; ``deltas`` enables
    ``d(k)`` for the group/semigroup presets."""
    return Context(alg.name, alg.one(), alg.mul, dict(alg.generators),
                   alg.basis if deltas else None,
                   None if q is None else Scalar.coerce(q))


def _concat(a: str, b: str) -> LinComb:
    return LinComb.basis(a + b)


def word_context(q=None) -> Context:
    """The free algebra on x, y: elements are LinCombs over words."""
    return Context("C<x,y>", LinComb.basis(""), lambda u, v: bilinear_extend(_concat, u, v),
                   {"x": "x", "y": "y"}, None, None if q is None else Scalar.coerce(q))


def evaluate(node, ctx: Context) -> LinComb:
    if isinstance(node, Num):
        return ctx.one.scale(node.value)
    if isinstance(node, Sym):
        return ctx.generator(node)
    if isinstance(node, Delta):
        if ctx.delta is None:
            raise EvalError(f"d(k) is not available in {ctx.name}")
        try:
            return ctx.delta(node.k)
        except UndefinedOnBasis as exc:
            raise EvalError(str(exc)) from None
    if isinstance(node, Neg):
        return -evaluate(node.arg, ctx)
    if isinstance(node, Add):
        return evaluate(node.left, ctx) + evaluate(node.right, ctx)
    if isinstance(node, Sub):
        return evaluate(node.left, ctx) - evaluate(node.right, ctx)
    if isinstance(node, Mul):
        return ctx.mul(evaluate(node.left, ctx), evaluate(node.right, ctx))
    if isinstance(node, Pow):
        result, base, n = ctx.one, evaluate(node.base, ctx), node.exp
        while n:
            if n & 1:
                result = ctx.mul(result, base)
            base = ctx.mul(base, base)
            n >>= 1
        return result
    if isinstance(node, Smash):
        raise EvalError("'#' pairs need a smash-product context")
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_smash(node, a_ctx: Context, h_ctx: Context) -> LinComb:
    """Evaluate a top-level expression to an element of ``A # H``.

    ``a # h`` becomes ``a ⊗ h``; a term without ``#`` is read as ``a ⊗ 1``.
    """
    if isinstance(node, Add):
        return evaluate_smash(node.left, a_ctx, h_ctx) + evaluate_smash(node.right, a_ctx, h_ctx)
    if isinstance(node, Sub):
        return evaluate_smash(node.left, a_ctx, h_ctx) - evaluate_smash(node.right, a_ctx, h_ctx)
    if isinstance(node, Neg):
        return -evaluate_smash(node.arg, a_ctx, h_ctx)
    if isinstance(node, Smash):
        return tensor(evaluate(node.left, a_ctx), evaluate(node.right, h_ctx))
    return tensor(evaluate(node, a_ctx), h_ctx.one)


__all__ = [
    "Add", "Context", "Delta", "EvalError", "Mul", "Neg", "Num", "ParseError", "Pow",
    "Smash", "Span", "Sub", "Sym", "algebra_context", "evaluate", "evaluate_smash",
    "parse", "to_text", "tokenize", "word_context",
]
