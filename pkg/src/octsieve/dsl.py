"""A small polynomial expression language over octonion variables.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := IDENT | NUMBER | '(' expr ')' | '-' factor | 'conj' '(' expr ')'

'*' associates to the left in the grammar and the parsed tree keeps that
grouping verbatim; since octonion multiplication is nonassociative,
"a*b*c" and "a*(b*c)" are different expressions.  Parenthesize whenever
the grouping matters.

Literals are real scalars only.  Basis elements enter through variable
assignments, so the same expression can be evaluated under any of the 16
multiplication rules.  'conj' is a reserved word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .algebra import Octonion, conjugate, multiply

__all__ = [
    "Expr",
    "Var",
    "Const",
    "Add",
    "Sub",
    "Neg",
    "Mul",
    "Conj",
    "ExprSyntaxError",
    "UnboundVariableError",
    "parse",
    "evaluate",
    "free_vars",
    "to_text",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conj:
    operand: "Expr"


Expr = Union[Var, Const, Add, Sub, Neg, Mul, Conj]


class ExprSyntaxError(ValueError):
    """Malformed expression text; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnboundVariableError(ValueError):
    """Evaluation hit a variable with no assignment."""

    def __init__(self, name: str):
        super().__init__(f"unbound variable {name!r}")
        self.name = name


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)|(?P<ident>[A-Za-z_]\w*)|(?P<op>[-+*()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(
                f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
            )
        if m.lastgroup == "num":
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_op(self, op: str):
        kind, text, offset = self.next()
        if kind != "op" or text != op:
            raise ExprSyntaxError(f"expected {op!r}", offset)

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                right = self.parse_term()
                node = Add(node, right) if text == "+" else Sub(node, right)
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.next()
                node = Mul(node, self.parse_factor())
            else:
                return node

    def parse_factor(self) -> Expr:
        kind, text, offset = self.next()
        if kind == "num":
            value = float(text)
            if value.is_integer() and "." not in text and "e" not in text and "E" not in text:
                return Const(int(text))
            return Const(value)
        if kind == "ident":
            if text == "conj":
                self.expect_op("(")
                inner = self.parse_expr()
                self.expect_op(")")
                return Conj(inner)
            return Var(text)
        if kind == "op" and text == "-":
            return Neg(self.parse_factor())
        if kind == "op" and text == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(f"unexpected {text!r}" if text else "unexpected end of input", offset)


def parse(text: str) -> Expr:
    """Parse expression text; raises ExprSyntaxError with a byte offset."""
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    parser = _Parser(text)
    node = parser.parse_expr()
    kind, trailing, offset = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {trailing!r}", offset)
    return node


def evaluate(expr: Expr, env: Mapping[str, Octonion], n: int) -> Octonion:
    """Evaluate under rule n; every Mul node multiplies with that rule."""
    if isinstance(expr, Var):
        try:
            return env[expr.name]
        except KeyError:
            raise UnboundVariableError(expr.name) from None
    if isinstance(expr, Const):
        return Octonion.real(expr.value)
    if isinstance(expr, Add):
        return evaluate(expr.left, env, n) + evaluate(expr.right, env, n)
    if isinstance(expr, Sub):
        return evaluate(expr.left, env, n) - evaluate(expr.right, env, n)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, env, n)
    if isinstance(expr, Mul):
        return multiply(evaluate(expr.left, env, n), evaluate(expr.right, env, n), n)
    if isinstance(expr, Conj):
        return conjugate(evaluate(expr.operand, env, n))
    raise TypeError(f"not an expression node: {expr!r}")


def free_vars(expr: Expr) -> list[str]:
    """Variable names in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(node: Expr):
        if isinstance(node, Var):
            seen.setdefault(node.name)
        elif isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, (Neg, Conj)):
            walk(node.operand)

    walk(expr)
    return list(seen)


# Print precedence: sums bind loosest, factors tightest.
_SUM, _TERM, _FACTOR = 0, 1, 2


def _level(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return _SUM
    if isinstance(node, Mul):
        return _TERM
    return _FACTOR


def to_text(expr: Expr) -> str:
    """Canonical text form; reparsing it yields an identical tree."""

    def render(node: Expr, min_level: int) -> str:
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Const):
            return repr(node.value)
        if isinstance(node, Conj):
            return f"conj({render(node.operand, _SUM)})"
        if isinstance(node, Neg):
            return f"-{render(node.operand, _FACTOR)}"
        if isinstance(node, (Add, Sub)):
            op = "+" if isinstance(node, Add) else "-"
            # left-associative: the right operand must bind tighter
            text = f"{render(node.left, _SUM)} {op} {render(node.right, _TERM)}"
            level = _SUM
        else:  # Mul
            text = f"{render(node.left, _TERM)}*{render(node.right, _FACTOR)}"
            level = _TERM
        return f"({text})" if level < min_level else text

    return render(expr, _SUM)
