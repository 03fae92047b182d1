"""Text front-end: parse series/polynomial expressions into exact Series.

Grammar (single-token lookahead recursive descent):

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := '-' factor | power
    power    := base ('^' exponent)?
    base     := rational | 'x' | 'D' | '(' expr ')' | func '(' expr ')'
    exponent := ['-'] integer | '(' rational ')'
    rational := ['-'] integer ('/' positive-integer)?
    func     := 'exp' | 'log' | 'sqrt'

Precedence: '^' > unary minus > '*','/' > '+','-'; '^' is right-associative
on its single literal exponent.  Division follows operator-division
semantics: when the divisor has positive order k the quotient is computed by
cancelling the shared x^k factor (so "D/(exp(D)-1)" works), and "1/D" is a
DivisionOrderError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionOrderError, NotInvertible, ParseError, TruncationError, UmbraError
from .fps import (
    INF,
    Series,
    const,
    exp_series,
    log_series,
    mul_inv,
    pow_rat,
    x_series,
)
from .rational import rat_str

_FUNCTIONS = ("exp", "log", "sqrt")


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pos: int


@dataclass(frozen=True)
class Num(Node):
    value: Fraction


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    child: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: Fraction


@dataclass(frozen=True)
class Call(Node):
    func: str
    arg: Node


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_SYMBOLS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # 'int' | 'name' | symbol | 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[Token]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            out.append(Token("name", text[i:j], i))
            i = j
            continue
        if c in _SYMBOLS:
            out.append(Token(c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    out.append(Token("end", "", n))
    return out


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected token {tok.text or 'end of input'!r}", tok.pos, (kind,))
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos, ("end of input",))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = BinOp(node.pos, op.kind, node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            node = BinOp(node.pos, op.kind, node, rhs)
        return node

    def factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return Neg(tok.pos, self.factor())
        return self.power()

    def power(self) -> Node:
        base = self.base()
        if self.peek().kind == "^":
            self.advance()
            exponent = self.exponent()
            return Pow(base.pos, base, exponent)
        return base

    def exponent(self) -> Fraction:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            value = self.rational()
            self.expect(")")
            return value
        return self.rational(integer_only=True)

    def rational(self, integer_only: bool = False) -> Fraction:
        sign = 1
        if self.peek().kind == "-":
            self.advance()
            sign = -1
        num = int(self.expect("int").text)
        if not integer_only and self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("int")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def base(self) -> Node:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            # rational literal: integer '/' positive-integer (greedy, per the
            # grammar; "3/2^2" is therefore (3/2)^2, while "x/2^2" is x/(2^2))
            if self.peek().kind == "/" and self.tokens[self.i + 1].kind == "int":
                self.advance()
                den_tok = self.advance()
                if int(den_tok.text) == 0:
                    raise ParseError("zero denominator", den_tok.pos)
                return Num(tok.pos, Fraction(int(tok.text), int(den_tok.text)))
            return Num(tok.pos, Fraction(int(tok.text)))
        if tok.kind == "name":
            self.advance()
            if tok.text in ("x", "D"):
                return Var(tok.pos, tok.text)
            if tok.text in _FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.pos, tok.text, arg)
            raise ParseError(
                f"unknown name {tok.text!r}", tok.pos, ("x", "D") + _FUNCTIONS
            )
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(
            f"unexpected token {tok.text or 'end of input'!r}",
            tok.pos,
            ("number", "x", "D", "("),
        )


def parse(text: str) -> Node:
    """Parse an expression; raises ParseError with a byte offset on bad input."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# rendering (parse . render . parse is a fixpoint)
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}


def render(node: Node) -> str:
    text, _ = _render(node)
    return text


def _render(node: Node) -> tuple[str, int]:
    if isinstance(node, Num):
        s = rat_str(node.value)
        return (s, _PREC["atom"] if node.value >= 0 and node.value.denominator == 1 else _PREC["/"])
    if isinstance(node, Var):
        return node.name, _PREC["atom"]
    if isinstance(node, Call):
        inner, _ = _render(node.arg)
        return f"{node.func}({inner})", _PREC["atom"]
    if isinstance(node, Neg):
        inner, prec = _render(node.child)
        if prec < _PREC["neg"]:
            inner = f"({inner})"
        return f"-{inner}", _PREC["neg"]
    if isinstance(node, Pow):
        inner, prec = _render(node.base)
        if prec < _PREC["atom"]:
            inner = f"({inner})"
        e = node.exponent
        etext = str(e.numerator) if e.denominator == 1 and e >= 0 else f"({rat_str(e)})"
        return f"{inner}^{etext}", _PREC["^"]
    if isinstance(node, BinOp):
        lt, lp = _render(node.left)
        rt, rp = _render(node.right)
        prec = _PREC[node.op]
        if lp < prec:
            lt = f"({lt})"
        # left-associative: parenthesize right operand at equal precedence
        if rp < prec or (rp == prec and node.op in ("-", "/", "+", "*")):
            rt = f"({rt})"
        return f"{lt}{node.op}{rt}", prec
    raise TypeError(f"unknown node {node!r}")


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _located(exc: UmbraError, pos: int) -> UmbraError:
    return type(exc)(f"{exc} (at offset {pos})")


def _eval(node: Node, trunc: int) -> Series:
    if isinstance(node, Num):
        return const(node.value, trunc)
    if isinstance(node, Var):
        return x_series(trunc)
    if isinstance(node, Neg):
        return -_eval(node.child, trunc)
    if isinstance(node, Call):
        arg = _eval(node.arg, trunc)
        try:
            if node.func == "exp":
                return exp_series(arg)
            if node.func == "log":
                return log_series(arg)
            return pow_rat(arg, Fraction(1, 2))
        except UmbraError as exc:
            raise _located(exc, node.pos) from exc
    if isinstance(node, Pow):
        base = _eval(node.base, trunc)
        e = node.exponent
        try:
            if e.denominator == 1:
                k = int(e)
                if k >= 0:
                    return base**k
                if base[0] == 0:
                    raise NotInvertible("negative power of a series with zero constant term")
                return mul_inv(base) ** (-k)
            return pow_rat(base, e)
        except UmbraError as exc:
            raise _located(exc, node.pos) from exc
    if isinstance(node, BinOp):
        left = _eval(node.left, trunc)
        right = _eval(node.right, trunc)
        try:
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            return _divide(left, right)
        except UmbraError as exc:
            raise _located(exc, node.pos) from exc
    raise TypeError(f"unknown node {node!r}")


def _divide(f: Series, g: Series) -> Series:
    k = g.order()
    if k == INF:
        raise NotInvertible("division by the zero series")
    k = int(k)
    if k == 0:
        return f * mul_inv(g)
    if f.order() < k:
        raise DivisionOrderError(f"dividend order {f.order()} < divisor order {k}")
    return f.shift_down(k) * mul_inv(g.shift_down(k))


def eval_ast(node: Node, order: int) -> Series:
    """Evaluate to an exact Series at truncation ``order``.

    Operator division shifts away shared x^k factors, which costs truncation
    depth; evaluation transparently retries at a deeper working order until
    the requested order is delivered.
    """
    if order < 0:
        raise TruncationError("order must be >= 0")
    working = order
    last_exc: UmbraError | None = None
    for _ in range(8):
        try:
            result = _eval(node, working)
        except NotInvertible as exc:
            # a divisor can look like the zero series purely because the
            # working order is shallow; deepen and retry before giving up
            last_exc = exc
            working += order + 1
            continue
        if result.trunc >= order:
            return result.truncate(order)
        working += order - result.trunc
    if last_exc is not None:
        raise last_exc
    raise TruncationError("expression loses too much truncation depth to evaluate")


def eval_expr(text: str, order: int) -> Series:
    return eval_ast(parse(text), order)
