"""Expression language for multivectors and brackets.

Grammar summary::

    expr     := term (('+' | '-') term)*
    term     := factor ('^' factor)*          wedge, left associative
    factor   := unary ('*' unary)*            scalar multiplication
    unary    := '-' unary | atom
    atom     := rational | variable | generator | '(' expr ')'
              | '[' expr ',' expr ']'         antisymmetric bracket
              | '{' expr (',' expr)* '}' ['_' int]   symmetric / n-bracket
              | 'd' '(' expr ')'              differential
              | 'i_<n>' '(' expr, ... ')'     injection component

Rationals are ``p`` or ``p/q``; variables ``x1..xm`` (polynomial pairs
only); generators ``d1..dm`` or ``e1..ed`` depending on the pair kind.  A
variable immediately wedged with an integer literal, as in ``x1^2``, parses
as a monomial power.  Symbols are resolved against the pair at parse time,
so errors carry source positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exterior import Multivector, wedge
from .linfty import ce_differential, n_bracket, natural_injection
from .pairs import GradedPairElement, LieRinehartPair
from .schouten import sn_antisym, sn_sym

__all__ = ["Expression", "evaluate", "parse"]


_TOKEN_RE = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[-+*/^(),\[\]{}])"
)


@dataclass
class _Token:
    kind: str  # "int" | "name" | punctuation literal | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    size = len(text)
    while pos < size:
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        value = match.group(match.lastgroup)
        kind = value if match.lastgroup == "punct" else match.lastgroup
        tokens.append(_Token(kind, value, pos))
        pos = match.end()
    tokens.append(_Token("end", "", size))
    return tokens


# -- parse tree ---------------------------------------------------------------


class Expression:
    pass


@dataclass
class Rational(Expression):
    value: Fraction


@dataclass
class VariablePower(Expression):
    index: int
    exponent: int


@dataclass
class Generator(Expression):
    index: int


@dataclass
class Negate(Expression):
    child: Expression


@dataclass
class BinaryOp(Expression):
    op: str  # "+", "-", "*", "^"
    left: Expression
    right: Expression


@dataclass
class AntiBracket(Expression):
    left: Expression
    right: Expression


@dataclass
class SymBracket(Expression):
    left: Expression
    right: Expression


@dataclass
class NBracket(Expression):
    args: list[Expression]
    arity: int


@dataclass
class Differential(Expression):
    child: Expression


@dataclass
class Injection(Expression):
    args: list[Expression]
    arity: int


_NAME_RE = re.compile(r"^([a-z])(\d+)$")
_INJ_RE = re.compile(r"^i_(\d+)$")


class _Parser:
    def __init__(self, text: str, pair: LieRinehartPair):
        self.tokens = _tokenize(text)
        self.pair = pair
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(token.pos, f"expected {kind!r}, found {token.text or 'end of input'!r}")
        return self.advance()

    # precedence: +,- < ^ < * < unary minus

    def parse_expression(self) -> Expression:
        node = self.parse_wedge()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            node = BinaryOp(op, node, self.parse_wedge())
        return node

    def parse_wedge(self) -> Expression:
        node = self.parse_product()
        while self.peek().kind == "^":
            self.advance()
            node = BinaryOp("^", node, self.parse_product())
        return node

    def parse_product(self) -> Expression:
        node = self.parse_unary()
        while self.peek().kind == "*":
            self.advance()
            node = BinaryOp("*", node, self.parse_unary())
        return node

    def parse_unary(self) -> Expression:
        if self.peek().kind == "-":
            self.advance()
            return Negate(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Expression:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            numerator = int(token.text)
            if self.peek().kind == "/":
                self.advance()
                denom = self.expect("int")
                if int(denom.text) == 0:
                    raise ParseError(denom.pos, "zero denominator")
                return Rational(Fraction(numerator, int(denom.text)))
            return Rational(Fraction(numerator))
        if token.kind == "(":
            self.advance()
            node = self.parse_expression()
            self.expect(")")
            return node
        if token.kind == "[":
            self.advance()
            left = self.parse_expression()
            self.expect(",")
            right = self.parse_expression()
            self.expect("]")
            return AntiBracket(left, right)
        if token.kind == "{":
            return self.parse_braces()
        if token.kind == "name":
            return self.parse_name()
        raise ParseError(token.pos, f"unexpected {token.text or 'end of input'!r}")

    def parse_braces(self) -> Expression:
        open_token = self.advance()
        args = [self.parse_expression()]
        while self.peek().kind == ",":
            self.advance()
            args.append(self.parse_expression())
        self.expect("}")
        arity: int | None = None
        if self.peek().kind == "name" and self.peek().text.startswith("_"):
            suffix = self.advance()
            body = suffix.text[1:]
            if not body.isdigit():
                raise ParseError(suffix.pos, f"malformed arity suffix {suffix.text!r}")
            arity = int(body)
        if arity is not None:
            if arity != len(args):
                raise ParseError(
                    open_token.pos,
                    f"arity suffix _{arity} does not match {len(args)} arguments",
                )
            return NBracket(args, arity)
        if len(args) != 2:
            raise ParseError(
                open_token.pos,
                f"braces with {len(args)} arguments need an explicit arity suffix",
            )
        return SymBracket(args[0], args[1])

    def parse_name(self) -> Expression:
        token = self.advance()
        text = token.text
        if text == "d" and self.peek().kind == "(":
            self.advance()
            node = self.parse_expression()
            self.expect(")")
            return Differential(node)
        injection = _INJ_RE.match(text)
        if injection:
            arity = int(injection.group(1))
            self.expect("(")
            args = [self.parse_expression()]
            while self.peek().kind == ",":
                self.advance()
                args.append(self.parse_expression())
            self.expect(")")
            if arity != len(args):
                raise ParseError(
                    token.pos, f"injection i_{arity} applied to {len(args)} arguments"
                )
            return Injection(args, arity)
        named = _NAME_RE.match(text)
        if named:
            prefix, index = named.group(1), int(named.group(2))
            if prefix == "x":
                if self.pair.nvars == 0:
                    raise ParseError(token.pos, "this pair has no polynomial variables")
                if not 1 <= index <= self.pair.nvars:
                    raise ParseError(token.pos, f"unknown variable {text!r}")
                exponent = 1
                if (
                    self.peek().kind == "^"
                    and self.tokens[self.index + 1].kind == "int"
                ):
                    self.advance()
                    exponent = int(self.advance().text)
                return VariablePower(index, exponent)
            expected = "d" if self.pair.kind == "cartan" else "e"
            if prefix == expected:
                if not 1 <= index <= self.pair.dim:
                    raise ParseError(token.pos, f"unknown generator {text!r}")
                return Generator(index)
        raise ParseError(token.pos, f"unknown symbol {text!r}")


def parse(text: str, pair: LieRinehartPair) -> Expression:
    """Parse an expression against a loaded pair; symbols resolve eagerly."""
    parser = _Parser(text, pair)
    node = parser.parse_expression()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(tail.pos, f"unexpected {tail.text!r}")
    return node


def _as_injection_argument(value: Multivector, pair: LieRinehartPair) -> GradedPairElement:
    for mono in value.terms:
        if len(mono) > 1:
            raise ValueError("injection arguments must have tensor degree at most 1")
    return GradedPairElement(value.scalar_part(), value.vector_part())


def evaluate(node: Expression, pair: LieRinehartPair) -> Multivector:
    """Bottom-up evaluation to a canonical multivector."""
    if isinstance(node, Rational):
        return Multivector.from_scalar(pair, pair.scalar_const(node.value))
    if isinstance(node, VariablePower):
        return Multivector.from_scalar(pair, pair.scalar_variable(node.index) ** node.exponent)
    if isinstance(node, Generator):
        return Multivector.monomial(pair, (node.index,))
    if isinstance(node, Negate):
        return -evaluate(node.child, pair)
    if isinstance(node, BinaryOp):
        left = evaluate(node.left, pair)
        right = evaluate(node.right, pair)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "^":
            return wedge(pair, left, right)
        if node.op == "*":
            left_scalar = all(len(mono) == 0 for mono in left.terms)
            right_scalar = all(len(mono) == 0 for mono in right.terms)
            if not (left_scalar or right_scalar):
                raise ValueError("'*' expects a scalar operand; use '^' for wedge products")
            return wedge(pair, left, right)
        raise AssertionError(node.op)
    if isinstance(node, AntiBracket):
        return sn_antisym(pair, evaluate(node.left, pair), evaluate(node.right, pair))
    if isinstance(node, SymBracket):
        return sn_sym(pair, evaluate(node.left, pair), evaluate(node.right, pair))
    if isinstance(node, NBracket):
        return n_bracket(pair, [evaluate(arg, pair) for arg in node.args])
    if isinstance(node, Differential):
        return ce_differential(pair, evaluate(node.child, pair))
    if isinstance(node, Injection):
        args = [
            _as_injection_argument(evaluate(arg, pair), pair) for arg in node.args
        ]
        return natural_injection(pair, args)
    raise AssertionError(f"unhandled node {node!r}")
