"""Surface syntax for algebra elements.

Grammar (whitespace insensitive, left associative, juxtaposition
multiplies):

    expr      := ['-'|'+'] term (('+'|'-') term)*
    term      := factor ('*'? factor)*
    factor    := atom ('^' uint)?
    atom      := rational | generator | '(' expr ')' | '[' expr ',' expr ']'
    generator := ('a'|'p'|'q'|'pt'|'qt') '(' int ',' int ')'
    rational  := uint ('/' uint)?

The atoms a(i,n) are single oscillator generators (n != 0); p, q, pt, qt
are the creation/annihilation family members and their transposed variants
at a nonnegative level.  Square brackets form the commutator x*y - y*x.
Printing a normally ordered element and re-parsing it round-trips exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .generators import PLAIN, TRANSPOSED, expand_p, expand_q
from .heisenberg import BasisIndexError, Element, InvalidModeError


class ExprSyntaxError(ValueError):
    """Malformed expression text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


@dataclass(frozen=True)
class RationalNode:
    value: Fraction


@dataclass(frozen=True)
class GeneratorNode:
    kind: str  # one of a, p, q, pt, qt
    index: int
    arg: int  # mode for a-atoms, level for family atoms


@dataclass(frozen=True)
class ProductNode:
    factors: tuple


@dataclass(frozen=True)
class SumNode:
    items: tuple  # pairs (sign, node) with sign +1 or -1


@dataclass(frozen=True)
class PowerNode:
    base: object
    exponent: int


@dataclass(frozen=True)
class CommutatorNode:
    left: object
    right: object


ExprNode = Union[RationalNode, GeneratorNode, ProductNode, SumNode, PowerNode, CommutatorNode]

_GENERATOR_NAMES = ("a", "p", "q", "pt", "qt")
_PUNCT = "()[],+-*^/"


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, NAME, one of the punctuation characters, or EOF
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("NUMBER", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        line, col = _line_col(text, i)
        raise ExprSyntaxError("unexpected character %r" % ch, line, col)
    tokens.append(_Token("EOF", "", n))
    return tokens


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last_newline = text.rfind("\n", 0, pos)
    return line, pos - last_newline


class _Parser:
    def __init__(self, text: str, dimension: int) -> None:
        self.text = text
        self.dimension = dimension
        self.tokens = _tokenize(text)
        self.at = 0

    def _peek(self) -> _Token:
        return self.tokens[self.at]

    def _next(self) -> _Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def _error(self, message: str, tok: _Token):
        line, col = _line_col(self.text, tok.pos)
        raise ExprSyntaxError(message, line, col)

    def _expect(self, kind: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            self._error("expected %r, found %r" % (kind, tok.text or "end of input"), tok)
        return tok

    def parse(self) -> ExprNode:
        node = self._expr()
        tok = self._peek()
        if tok.kind != "EOF":
            self._error("unexpected trailing input %r" % tok.text, tok)
        return node

    def _expr(self) -> ExprNode:
        items = []
        sign = 1
        if self._peek().kind in ("+", "-"):
            sign = -1 if self._next().kind == "-" else 1
        items.append((sign, self._term()))
        while self._peek().kind in ("+", "-"):
            sign = -1 if self._next().kind == "-" else 1
            items.append((sign, self._term()))
        if len(items) == 1 and items[0][0] == 1:
            return items[0][1]
        return SumNode(tuple(items))

    def _term(self) -> ExprNode:
        factors = [self._factor()]
        while True:
            tok = self._peek()
            if tok.kind == "*":
                self._next()
                factors.append(self._factor())
            elif tok.kind in ("NUMBER", "NAME", "(", "["):
                factors.append(self._factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return ProductNode(tuple(factors))

    def _factor(self) -> ExprNode:
        base = self._atom()
        if self._peek().kind == "^":
            self._next()
            tok = self._expect("NUMBER")
            return PowerNode(base, int(tok.text))
        return base

    def _atom(self) -> ExprNode:
        tok = self._peek()
        if tok.kind == "NUMBER":
            return RationalNode(self._rational())
        if tok.kind == "NAME":
            return self._generator()
        if tok.kind == "(":
            self._next()
            node = self._expr()
            self._expect(")")
            return node
        if tok.kind == "[":
            self._next()
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("]")
            return CommutatorNode(left, right)
        self._error("expected a number, generator, or bracketed expression, found %r"
                    % (tok.text or "end of input"), tok)

    def _rational(self) -> Fraction:
        numerator = int(self._expect("NUMBER").text)
        if self._peek().kind == "/":
            self._next()
            tok = self._expect("NUMBER")
            denominator = int(tok.text)
            if denominator == 0:
                self._error("zero denominator", tok)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _int(self) -> int:
        sign = 1
        if self._peek().kind == "-":
            self._next()
            sign = -1
        tok = self._expect("NUMBER")
        return sign * int(tok.text)

    def _generator(self) -> GeneratorNode:
        tok = self._next()
        kind = tok.text
        if kind not in _GENERATOR_NAMES:
            self._error("unknown generator name %r" % kind, tok)
        self._expect("(")
        index = self._int()
        self._expect(",")
        arg = self._int()
        self._expect(")")
        line, col = _line_col(self.text, tok.pos)
        if not (0 <= index < self.dimension):
            raise BasisIndexError(
                "basis index %d out of range [0, %d) at line %d, column %d"
                % (index, self.dimension, line, col)
            )
        if kind == "a" and arg == 0:
            raise InvalidModeError(
                "generator a(%d,0) has zero mode at line %d, column %d" % (index, line, col)
            )
        if kind != "a" and arg < 0:
            raise InvalidModeError(
                "family level must be nonnegative, got %s(%d,%d) at line %d, column %d"
                % (kind, index, arg, line, col)
            )
        return GeneratorNode(kind, index, arg)


def parse_expr(text: str, config) -> ExprNode:
    """Parse expression text against a configuration (which fixes the
    dimension used to validate basis indices)."""
    return _Parser(text, config.dimension).parse()


def to_element(node: ExprNode) -> Element:
    """Evaluate an AST into an Element of the free algebra."""
    if isinstance(node, RationalNode):
        return Element.scalar(node.value)
    if isinstance(node, GeneratorNode):
        if node.kind == "a":
            return Element.generator(node.index, node.arg)
        if node.kind == "p":
            return expand_p(node.index, node.arg, PLAIN)
        if node.kind == "pt":
            return expand_p(node.index, node.arg, TRANSPOSED)
        if node.kind == "q":
            return expand_q(node.index, node.arg, PLAIN)
        return expand_q(node.index, node.arg, TRANSPOSED)
    if isinstance(node, ProductNode):
        result = Element.one()
        for factor in node.factors:
            result = result * to_element(factor)
        return result
    if isinstance(node, SumNode):
        result = Element.zero()
        for sign, item in node.items:
            result = result + sign * to_element(item)
        return result
    if isinstance(node, PowerNode):
        return to_element(node.base) ** node.exponent
    if isinstance(node, CommutatorNode):
        left, right = to_element(node.left), to_element(node.right)
        return left * right - right * left
    raise TypeError("not an expression node: %r" % (node,))


def evaluate(text: str, config) -> Element:
    """Parse and evaluate in one step."""
    return to_element(parse_expr(text, config))
