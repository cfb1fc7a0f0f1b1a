"""
Recursive-descent parser for polynomial expressions.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' natural)?
    base   := integer | identifier | '(' expr ')'

Identifiers must be declared ring variables. Implicit multiplication such as
``2X`` or ``X Y`` is rejected. A leading sign is accepted so that printed
polynomials parse back.

Responsibility: Text to PolyZ conversion with positioned syntax errors
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..exceptions import PolynomialSyntaxError, UnknownIdentifierError
from .polynomial import PolyP, PolyZ, reduce_mod_p

logger = logging.getLogger(__name__)

_TOKEN_PATTERN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_PATTERN.match(text, pos)
        if not match:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = tokenize(text)
        self.index = 0
        self.one = PolyZ({(0,) * len(self.variables): 1}, self.variables)

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Token) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, token.position, self.text)

    def _expect_op(self, op: str) -> None:
        token = self.current
        if token.kind != "op" or token.value != op:
            found = token.value or "end of input"
            raise self._error(f"expected {op!r}, found {found!r}", token)
        self._advance()

    def parse(self) -> PolyZ:
        result = self.expr()
        token = self.current
        if token.kind != "end":
            if token.kind in ("int", "ident") or token.value == "(":
                raise self._error("implicit multiplication is not allowed", token)
            raise self._error(f"unexpected {token.value!r}", token)
        return result

    def expr(self) -> PolyZ:
        negate = False
        if self.current.kind == "op" and self.current.value in ("+", "-"):
            negate = self._advance().value == "-"
        result = self.term()
        if negate:
            result = -result
        while self.current.kind == "op" and self.current.value in ("+", "-"):
            op = self._advance().value
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> PolyZ:
        result = self.factor()
        while self.current.kind == "op" and self.current.value == "*":
            self._advance()
            result = result * self.factor()
        return result

    def factor(self) -> PolyZ:
        base = self.base()
        if self.current.kind == "op" and self.current.value == "^":
            self._advance()
            token = self.current
            if token.kind != "int":
                raise self._error("exponent must be a natural number", token)
            self._advance()
            return base ** int(token.value)
        return base

    def base(self) -> PolyZ:
        token = self.current
        if token.kind == "int":
            self._advance()
            return self.one.constant_like(int(token.value))
        if token.kind == "ident":
            self._advance()
            if token.value not in self.variables:
                raise UnknownIdentifierError(f"unknown identifier {token.value!r}", token.position, self.text)
            return PolyZ.variable(token.value, self.variables)
        if token.kind == "op" and token.value == "(":
            self._advance()
            inner = self.expr()
            self._expect_op(")")
            return inner
        found = token.value or "end of input"
        raise self._error(f"unexpected {found!r}", token)


def parse_poly(text: str, variables: Sequence[str]) -> PolyZ:
    """
    Parse a polynomial expression over the integers.

    Args:
        text: Expression such as ``"(X+Y)^2 - 3*Z"``
        variables: Declared variable names in ring order

    Returns:
        PolyZ over ``variables``

    Raises:
        PolynomialSyntaxError: malformed input, with a 0-based position
        UnknownIdentifierError: identifier not among ``variables``

    Example:
        >>> str(parse_poly("(X+Y)^2", ["X", "Y"]))
        'X^2 + 2*X*Y + Y^2'
    """
    return _Parser(text, variables).parse()


def parse_poly_mod_p(text: str, variables: Sequence[str], p: int) -> PolyP:
    return reduce_mod_p(parse_poly(text, variables), p)


def parse_poly_list(texts: Iterable[str], variables: Sequence[str], p: int) -> list[PolyP]:
    """Parse a list of generator strings and reduce them mod p"""
    polys = [parse_poly_mod_p(text, variables, p) for text in texts]
    logger.debug(f"Parsed {len(polys)} polynomials over F_{p}")
    return polys


def split_generators(text: str) -> list[str]:
    """
    Split a comma-separated generator list, respecting parentheses.

    ``"X, (Y+Z)^2"`` gives ``["X", "(Y+Z)^2"]``.
    """
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return [part for part in parts if part]


def expand_juxtaposition(text: str, variables: Sequence[str]) -> str:
    """
    Insert explicit ``*`` between juxtaposed factors for command-line input.

    Only applies when every variable is a single letter, so ``"XY-ZW"`` reads
    as ``"X*Y-Z*W"``. The strict grammar of ``parse_poly`` is unchanged.
    """
    if not all(len(name) == 1 for name in variables):
        return text
    compact = "".join(text.split())
    out: list[str] = []
    for prev, ch in zip(" " + compact, compact):
        if (prev.isalnum() or prev == ")") and (ch.isalpha() or ch == "("):
            out.append("*")
        out.append(ch)
    return "".join(out)
