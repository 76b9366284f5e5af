"""Text form of polynomials.

Grammar (whitespace ignored, `i` is the imaginary unit and cannot name a
variable):

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom (('^' | '**') INTEGER)?
    atom   := INTEGER | 'i' | VARIABLE | '(' expr ')'

Division is allowed by nonzero constants only.
"""

import re
from typing import List, Optional, Sequence, Tuple

from ..exactnum.numbers import GaussianRational, format_gaussian
from ..utils.errors import ParseError
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def default_variables(dimension: int) -> List[str]:
    if dimension <= 3:
        return ["x", "y", "z"][:dimension]
    return [f"x{k + 1}" for k in range(dimension)]


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], field: Optional[str]):
        self.text = text
        self.variables = list(variables)
        self.field = field
        self.dimension = len(self.variables)
        self.tokens: List[Tuple[str, str, int]] = []
        self.position = 0
        self._tokenize()

    def error(self, message: str, offset: Optional[int] = None) -> ParseError:
        if offset is None:
            offset = self.tokens[self.position][2] if self.position < len(self.tokens) else len(self.text)
        line = self.text.count("\n", 0, offset) + 1
        column = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return ParseError(message, field=self.field, line=line, column=column)

    def _tokenize(self) -> None:
        offset = 0
        stripped_end = len(self.text.rstrip())
        while offset < stripped_end:
            match = _TOKEN.match(self.text, offset)
            if not match:
                bad = offset + len(self.text[offset:]) - len(self.text[offset:].lstrip())
                raise self.error(f"unexpected character {self.text[bad]!r}", bad)
            number, name, symbol = match.groups()
            start = match.start(match.lastindex)
            if number is not None:
                self.tokens.append(("number", number, start))
            elif name is not None:
                self.tokens.append(("name", name, start))
            else:
                self.tokens.append(("symbol", symbol, start))
            offset = match.end()

    def peek(self) -> Optional[str]:
        if self.position < len(self.tokens):
            return self.tokens[self.position][1]
        return None

    def take(self) -> Tuple[str, str, int]:
        if self.position >= len(self.tokens):
            raise self.error("unexpected end of input")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise self.error("empty polynomial", 0)
        result = self.expr()
        if self.position != len(self.tokens):
            raise self.error(f"unexpected {self.peek()!r}")
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()[1]
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() in ("*", "/"):
            op, offset = self.take()[1:]
            right = self.factor()
            if op == "*":
                result = result * right
                continue
            if right.degree > 0:
                raise self.error("division by a non-constant", offset)
            divisor = right.constant_term()
            if divisor.is_zero():
                raise self.error("division by zero", offset)
            result = result.scale(divisor.inverse())
        return result

    def factor(self) -> Polynomial:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            kind, value, offset = self.take()
            if kind != "number":
                raise self.error("exponent must be a non-negative integer", offset)
            return base.power(int(value))
        return base

    def atom(self) -> Polynomial:
        kind, value, offset = self.take()
        if kind == "number":
            return Polynomial.constant(int(value), self.dimension)
        if kind == "name":
            if value == "i":
                return Polynomial.constant(GaussianRational(0, 1), self.dimension)
            if value not in self.variables:
                raise self.error(f"unknown variable {value!r}", offset)
            return Polynomial.variable(self.variables.index(value), self.dimension)
        if value == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.take()
            return inner
        raise self.error(f"unexpected {value!r}", offset)


def parse_polynomial(text: str, variables: Sequence[str], field: Optional[str] = None) -> Polynomial:
    """Parse `text` as a polynomial in `variables`.

    Args:
        text: polynomial text, e.g. "x^2 - y" or "(1/2+i)*x*y"
        variables: variable names, in coordinate order
        field: document field name reported in parse errors

    Returns:
        The parsed Polynomial
    """
    if "i" in variables:
        raise ParseError("'i' is reserved for the imaginary unit", field=field)
    return _Parser(text, variables, field).parse()


def _format_monomial(alpha, variables: Sequence[str]) -> str:
    parts = []
    for name, a in zip(variables, alpha):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def _format_term(alpha, c: GaussianRational, variables: Sequence[str]) -> str:
    monomial = _format_monomial(alpha, variables)
    if not monomial:
        return format_gaussian(c)
    if c == 1:
        return monomial
    if c == -1:
        return f"-{monomial}"
    if c.re != 0 and c.im != 0:
        return f"({format_gaussian(c)})*{monomial}"
    return f"{format_gaussian(c)}*{monomial}"


def format_polynomial(P: Polynomial, variables: Optional[Sequence[str]] = None) -> str:
    """Canonical text, terms in graded-lex descending order."""
    if variables is None:
        variables = default_variables(P.dimension)
    if P.is_zero():
        return "0"
    text = ""
    for alpha, c in P.items():
        term = _format_term(alpha, c, variables)
        if not text:
            text = term
        elif term.startswith("-"):
            text += f" - {term[1:]}"
        else:
            text += f" + {term}"
    return text
