"""Recursive-descent parser for the polynomial expression grammar.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | NAME | "(" expr ")"

Names match ``[a-z][a-z0-9]*``; the name ``i`` is the imaginary unit.
Whitespace is insignificant. A top-level tuple ``(e1, e2, ...)`` is
accepted by :func:`parse_tuple`.
"""

import re

from ..errors import ParseError
from .gaussian import I, GaussianRational
from .poly import Polynomial
from .rational import RationalFunction, simplify

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(.))")

MALFORMED = "MALFORMED_EXPRESSION"


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("int", int(m.group(1)), col))
        elif m.group(2):
            tokens.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", MALFORMED, column=col)
            tokens.append(("op", ch, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def collect_names(text):
    """Variable names (excluding ``i``) appearing in ``text``."""
    return sorted({tok[1] for tok in _tokenize(text) if tok[0] == "name" and tok[1] != "i"})


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, op):
        tok = self.advance()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", MALFORMED, column=tok[2])
        return tok

    def at(self, op):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == op

    def parse_top(self, allow_tuple):
        if allow_tuple and self.at("("):
            save = self.pos
            self.advance()
            items = [self.expr()]
            if self.at(","):
                while self.at(","):
                    self.advance()
                    items.append(self.expr())
                self.expect(")")
                self.finish()
                return tuple(items)
            self.pos = save
        value = self.expr()
        self.finish()
        return (value,) if allow_tuple else value

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", MALFORMED, column=tok[2])

    def expr(self):
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()[1]
            col = self.peek()[2]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            elif not rhs:
                raise ParseError("division by zero", "DIVISION_BY_ZERO", column=col)
            elif _is_const(rhs):
                value = value * (1 / _const(rhs))
            else:
                value = simplify(RationalFunction(value) / rhs)
        return value

    def unary(self):
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.advance()
            neg = False
            if self.at("-"):
                self.advance()
                neg = True
            tok = self.advance()
            if tok[0] == "op" and tok[1] == "(":
                neg2 = False
                if self.at("-"):
                    self.advance()
                    neg2 = True
                tok = self.advance()
                if tok[0] != "int":
                    raise ParseError("exponent must be an integer", MALFORMED, column=tok[2])
                self.expect(")")
                neg = neg != neg2
            elif tok[0] != "int":
                raise ParseError("exponent must be an integer", MALFORMED, column=tok[2])
            n = tok[1]
            if neg:
                if not base:
                    raise ParseError("zero to a negative power", "DIVISION_BY_ZERO", column=tok[2])
                return simplify(RationalFunction(base) ** (-n)) if not _is_const(base) else (
                    Polynomial.constant(_const(base) ** (-n), self.variables)
                )
            return base ** n
        return base

    def atom(self):
        tok = self.advance()
        kind, value, col = tok
        if kind == "int":
            return Polynomial.constant(value, self.variables)
        if kind == "name":
            if value == "i":
                return Polynomial.constant(I, self.variables)
            return Polynomial.var(value, self.variables)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of expression", MALFORMED, column=col)
        raise ParseError(f"unexpected token {value!r}", MALFORMED, column=col)


def _is_const(v):
    return v.is_constant()


def _const(v):
    return v.constant_value()


def _ring(text, variables):
    names = collect_names(text)
    if variables is None:
        return tuple(names)
    variables = tuple(variables)
    return variables + tuple(n for n in names if n not in variables)


def parse_expression(text, variables=None):
    """Parse one expression into a Polynomial (or RationalFunction if it has a true denominator).

    ``variables`` fixes the ring order; other names found in the text are
    appended alphabetically. Without it the ring is sorted alphabetically.
    """
    if not isinstance(text, str):
        raise ParseError(f"expression must be a string, got {type(text).__name__}", MALFORMED)
    if not text.strip():
        raise ParseError("empty expression", MALFORMED, column=1)
    ring = _ring(text, variables)
    value = _Parser(text, ring).parse_top(allow_tuple=False)
    return _finish(value, ring)


def parse_tuple(text, variables=None):
    """Parse ``"(e1, e2, ...)"`` (or a bare single expression) into a tuple."""
    if not isinstance(text, str):
        raise ParseError(f"expression must be a string, got {type(text).__name__}", MALFORMED)
    if not text.strip():
        raise ParseError("empty expression", MALFORMED, column=1)
    ring = _ring(text, variables)
    values = _Parser(text, ring).parse_top(allow_tuple=True)
    return tuple(_finish(v, ring) for v in values)


def _finish(value, ring):
    if isinstance(value, RationalFunction):
        return value.with_variables(ring).simplify()
    return value.with_variables(ring)


def parse_scalar(text):
    value = parse_expression(str(text))
    if isinstance(value, RationalFunction) or not value.is_constant():
        raise ParseError(f"expected a constant, got {text!r}", MALFORMED)
    return GaussianRational(value.constant_value())
