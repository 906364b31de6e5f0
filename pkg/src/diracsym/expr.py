"""Expression language over the gamma generators.

Grammar (whitespace insignificant, juxtaposition not allowed):

    expr     := term { ("+" | "-") term }
    term     := factor { "*" factor }
    factor   := [ "-" ] ( atom | "(" expr ")" )
    atom     := "g0" | "g1" | "g2" | "g3" | "g5" | "i" | "I" | rational
    rational := integer [ "/" positive-integer ]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import CR_I, ComplexRational


class ExprError(ValueError):
    """Malformed expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownIdentifierError(ExprError):
    pass


@dataclass(frozen=True)
class Generator:
    index: int


@dataclass(frozen=True)
class Gamma5:
    pass


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class ScalarLiteral:
    value: ComplexRational


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Negate:
    child: object


GENERATOR_NAMES = {"g0": 0, "g1": 1, "g2": 2, "g3": 3}

_SYMBOLS = set("+-*/()")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(("SYM", ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("INT", text[start:pos], start))
            continue
        if ch.isalpha():
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(("NAME", text[start:pos], start))
            continue
        raise ExprError(f"unexpected character {ch!r}", pos)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_sym(self, sym: str):
        kind, val, pos = self.peek()
        if kind != "SYM" or val != sym:
            raise ExprError(f"expected {sym!r}", pos)
        return self.take()

    def parse(self):
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "END":
            raise ExprError(f"unexpected {val!r} after expression", pos)
        return e

    def expr(self):
        terms = [self.term()]
        while True:
            kind, val, pos = self.peek()
            if kind == "SYM" and val in "+-":
                self.take()
                t = self.term()
                terms.append(Negate(t) if val == "-" else t)
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while True:
            kind, val, pos = self.peek()
            if kind == "SYM" and val == "*":
                self.take()
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "SYM" and val == "-":
            self.take()
            return Negate(self._primary())
        return self._primary()

    def _primary(self):
        kind, val, pos = self.peek()
        if kind == "SYM" and val == "(":
            self.take()
            inner = self.expr()
            self.expect_sym(")")
            return inner
        return self.atom()

    def atom(self):
        kind, val, pos = self.take()
        if kind == "NAME":
            if val in GENERATOR_NAMES:
                return Generator(GENERATOR_NAMES[val])
            if val == "g5":
                return Gamma5()
            if val == "i":
                return ScalarLiteral(CR_I)
            if val == "I":
                return Identity()
            raise UnknownIdentifierError(f"unknown identifier {val!r}", pos)
        if kind == "INT":
            num = int(val)
            nk, nv, npos = self.peek()
            if nk == "SYM" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "INT":
                    raise ExprError("expected denominator after '/'", dpos)
                den = int(dv)
                if den == 0:
                    raise ExprError("denominator must be positive", dpos)
                return ScalarLiteral(ComplexRational(Fraction(num, den)))
            return ScalarLiteral(ComplexRational(num))
        raise ExprError(f"expected an atom, found {val!r}" if val else "unexpected end of input", pos)


def parse(text: str):
    """Parse an expression string into a GammaExpr AST."""
    return _Parser(text).parse()
