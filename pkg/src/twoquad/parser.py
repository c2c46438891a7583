"""Text syntax for algebra elements.

    expr   := term (('+'|'-') term)* ;
    term   := coeff ('*' factor)* | factor ('*' factor)* ;
    factor := 'x' | 'y' | '(' expr ')' | factor '^' nat ;
    coeff  := rational literal like "3", "-2/5", or extension generator "r1","r2".

A leading sign is accepted on the first term, and coefficients may also
appear after a ``*`` (so rendered output such as ``1/2*r1*x`` reads back).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import Tower, TowerError
from .freealg import FreeElement, Presentation

GRAMMAR = __doc__.split("\n\n")[1].strip("\n")

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ElementSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}")

    def pointer(self) -> str:
        return f"{self.src}\n{' ' * self.pos}^"


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("id", m.group(2), start))
        elif m.group(3):
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, pres: Presentation, tower: Tower | None):
        self.src = src
        self.pres = pres
        self.tower = tower or pres.tower
        self.tokens = _tokenize(src)
        self.i = 0

    def error(self, message, pos=None):
        if pos is None:
            pos = self.tokens[self.i][2]
        raise ElementSyntaxError(message, pos, self.src)

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        k, v, _ = self.tok
        if k == kind and (value is None or v == value):
            self.i += 1
            return v
        return None

    def parse(self) -> FreeElement:
        e = self.expr()
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return e

    def expr(self):
        negate = bool(self.take("op", "-"))
        if not negate:
            self.take("op", "+")
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            if self.take("op", "+"):
                acc = acc + self.term()
            elif self.take("op", "-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = self.factor()
        while self.take("op", "*"):
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        while self.take("op", "^"):
            k, v, pos = self.tok
            if k != "num" or "/" in v:
                self.error("expected a natural exponent")
            self.i += 1
            base = base ** int(v)
        return base

    def atom(self):
        k, v, pos = self.tok
        if k == "num":
            self.i += 1
            try:
                return self.pres.scalar(self.tower(Fraction(v)))
            except ZeroDivisionError:
                self.error(f"coefficient {v} is not in {self.tower.base}", pos)
        if k == "id":
            self.i += 1
            if v == "x":
                return self.pres.x
            if v == "y":
                return self.pres.y
            m = re.fullmatch(r"r(\d+)", v)
            if m:
                try:
                    return self.pres.scalar(self.tower.gen(int(m.group(1))))
                except TowerError:
                    self.error(f"coefficient {v} is not in {self.tower}", pos)
            self.error(f"unknown identifier {v!r}", pos)
        if self.take("op", "("):
            e = self.expr()
            if not self.take("op", ")"):
                self.error("expected ')'")
            return e
        if k == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {v!r}")


def parse_element(src: str, pres: Presentation, tower: Tower | None = None) -> FreeElement:
    """Parse, expand and normal-form an element.

    ``tower`` supplies the extension generators ``r1, r2``; it defaults to
    the presentation's own coefficient field.
    """
    return _Parser(src, pres, tower).parse()


def parse_scalar(src: str, pres: Presentation, tower: Tower | None = None):
    e = parse_element(src, pres, tower)
    if any(w for w in e.terms):
        raise ElementSyntaxError("expected a scalar", 0, src)
    return e.coeff("").lift(tower or pres.tower) if tower else e.coeff("")
