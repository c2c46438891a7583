"""The algebra K<x, y | x^2 + a x + b = 0, y^2 + c y + d = 0>.

Elements are finite linear combinations of alternating words, i.e. words in
``x`` and ``y`` without a repeated adjacent letter.  Words are plain strings
over ``"xy"``; the empty string is the unit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .field import NUMBER, BaseField, FieldElement, Tower


def word_key(w: str):
    """Total order on words: length first, then ``x < y`` letterwise."""
    return (len(w), w)


def is_alternating(w: str) -> bool:
    return "xx" not in w and "yy" not in w


def basis_words(n: int) -> list[str]:
    """Alternating words of length <= n in the fixed total order."""
    words = [""]
    for k in range(1, n + 1):
        for first in "xy":
            other = "y" if first == "x" else "x"
            words.append("".join(first if i % 2 == 0 else other for i in range(k)))
    return words


@dataclass(frozen=True)
class Presentation:
    """Coefficients of the two defining quadratics."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @classmethod
    def over(cls, field: BaseField | Tower, a, b, c, d) -> "Presentation":
        tower = field if isinstance(field, Tower) else Tower(field)
        return cls(tower(a), tower(b), tower(c), tower(d))

    @cached_property
    def tower(self) -> Tower:
        t = self.a.tower
        for e in (self.b, self.c, self.d):
            t = t.join(e.tower)
        return t

    @cached_property
    def _products(self) -> dict:
        return {}

    @cached_property
    def _raw_products(self) -> dict:
        return {}

    @property
    def field(self) -> BaseField:
        return self.tower.base

    def relation(self, letter: str) -> tuple[FieldElement, FieldElement]:
        """``(s, r)`` with ``letter^2 = -s*letter - r``."""
        return (self.a, self.b) if letter == "x" else (self.c, self.d)

    # element constructors
    def element(self, terms=None) -> "FreeElement":
        return FreeElement(self, terms or {})

    def scalar(self, value) -> "FreeElement":
        value = value if isinstance(value, FieldElement) else self.tower(value)
        return FreeElement(self, {"": value} if value else {})

    @property
    def one(self) -> "FreeElement":
        return self.scalar(1)

    @property
    def zero(self) -> "FreeElement":
        return FreeElement(self, {})

    @property
    def x(self) -> "FreeElement":
        return FreeElement(self, {"x": self.tower.one})

    @property
    def y(self) -> "FreeElement":
        return FreeElement(self, {"y": self.tower.one})

    def word(self, w: str) -> "FreeElement":
        """Normal form of an arbitrary (possibly non-alternating) word."""
        return normal_form({w: self.tower.one}, self)

    def __str__(self):
        return (f"{self.field}: x^2 + ({self.a})x + ({self.b}) = 0, "
                f"y^2 + ({self.c})y + ({self.d}) = 0")


def _accumulate(terms: dict, w: str, c: FieldElement):
    old = terms.get(w)
    v = c if old is None else old + c
    if v.is_zero():
        terms.pop(w, None)
    else:
        terms[w] = v


def word_product(pres: Presentation, w1: str, w2: str) -> tuple[tuple[str, FieldElement], ...]:
    """Normal form of the product of two alternating words."""
    if not w1 or not w2 or w1[-1] != w2[0]:
        return ((w1 + w2, pres.tower.one),)
    cache = pres._products
    key = (w1, w2)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _collapse(pres, w1, w2)
    return hit


def _collapse(pres: Presentation, w1: str, w2: str):
    s, r = pres.relation(w1[-1])
    out: dict = {}
    # w1 = A l, w2 = l B:  A l l B = -s A l B - r A B
    if not s.is_zero():
        _accumulate(out, w1 + w2[1:], -s)
    if not r.is_zero():
        for w, c in word_product(pres, w1[:-1], w2[1:]):
            _accumulate(out, w, -r * c)
    return tuple(sorted(out.items(), key=lambda kv: word_key(kv[0])))


def normal_form(raw, pres: Presentation) -> "FreeElement":
    """Rewrite a combination of arbitrary words to alternating words.

    ``raw`` maps words (or is an iterable of ``(word, coeff)`` pairs).  The
    leftmost square ``ll`` is replaced by ``-s l - r`` until no square is
    left; each step shortens the word, so this terminates.
    """
    items = raw.items() if isinstance(raw, dict) else raw
    done: dict = {}
    todo: dict = {}
    for w, c in items:
        c = c if isinstance(c, FieldElement) else pres.tower(c)
        _accumulate(todo, w, c)
    while todo:
        w, c = todo.popitem()
        i = _leftmost_square(w)
        if i < 0:
            _accumulate(done, w, c)
            continue
        s, r = pres.relation(w[i])
        if not s.is_zero():
            _accumulate(todo, w[:i + 1] + w[i + 2:], -s * c)
        if not r.is_zero():
            _accumulate(todo, w[:i] + w[i + 2:], -r * c)
    return FreeElement(pres, done)


def _leftmost_square(w: str) -> int:
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return i
    return -1


class FreeElement:
    """A normal-form element; treat as immutable."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict):
        self.pres = pres
        self.terms = terms

    @property
    def tower(self) -> Tower:
        t = self.pres.tower
        for c in self.terms.values():
            t = t.join(c.tower)
        return t

    def items(self):
        """Terms in the fixed word order."""
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def words(self) -> list[str]:
        return [w for w, _ in self.items()]

    def coeff(self, w: str) -> FieldElement:
        return self.terms.get(w, self.pres.tower.zero)

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _other(self, other):
        if isinstance(other, FreeElement):
            if other.pres is not self.pres and other.pres != self.pres:
                raise ValueError("elements of different presentations")
            return other
        if isinstance(other, NUMBER + (FieldElement,)):
            return self.pres.scalar(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(terms, w, c)
        return FreeElement(self.pres, terms)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, NUMBER + (FieldElement,)):
            if not isinstance(other, FieldElement):
                other = self.pres.tower(other)
            if other.is_zero():
                return self.pres.zero
            return FreeElement(self.pres, {w: c * other for w, c in self.terms.items()})
        other = self._other(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, NUMBER + (FieldElement,)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.pres.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NUMBER + (FieldElement,)):
            other = self.pres.scalar(other)
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.pres == other.pres and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            mon = "*".join(w)
            cs = c.render(parenthesize=True)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                parts.append(f"{cs}*{mon}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FreeElement({self.render()!r})"

    def to_json(self) -> list[dict]:
        return [{"word": w, "coeff": c.render()} for w, c in self.items()]

    @classmethod
    def from_json(cls, data, pres: Presentation, tower: Tower | None = None) -> "FreeElement":
        from .parser import parse_scalar

        raw = [(d["word"], parse_scalar(str(d["coeff"]), pres, tower)) for d in data]
        return normal_form(raw, pres)


def multiply(e1: FreeElement, e2: FreeElement) -> FreeElement:
    pres = e1.pres
    if e2.pres is not pres and e2.pres != pres:
        raise ValueError("elements of different presentations")
    base = pres.tower
    if base.height == 0 and all(c.tower is base for c in e1.terms.values()) \
            and all(c.tower is base for c in e2.terms.values()):
        return _multiply_base(e1, e2)
    out: dict = {}
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            c = c1 * c2
            for w, k in word_product(pres, w1, w2):
                _accumulate(out, w, c if k.is_one() else c * k)
    return FreeElement(pres, out)


def _raw_product(pres: Presentation, w1: str, w2: str):
    cache = pres._raw_products
    key = (w1, w2)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = tuple((w, k.coords[0]) for w, k in word_product(pres, w1, w2))
    return hit


def _multiply_base(e1: FreeElement, e2: FreeElement) -> FreeElement:
    """``multiply`` on bare base-field scalars (no tower generators)."""
    pres = e1.pres
    tower = pres.tower
    p = tower.base.p
    out: dict = {}
    get = out.get
    right = [(w2, c2.coords[0]) for w2, c2 in e2.terms.items()]
    for w1, c1 in e1.terms.items():
        s1 = c1.coords[0]
        for w2, s2 in right:
            s = s1 * s2
            if not w1 or not w2 or w1[-1] != w2[0]:
                w = w1 + w2
                out[w] = get(w, 0) + s
                continue
            for w, k in _raw_product(pres, w1, w2):
                out[w] = get(w, 0) + s * k
    if p:
        return FreeElement(pres, {w: FieldElement(tower, (v % p,)) for w, v in out.items() if v % p})
    return FreeElement(pres, {w: FieldElement(tower, (v,)) for w, v in out.items() if v})


def substitute(e: FreeElement, images: dict, one):
    """Evaluate ``e`` with ``x, y`` replaced by ``images['x'], images['y']``
    in any ring whose elements support ``+`` and ``*``; ``one`` is its unit."""
    cache = {"": one}

    def image(w):
        if w not in cache:
            cache[w] = image(w[:-1]) * images[w[-1]]
        return cache[w]

    acc = None
    for w, c in e.items():
        term = image(w) * c
        acc = term if acc is None else acc + term
    return acc if acc is not None else one * 0


def random_element(pres: Presentation, rng: random.Random, degree: int, density: float = 0.6) -> FreeElement:
    """Random element supported on basis words of length <= degree."""
    terms: dict = {}
    for w in basis_words(degree):
        if rng.random() < density:
            c = pres.tower.random(rng)
            if not c.is_zero():
                terms[w] = c
    return FreeElement(pres, terms)
