"""Exact scalars: the rationals, prime fields, and short towers of quadratic
extensions over them.

A tower element is stored as a flat tuple of base scalars of length
``2**height``.  Coordinate ``j`` multiplies the product of the generators
``r(i+1)`` for which bit ``i`` of ``j`` is set, so the top generator splits
the tuple into a low and a high half.  Base scalars are ``mpq`` over the
rationals (``gmpy2.mpq``) and plain ``int`` residues over ``F_p``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt

from gmpy2 import mpq

MAX_HEIGHT = 2

NUMBER = (int, Fraction, type(mpq()))


class TowerError(ValueError):
    """Raised when towers are mixed or an adjunction is not allowed."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class BaseField:
    """``BaseField()`` is Q, ``BaseField(p)`` is F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, spec: str) -> "BaseField":
        spec = spec.strip()
        if spec in ("Q", "QQ"):
            return cls()
        if spec.startswith("Fp:"):
            try:
                p = int(spec[3:])
            except ValueError:
                raise ValueError(f"bad field specification {spec!r}") from None
            return cls(p)
        raise ValueError(f"bad field specification {spec!r} (expected 'Q' or 'Fp:<prime>')")

    @property
    def char(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    def scalar(self, value):
        """Canonical base scalar from an int, rational or literal string."""
        if isinstance(value, str):
            value = mpq(value)
        if not self.p:
            return mpq(value)
        if not isinstance(value, int):
            value = mpq(value)
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} is not defined in F_{self.p}")
            return int(value.numerator) * pow(int(value.denominator), -1, self.p) % self.p
        return int(value) % self.p

    def elements(self):
        if not self.p:
            raise ValueError("Q is infinite")
        return range(self.p)

    def sqrt(self, s):
        """A square root of the base scalar ``s`` or None."""
        p = self.p
        if not p:
            if s < 0:
                return None
            n, d = isqrt(s.numerator), isqrt(s.denominator)
            if n * n == s.numerator and d * d == s.denominator:
                return mpq(n, d)
            return None
        if s == 0 or p == 2:
            return s
        if pow(s, (p - 1) // 2, p) != 1:
            return None
        # Tonelli-Shanks
        q, m = p - 1, 0
        while q % 2 == 0:
            q //= 2
            m += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c, x, r = pow(z, q, p), pow(s, (q + 1) // 2, p), pow(s, q, p)
        while r != 1:
            i, rr = 0, r
            while rr != 1:
                rr = rr * rr % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            x, r = x * b % p, r * b * b % p
        return x

    def __str__(self):
        return f"Fp:{self.p}" if self.p else "Q"


@dataclass(frozen=True)
class Step:
    """Generator ``r`` adjoined with ``r^2 + p*r + q = 0``; p, q are coords
    in the tower below."""

    p: tuple
    q: tuple


@dataclass(frozen=True)
class Tower:
    base: BaseField
    steps: tuple[Step, ...] = ()

    @property
    def height(self) -> int:
        return len(self.steps)

    @property
    def dim(self) -> int:
        return 1 << len(self.steps)

    @cached_property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (self.base.scalar(0),) * self.dim)

    @cached_property
    def one(self) -> "FieldElement":
        return self(1)

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction, literal string or FieldElement."""
        if isinstance(value, FieldElement):
            return value.lift(self)
        s = self.base.scalar(value)
        return FieldElement(self, (s,) + (self.base.scalar(0),) * (self.dim - 1))

    def gen(self, i: int) -> "FieldElement":
        """The generator ``r<i>``, 1-based."""
        if not 1 <= i <= self.height:
            raise TowerError(f"r{i} is not defined over {self}")
        zero = self.base.scalar(0)
        coords = [zero] * self.dim
        coords[1 << (i - 1)] = self.base.scalar(1)
        return FieldElement(self, tuple(coords))

    def truncate(self, height: int) -> "Tower":
        return Tower(self.base, self.steps[:height])

    def extends(self, other: "Tower") -> bool:
        return self.base == other.base and self.steps[: other.height] == other.steps

    def join(self, other: "Tower") -> "Tower":
        if self is other or self == other:
            return self
        if self.extends(other):
            return self
        if other.extends(self):
            return other
        raise TowerError(f"incompatible towers {self} and {other}")

    def extend(self, p: "FieldElement", q: "FieldElement") -> "Tower":
        if self.height >= MAX_HEIGHT:
            raise TowerError(f"tower height would exceed {MAX_HEIGHT}")
        return Tower(self.base, self.steps + (Step(p.lift(self).coords, q.lift(self).coords),))

    @property
    def order(self) -> int | None:
        return self.base.p ** self.dim if self.base.p else None

    def elements(self):
        """All elements of a finite tower; base-field elements come first."""
        for coords in itertools.product(self.base.elements(), repeat=self.dim):
            yield FieldElement(self, coords[::-1])

    def random(self, rng: random.Random, bound: int = 3) -> "FieldElement":
        if self.base.p:
            coords = tuple(rng.randrange(self.base.p) for _ in range(self.dim))
        else:
            coords = tuple(mpq(rng.randint(-bound, bound)) for _ in range(self.dim))
        return FieldElement(self, coords)

    def describe(self) -> list[str]:
        """One line per generator giving its minimal polynomial."""
        lines = []
        for i, step in enumerate(self.steps, start=1):
            below = self.truncate(i - 1)
            r = f"r{i}"
            text = f"{r}^2"
            for coef, mon in ((FieldElement(below, step.p), r), (FieldElement(below, step.q), "")):
                if coef.is_zero():
                    continue
                c = coef.render(parenthesize=True)
                if c.startswith("-"):
                    text += " - "
                    c = c[1:]
                else:
                    text += " + "
                if mon:
                    text += mon if c == "1" else f"{c}*{mon}"
                else:
                    text += c
            lines.append(f"{text} = 0")
        return lines

    def __str__(self):
        if not self.steps:
            return str(self.base)
        return f"{self.base}({', '.join(f'r{i}' for i in range(1, self.height + 1))})"


# Coordinate arithmetic.  ``k`` is the tower level the tuples live at.

def _add(p, a, b):
    if p:
        return tuple((x + y) % p for x, y in zip(a, b))
    return tuple(x + y for x, y in zip(a, b))


def _sub(p, a, b):
    if p:
        return tuple((x - y) % p for x, y in zip(a, b))
    return tuple(x - y for x, y in zip(a, b))


def _neg(p, a):
    if p:
        return tuple(-x % p for x in a)
    return tuple(-x for x in a)


def _is_zero(a):
    return not any(a)


def _mul(tower, k, a, b):
    p = tower.base.p
    if k == 0:
        return ((a[0] * b[0]) % p,) if p else (a[0] * b[0],)
    h = 1 << (k - 1)
    a0, a1, b0, b1 = a[:h], a[h:], b[:h], b[h:]
    step = tower.steps[k - 1]
    lo = _mul(tower, k - 1, a0, b0)
    if _is_zero(a1) or _is_zero(b1):
        hi = _add(p, _mul(tower, k - 1, a0, b1), _mul(tower, k - 1, a1, b0))
        return lo + hi
    top = _mul(tower, k - 1, a1, b1)
    hi = _add(p, _mul(tower, k - 1, a0, b1), _mul(tower, k - 1, a1, b0))
    lo = _sub(p, lo, _mul(tower, k - 1, step.q, top))
    if not _is_zero(step.p):
        hi = _sub(p, hi, _mul(tower, k - 1, step.p, top))
    return lo + hi


def _inv(tower, k, a):
    p = tower.base.p
    if k == 0:
        if not a[0]:
            raise ZeroDivisionError("division by zero in field")
        return (pow(a[0], -1, p),) if p else (1 / a[0],)
    h = 1 << (k - 1)
    a0, a1 = a[:h], a[h:]
    step = tower.steps[k - 1]
    if _is_zero(a1):
        return _inv(tower, k - 1, a0) + a1
    # conjugate under r -> -p - r, norm a0^2 - p*a0*a1 + q*a1^2
    conj0 = _sub(p, a0, _mul(tower, k - 1, step.p, a1))
    norm = _add(p, _mul(tower, k - 1, a0, conj0), _mul(tower, k - 1, step.q, _mul(tower, k - 1, a1, a1)))
    ninv = _inv(tower, k - 1, norm)
    return _mul(tower, k - 1, conj0, ninv) + _neg(p, _mul(tower, k - 1, a1, ninv))


class FieldElement:
    __slots__ = ("tower", "coords")

    def __init__(self, tower: Tower, coords: tuple):
        self.tower = tower
        self.coords = tuple(coords)

    # coercion
    def lift(self, tower: Tower) -> "FieldElement":
        if tower is self.tower or tower == self.tower:
            return self
        if not tower.extends(self.tower):
            raise TowerError(f"cannot embed {self.tower} into {tower}")
        zero = tower.base.scalar(0)
        return FieldElement(tower, self.coords + (zero,) * (tower.dim - len(self.coords)))

    def _pair(self, other):
        if isinstance(other, FieldElement):
            if other.tower is self.tower:
                return self.tower, self.coords, other.coords
            t = self.tower.join(other.tower)
            return t, self.lift(t).coords, other.lift(t).coords
        if isinstance(other, NUMBER):
            return self.tower, self.coords, self.tower(other).coords
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _add(t.base.p, a, b))

    __radd__ = __add__

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _sub(t.base.p, a, b))

    def __rsub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _sub(t.base.p, b, a))

    def __neg__(self):
        return FieldElement(self.tower, _neg(self.tower.base.p, self.coords))

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _mul(t, t.height, a, b))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        t = self.tower
        return FieldElement(t, _inv(t, t.height, self.coords))

    def __truediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _mul(t, t.height, a, _inv(t, t.height, b)))

    def __rtruediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        t, a, b = pr
        return FieldElement(t, _mul(t, t.height, b, _inv(t, t.height, a)))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.tower.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def is_one(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def __eq__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        _, a, b = pr
        return a == b

    def __hash__(self):
        c = list(self.coords)
        while len(c) > 1 and not c[-1]:
            c.pop()
        return hash((self.tower.base, tuple(c)))

    def key(self) -> tuple:
        """Total order used to sort roots: lexicographic on coordinates."""
        return tuple(self.coords)

    @property
    def in_base(self) -> bool:
        return not any(self.coords[1:])

    def sqrt(self) -> "FieldElement | None":
        """A square root inside the current tower, or None."""
        t = self.tower
        if t.base.p == 2:
            for r in t.elements():
                if r * r == self:
                    return r
            return None
        c = _sqrt(t, t.height, self.coords)
        return None if c is None else FieldElement(t, c)

    def render(self, parenthesize: bool = False) -> str:
        p = self.tower.base.p
        parts = []
        for j, c in enumerate(self.coords):
            if not c:
                continue
            mon = "*".join(f"r{i + 1}" for i in range(self.tower.height) if j >> i & 1)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif not p and c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        if not parts:
            return "0"
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        if parenthesize and len(parts) > 1:
            return f"({text})"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FieldElement({self.render()!r} in {self.tower})"


def _sqrt(tower, k, a):
    """Square root of coords ``a`` at level ``k`` (odd characteristic)."""
    p = tower.base.p
    if k == 0:
        s = tower.base.sqrt(a[0])
        return None if s is None else (s,)
    h = 1 << (k - 1)
    a0, a1 = a[:h], a[h:]
    step = tower.steps[k - 1]
    if not _is_zero(step.p):
        raise TowerError("square roots need generators of the form r^2 = D")
    D = _neg(p, step.q)
    zero = (tower.base.scalar(0),) * h
    if _is_zero(a1):
        s = _sqrt(tower, k - 1, a0)
        if s is not None:
            return s + zero
        w = _sqrt(tower, k - 1, _mul(tower, k - 1, a0, _inv(tower, k - 1, D)))
        return None if w is None else zero + w
    # (s + w r)^2 = a0 + a1 r  <=>  s^2 + D w^2 = a0, 2 s w = a1
    norm = _sub(p, _mul(tower, k - 1, a0, a0), _mul(tower, k - 1, D, _mul(tower, k - 1, a1, a1)))
    n = _sqrt(tower, k - 1, norm)
    if n is None:
        return None
    half = _inv(tower, k - 1, tower.truncate(k - 1)(2).coords)
    for sign in (n, _neg(p, n)):
        c = _mul(tower, k - 1, _add(p, a0, sign), half)
        s = _sqrt(tower, k - 1, c)
        if s is None or _is_zero(s):
            continue
        w = _mul(tower, k - 1, a1, _inv(tower, k - 1, _add(p, s, s)))
        cand = s + w
        if _mul(tower, k, cand, cand) == tuple(a):
            return cand
    return None


def _reduce_radicand(d: FieldElement):
    """Write ``d = m * k^2`` with ``m`` as small as cheaply possible.

    Over Q a rational radicand becomes a square-free integer (trial division
    up to 10^4); otherwise ``d`` is returned unchanged with ``k = 1``.
    """
    t = d.tower
    if t.base.p or not d.in_base:
        return d, t.one
    r = d.coords[0]
    n = int(r.numerator * r.denominator)
    k = 1
    f = 2
    while f * f <= abs(n) and f <= 10_000:
        while n % (f * f) == 0:
            n //= f * f
            k *= f
        f += 1
    return t(n), t(mpq(k, r.denominator))


def adjoin_root(tower: Tower, a, b):
    """Split ``r^2 + a r + b`` over ``tower``.

    Returns ``(tower', eta1, eta2)`` with ``eta1 <= eta2`` in the coordinate
    order; ``tower'`` is ``tower`` itself when a root already exists.
    """
    a, b = tower(a), tower(b)
    if a.tower != tower or b.tower != tower:
        raise TowerError("coefficients do not lie in the given tower")
    if tower.base.p == 2:
        roots = [r for r in tower.elements() if r * r + a * r + b == 0]
        if roots:
            r = roots[0]
            pair = (r, a + r)
        else:
            tower = tower.extend(a, b)
            r = tower.gen(tower.height)
            pair = (r, r + a)
    else:
        half_a = a / 2
        disc = half_a * half_a - b
        s = disc.sqrt()
        if s is None:
            gen_sq, scale = _reduce_radicand(disc)
            tower = tower.extend(tower.zero, -gen_sq)
            s = tower.gen(tower.height) * scale
            half_a = half_a.lift(tower)
        pair = (-half_a - s, -half_a + s)
    eta1, eta2 = sorted(pair, key=FieldElement.key)
    for r in (eta1, eta2):
        if r * r + a * r + b != 0:
            raise ArithmeticError(f"root check failed for {r}")
    return tower, eta1, eta2
