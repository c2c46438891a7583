"""Polynomial-identity evaluation: standard identities, the Hall identity,
and a seeded random falsification suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .field import FieldElement
from .freealg import FreeElement, Presentation, basis_words, random_element


@dataclass(frozen=True)
class PolyIdentity:
    """Integer combination of monomials in variables ``0..arity-1``.

    For multilinear identities every monomial is a permutation.
    """

    name: str
    arity: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def is_multilinear(self) -> bool:
        return all(sorted(m) == list(range(self.arity)) for m, _ in self.terms)


def _parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_identity(n: int) -> PolyIdentity:
    terms = tuple((p, _parity(p)) for p in itertools.permutations(range(n)))
    return PolyIdentity(f"S{n}", n, terms)


def _expand(factors) -> dict:
    """Product of sums of monomials, each given as a dict monomial -> coeff."""
    out = {(): 1}
    for f in factors:
        nxt: dict = {}
        for m1, c1 in out.items():
            for m2, c2 in f.items():
                m = m1 + m2
                nxt[m] = nxt.get(m, 0) + c1 * c2
        out = {m: c for m, c in nxt.items() if c}
    return out


def hall_identity() -> PolyIdentity:
    """``[[x0, x1]^2, x2]`` expanded into monomials."""
    comm = {(0, 1): 1, (1, 0): -1}
    sq = _expand([comm, comm])
    terms: dict = {}
    for m, c in sq.items():
        terms[m + (2,)] = terms.get(m + (2,), 0) + c
        terms[(2,) + m] = terms.get((2,) + m, 0) - c
    return PolyIdentity("Hall", 3, tuple(sorted((m, c) for m, c in terms.items() if c)))


S2, S3, S4 = standard_identity(2), standard_identity(3), standard_identity(4)
HALL = hall_identity()


def evaluate_identity(ident: PolyIdentity, args):
    """Evaluate on elements of any ring with ``+``, ``*`` and integer scaling."""
    if len(args) != ident.arity:
        raise ValueError(f"{ident.name} takes {ident.arity} arguments, got {len(args)}")
    cache: dict = {}

    def prod(m):
        if m not in cache:
            cache[m] = args[m[0]] if len(m) == 1 else prod(m[:-1]) * args[m[-1]]
        return cache[m]

    return _combine(ident, prod)


def _combine(ident: PolyIdentity, prod):
    values = [(prod(m), c) for m, c in ident.terms]
    if isinstance(values[0][0], FreeElement):
        return _combine_free(values)
    acc = None
    for v, c in values:
        term = v * c
        acc = term if acc is None else acc + term
    return acc


def _combine_free(values) -> FreeElement:
    """Integer combination of algebra elements, summed on raw coordinates.

    A coefficient's coords are a prefix of its lift to a taller tower, so
    sums can be kept per (word, coordinate index) and lifted at the end.
    """
    pres = values[0][0].pres
    tower = pres.tower
    acc: dict = {}
    get = acc.get
    for e, c in values:
        for w, k in e.terms.items():
            if k.tower is not tower:
                tower = tower.join(k.tower)
            for j, x in enumerate(k.coords):
                key = (w, j)
                acc[key] = get(key, 0) + c * x
    p = tower.base.p
    coords: dict = {}
    zero = tower.base.scalar(0)
    for (w, j), x in acc.items():
        x = x % p if p else x
        if x:
            coords.setdefault(w, [zero] * tower.dim)[j] = x
    return FreeElement(pres, {w: FieldElement(tower, tuple(v)) for w, v in coords.items()})


def hall_check(e1: FreeElement, e2: FreeElement, e3: FreeElement) -> FreeElement:
    c = e1 * e2 - e2 * e1
    s = c * c
    return s * e3 - e3 * s


@dataclass
class IdentityReport:
    identity: str
    samples: int
    failures: int = 0
    first_counterexample: list | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "samples": self.samples,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class SuiteReport:
    presentation: str
    seed: int
    degree_bound: int
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation,
            "seed": self.seed,
            "degree_bound": self.degree_bound,
            "passed": self.passed,
            "reports": [r.to_json() for r in self.reports],
        }


def _record(report: IdentityReport, value, args):
    if not value.is_zero():
        report.failures += 1
        if report.first_counterexample is None:
            report.first_counterexample = [a.render() for a in args]


def randomized_suite(pres: Presentation, samples: int, degree_bound: int, seed: int) -> SuiteReport:
    """Evaluate S4 and the Hall identity on seeded random elements."""
    if samples < 0 or degree_bound < 1:
        raise ValueError("samples must be >= 0 and degree_bound >= 1")
    rng = random.Random(seed)
    s4 = IdentityReport("S4", samples)
    hall = IdentityReport("Hall", samples)
    for _ in range(samples):
        args = [random_element(pres, rng, degree_bound) for _ in range(4)]
        _record(s4, evaluate_identity(S4, args), args)
        _record(hall, hall_check(*args[:3]), args[:3])
    return SuiteReport(str(pres), seed, degree_bound, [s4, hall])


def exhaustive_check(pres: Presentation, ident: PolyIdentity, max_len: int = 4) -> IdentityReport:
    """Evaluate on every tuple of basis words of length <= max_len.

    Products are memoized by the sequence of word indices, which every
    tuple and every monomial of the identity share.
    """
    words = [pres.word(w) for w in basis_words(max_len)]
    memo: dict = {}

    def seq_product(ids):
        if ids not in memo:
            memo[ids] = words[ids[0]] if len(ids) == 1 else seq_product(ids[:-1]) * words[ids[-1]]
        return memo[ids]

    report = IdentityReport(ident.name, len(words) ** ident.arity)
    for ids in itertools.product(range(len(words)), repeat=ident.arity):
        value = _combine(ident, lambda m: seq_product(tuple(ids[i] for i in m)))
        _record(report, value, [words[i] for i in ids])
    return report


def find_nonvanishing(pres: Presentation, ident: PolyIdentity, max_len: int = 3):
    """First tuple of basis words on which ``ident`` does not vanish."""
    words = [pres.word(w) for w in basis_words(max_len)]
    for args in itertools.product(words, repeat=ident.arity):
        v = evaluate_identity(ident, list(args))
        if not v.is_zero():
            return list(args), v
    return None
