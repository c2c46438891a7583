"""Embedding of the two-quadratic algebra into 2x2 matrices over E[t].

``normalize`` changes generators so that ``x = alpha1*u + alpha2`` and
``y = beta1*v + beta2`` with ``u^2 = delta*u`` and ``v^2 = epsilon*v``.  The
images are

    U = [[delta, t], [0, 0]],     V = [[0, 0], [t, epsilon]],
    X = alpha1*U + alpha2*I,      Y = beta1*V + beta2*I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .field import FieldElement, Tower, adjoin_root
from .freealg import FreeElement, Presentation, basis_words, substitute
from .poly import LinearSolver, Poly, PolyMatrix

DEFAULT_DEGREE = 12


@dataclass(frozen=True)
class NormalizedPresentation:
    presentation: Presentation
    tower: Tower
    delta: int
    epsilon: int
    alpha1: FieldElement
    alpha2: FieldElement
    beta1: FieldElement
    beta2: FieldElement

    @property
    def uv_presentation(self) -> Presentation:
        """``u^2 = delta u``, ``v^2 = epsilon v`` over the splitting tower."""
        return Presentation.over(self.tower, -self.delta, 0, -self.epsilon, 0)


def _split(tower: Tower, s, r):
    tower, eta1, eta2 = adjoin_root(tower, s, r)
    if eta1 == eta2:
        return tower, 0, tower.one, eta1
    return tower, 1, eta2 - eta1, eta1


def substitution_residual(s, r, scale, shift, kind: int, tower: Tower) -> Poly:
    """``l^2 + s l + r`` at ``l = scale*u + shift`` minus ``scale^2 (u^2 - kind*u)``
    as a polynomial in ``u``; zero exactly when the change of generator is right."""
    lin = Poly([shift, scale], "u")
    lhs = lin * lin + lin * tower(s) + Poly([tower(r)], "u")
    rhs = Poly([tower.zero, -kind * tower.one, tower.one], "u") * (scale * scale)
    return lhs - rhs


def normalize(pres: Presentation) -> NormalizedPresentation:
    tower = pres.tower
    tower, delta, alpha1, alpha2 = _split(tower, pres.a, pres.b)
    tower, epsilon, beta1, beta2 = _split(tower, pres.c, pres.d)
    alpha1, alpha2 = alpha1.lift(tower), alpha2.lift(tower)
    for s, r, sc, sh, k in ((pres.a, pres.b, alpha1, alpha2, delta), (pres.c, pres.d, beta1, beta2, epsilon)):
        if sc.is_zero() or not substitution_residual(s, r, sc, sh, k, tower).is_zero():
            raise ArithmeticError(f"normalization failed for {pres}")
    return NormalizedPresentation(pres, tower, delta, epsilon, alpha1, alpha2, beta1, beta2)


@dataclass
class Embedding:
    """The matrices U, V, X, Y, I for one normalized presentation, and the
    homomorphism they define."""

    norm: NormalizedPresentation
    U: PolyMatrix
    V: PolyMatrix
    X: PolyMatrix
    Y: PolyMatrix
    I: PolyMatrix
    _word_cache: dict = field(default_factory=dict, repr=False)
    _solvers: dict = field(default_factory=dict, repr=False)

    @property
    def presentation(self) -> Presentation:
        return self.norm.presentation

    @property
    def tower(self) -> Tower:
        return self.norm.tower

    @cached_property
    def uv(self) -> "Embedding":
        """The same matrices viewed as images of ``u -> U``, ``v -> V``."""
        return build_matrices(normalize(self.norm.uv_presentation))

    def word_image(self, w: str) -> PolyMatrix:
        m = self._word_cache.get(w)
        if m is None:
            if not w:
                m = self.I
            else:
                m = self.word_image(w[:-1]) * (self.X if w[-1] == "x" else self.Y)
            self._word_cache[w] = m
        return m

    def phi(self, e: FreeElement) -> PolyMatrix:
        if e.pres != self.presentation:
            raise ValueError("element belongs to a different presentation")
        acc = PolyMatrix.zero(2)
        for w, c in e.items():
            acc = acc + self.word_image(w) * c
        return acc

    def max_t_degree(self, w: str) -> int:
        """Largest t-degree among the entries of the image of a basis word,
        taken in the ``u, v`` picture."""
        m = self.uv.word_image(w)
        if m.is_zero():
            raise AssertionError(f"basis word {w!r} has zero image")
        return int(m.max_degree())

    def solver(self, n: int) -> LinearSolver:
        if n not in self._solvers:
            words = basis_words(n)
            images = [self.word_image(w) for w in words]
            length = max(int(m.max_degree()) for m in images) + 1
            self._solvers[n] = (words, length, LinearSolver([m.flatten(length, self.tower) for m in images]))
        return self._solvers[n]

    def images_independent(self, n: int) -> bool:
        return self.solver(n)[2].independent

    def recover(self, mtx: PolyMatrix, n: int = DEFAULT_DEGREE) -> FreeElement | None:
        """The element supported on basis words of length <= n mapping to
        ``mtx``, or None when ``mtx`` is not such an image."""
        if n < 0:
            raise ValueError("degree bound must be non-negative")
        words, length, solver = self.solver(n)
        if not mtx.is_zero() and mtx.max_degree() >= length:
            return None
        x = solver.solve(mtx.flatten(length, self.tower))
        if x is None:
            return None
        return FreeElement(self.presentation, {w: c for w, c in zip(words, x) if not c.is_zero()})


def build_matrices(norm: NormalizedPresentation) -> Embedding:
    tw = norm.tower
    zero, one = tw.zero, tw.one
    t = Poly([zero, one])
    c = lambda v: Poly([tw(v)])  # noqa: E731
    U = PolyMatrix([[c(norm.delta), t], [c(0), c(0)]])
    V = PolyMatrix([[c(0), c(0)], [t, c(norm.epsilon)]])
    I = PolyMatrix.identity(2, tw)
    X = U * norm.alpha1 + I * norm.alpha2
    Y = V * norm.beta1 + I * norm.beta2
    emb = Embedding(norm, U, V, X, Y, I)
    check_matrices(emb)
    return emb


def check_matrices(emb: Embedding):
    p, I = emb.presentation, emb.I
    checks = {
        "U^2 = delta U": emb.U * emb.U == emb.U * emb.norm.delta,
        "V^2 = epsilon V": emb.V * emb.V == emb.V * emb.norm.epsilon,
        "X^2 + aX + bI = 0": (emb.X * emb.X + emb.X * p.a + I * p.b).is_zero(),
        "Y^2 + cY + dI = 0": (emb.Y * emb.Y + emb.Y * p.c + I * p.d).is_zero(),
    }
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        raise ArithmeticError(f"embedding invariants failed: {bad}")


def embed(pres: Presentation) -> Embedding:
    return build_matrices(normalize(pres))


def phi(e: FreeElement, emb: Embedding) -> PolyMatrix:
    return emb.phi(e)


def to_uv(e: FreeElement, emb: Embedding) -> FreeElement:
    """Rewrite ``e`` in the ``u, v`` generators (``x = alpha1 u + alpha2``)."""
    n = emb.norm
    q = n.uv_presentation
    images = {"x": q.x * n.alpha1 + n.alpha2, "y": q.y * n.beta1 + n.beta2}
    return substitute(e, images, q.one)


def evaluation_points(tower: Tower, count: int = 5) -> list[FieldElement]:
    """First ``count`` elements outside {0, 1, -1} in a fixed enumeration
    (2, 3, 4, ... and, over small finite fields, further tower elements)."""
    bad = {tower.zero, tower.one, -tower.one}
    out = []
    if not tower.base.p:
        k = 2
        while len(out) < count:
            out.append(tower(k))
            k += 1
        return out
    for e in tower.elements():
        if e not in bad:
            out.append(e)
            if len(out) == count:
                break
    return out


def span_at(emb: Embedding, t0: FieldElement) -> int:
    """Rank of {I, U0, V0, U0 V0} at ``t = t0``."""
    from .poly import rank

    U0, V0 = emb.U.evaluate(t0), emb.V.evaluate(t0)
    return rank([emb.I, U0, V0, U0 * V0])
