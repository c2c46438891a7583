"""Checks of two comparison constructions: the Weiss matrices for the algebra
of two idempotents, and a 3x3 realization of K<x, y | x^2 = 0, yxy = 0>."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .field import BaseField, Tower
from .identities import S4, evaluate_identity
from .poly import Poly, PolyMatrix, rank_vectors


@dataclass
class CheckReport:
    name: str
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    refused: str | None = None

    @property
    def passed(self) -> bool:
        return self.refused is None and all(self.checks.values())

    def to_json(self) -> dict:
        out = {"check": self.name, "passed": self.passed, "checks": self.checks, "notes": self.notes}
        if self.refused:
            out["refused"] = self.refused
        return out


def weiss_matrices(tower: Tower):
    """``x_W, y_W`` over K[v] with ``t = 1 - v^2``."""
    v = Poly([tower.zero, tower.one], "v")
    one = Poly([tower.one], "v")
    t = one - v * v
    xw = PolyMatrix([[one + v, t], [one, one - v]])
    yw = PolyMatrix([[one + v, -t], [-one, one - v]])
    return xw, yw, t


def _split_parity(p: Poly) -> tuple[Poly, Poly]:
    """``(even, odd)`` parts of a polynomial in v."""
    zero = p.coeffs[0].tower.zero if p.coeffs else None
    even = [c if i % 2 == 0 else zero for i, c in enumerate(p.coeffs)]
    odd = [zero if i % 2 == 0 else c for i, c in enumerate(p.coeffs)]
    return Poly(even, p.var), Poly(odd, p.var)


def fits_weiss_shape(m: PolyMatrix, tower: Tower) -> bool:
    """Whether ``m = [[f1 + f3 v, t(f2 - f4 v)], [f2 + f4 v, f1 - f3 v]]``
    with every ``f_i`` in K[t], ``t = 1 - v^2``.

    Polynomials in t are exactly the even polynomials in v, so the diagonal
    must have an even symmetric part and an odd antisymmetric part, and the
    (1,2) entry is then forced by the (2,1) entry.
    """
    half = tower(2).inverse()
    v = Poly([tower.zero, tower.one], "v")
    t = Poly([tower.one], "v") - v * v
    sym = (m[0, 0] + m[1, 1]) * half
    anti = (m[0, 0] - m[1, 1]) * half
    if not _split_parity(sym)[1].is_zero() or not _split_parity(anti)[0].is_zero():
        return False
    f2, f4v = _split_parity(m[1, 0])
    return m[0, 1] == t * (f2 - f4v)


def weiss_check(base: BaseField, max_len: int = 4) -> CheckReport:
    report = CheckReport("weiss")
    if base.p == 2:
        report.refused = "the Weiss embedding needs characteristic different from 2"
        return report
    tower = Tower(base)
    xw, yw, _ = weiss_matrices(tower)
    report.checks["x_W^2 = 2 x_W"] = xw * xw == xw * 2
    report.checks["y_W^2 = 2 y_W"] = yw * yw == yw * 2
    ident = PolyMatrix.identity(2, tower, "v")
    shape_ok = fits_weiss_shape(ident, tower)
    products = {"": ident}
    for n in range(1, max_len + 1):
        for w in itertools.product("xy", repeat=n):
            w = "".join(w)
            m = products[w[:-1]] * (xw if w[-1] == "x" else yw)
            products[w] = m
            shape_ok = shape_ok and fits_weiss_shape(m, tower)
    report.checks[f"products of length <= {max_len} fit the displayed shape"] = shape_ok
    gens = [products[w] for w in ("x", "y", "xy", "yx")]
    report.checks["S4 vanishes on x, y, xy, yx"] = evaluate_identity(S4, gens).is_zero()
    return report


def b0_matrices(tower: Tower):
    zero, one = Poly((), "t"), Poly([tower.one], "t")
    t = Poly([tower.zero, tower.one], "t")
    X = PolyMatrix([[zero, one, zero], [zero, zero, one], [zero, zero, zero]])
    Y = PolyMatrix([[zero, zero, zero], [zero, t, zero], [zero, zero, zero]])
    return X, Y


# the candidate readings of the ideal J inside K[t] e13
J_READINGS = {
    "tK[t]e13": "multiples of t in the (1,3) slot (as literally stated)",
    "K[t]e13": "all of K[t] in the (1,3) slot",
    "Ke13": "constants in the (1,3) slot",
}


def in_j(m: PolyMatrix, reading: str) -> bool:
    for i in range(3):
        for j in range(3):
            if (i, j) != (0, 2) and not m[i, j].is_zero():
                return False
    p = m[0, 2]
    if reading == "tK[t]e13":
        return p.is_zero() or p.coeffs[0].is_zero()
    if reading == "K[t]e13":
        return True
    if reading == "Ke13":
        return p.degree <= 0
    raise ValueError(reading)


def reduce_mod_j(m: PolyMatrix, reading: str, tower: Tower) -> PolyMatrix:
    """Drop the part of the (1,3) entry that lies in J."""
    p = m[0, 2]
    if reading == "tK[t]e13":
        q = Poly(p.coeffs[:1], "t")
    elif reading == "K[t]e13":
        q = Poly((), "t")
    else:
        q = Poly((tower.zero,) + p.coeffs[1:], "t")
    rows = [list(r) for r in m.rows]
    rows[0][2] = q
    return PolyMatrix(rows)


def b0_basis(n: int) -> list[str]:
    """``y^a, y^a x, x y^(a+1), x y^(a+1) x`` for ``a <= n``."""
    out = []
    for a in range(n + 1):
        out += ["y" * a, "y" * a + "x", "x" + "y" * (a + 1), "x" + "y" * (a + 1) + "x"]
    return out


def b0_realization_check(n: int, base: BaseField | None = None) -> CheckReport:
    if n < 1:
        raise ValueError("degree bound must be at least 1")
    report = CheckReport("b0")
    tower = Tower(base or BaseField())
    X, Y = b0_matrices(tower)
    ident = PolyMatrix.identity(3, tower)

    def image(w):
        m = ident
        for ch in w:
            m = m * (X if ch == "x" else Y)
        return m

    report.checks["YXY = 0"] = (Y * X * Y).is_zero()
    e13 = PolyMatrix([[Poly(()), Poly(()), Poly([tower.one])], [Poly(())] * 3, [Poly(())] * 3])
    report.checks["X^2 = e13"] = X * X == e13
    gens = [X, Y]
    report.checks["K[t]e13 is an ideal of S"] = all(
        in_j(g * e13, "K[t]e13") and in_j(e13 * g, "K[t]e13") for g in gens)

    basis = b0_basis(n)
    images = [image(w) for w in basis]
    rel_words = [
        "".join(w) for k in range(2, 6) for w in itertools.product("xy", repeat=k)
        if "xx" in "".join(w) or "yxy" in "".join(w)
    ]
    readings = {}
    for reading in J_READINGS:
        reduced = [reduce_mod_j(m, reading, tower) for m in images]
        length = max(int(m.max_degree()) for m in images) + 1
        vecs = [m.flatten(length, tower) for m in reduced]
        independent = rank_vectors(vecs) == len(vecs)
        nonzero = all(not m.is_zero() for m in reduced)
        readings[reading] = {
            "X^2 in J": in_j(X * X, reading),
            "relations map into J": all(in_j(image(w), reading) for w in rel_words),
            "basis images independent mod J": independent and nonzero,
        }
    consistent = [r for r, v in readings.items() if all(v.values())]
    report.checks[f"basis images independent mod J for a <= {n}"] = bool(consistent)
    report.notes.append({"J readings": readings, "consistent readings": consistent})
    if "tK[t]e13" not in consistent:
        lit = readings["tK[t]e13"]
        failing = [k for k, v in lit.items() if not v]
        report.notes.append(
            "J = tK[t]e13 as literally stated fails: " + ", ".join(failing)
            + f"; X^2 = e13 has a constant entry. Consistent choice(s): {', '.join(consistent) or 'none'}"
        )
    return report
