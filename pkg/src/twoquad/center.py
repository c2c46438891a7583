"""Center of the algebra, rank-4 module coordinates over it, and central
elements inside principal ideals.

With ``z = xy + yx + cx + ay`` central, every element is uniquely
``h0(z) + h1(z) x + h2(z) y + h3(z) xy``.  Right multiplication by ``x`` or
``y`` acts on these coordinates by the 4x4 tables in ``_right_tables``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import Tower
from .freealg import FreeElement, Presentation, multiply
from .embedding import Embedding, NormalizedPresentation, embed, to_uv
from .poly import Poly, PolyMatrix, commutator

Z = "z"
MODULE_BASIS = ("", "x", "y", "xy")


class CentralityError(AssertionError):
    pass


def central_z(pres: Presentation) -> FreeElement:
    x, y = pres.x, pres.y
    z = x * y + y * x + x * pres.c + y * pres.a
    if multiply(z, x) != multiply(x, z) or multiply(z, y) != multiply(y, z):
        raise CentralityError(f"z is not central for {pres}")
    return z


@dataclass(frozen=True)
class CenterCoordinates:
    h0: Poly
    h1: Poly
    h2: Poly
    h3: Poly

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2, self.h3))

    def __str__(self):
        return ", ".join(h.render() for h in self)

    def to_json(self) -> dict:
        return {f"h{i}": h.to_json() for i, h in enumerate(self)}


@dataclass(frozen=True)
class RhoVector:
    """Coordinates of ``rho0 I + rho1 U + rho2 V + rho3 UV`` over E[Z]."""

    rho0: Poly
    rho1: Poly
    rho2: Poly
    rho3: Poly

    def __iter__(self):
        return iter((self.rho0, self.rho1, self.rho2, self.rho3))

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self)

    def is_central(self) -> bool:
        return self.rho1.is_zero() and self.rho2.is_zero() and self.rho3.is_zero()

    def __str__(self):
        return ", ".join(r.render() for r in self)

    def to_json(self) -> dict:
        return {f"rho{i}": r.to_json() for i, r in enumerate(self)}


def _const(pres: Presentation, v) -> Poly:
    return Poly([pres.tower(v)], Z)


@lru_cache(maxsize=64)
def _right_tables(pres: Presentation):
    """Coordinates of ``m * x`` and ``m * y`` for m in 1, x, y, xy."""
    a, b, c, d = pres.a, pres.b, pres.c, pres.d
    k = lambda v: _const(pres, v)  # noqa: E731
    z = Poly([pres.tower.zero, pres.tower.one], Z)
    # yx = z - c x - a y - xy;  xy.x = bc + (z + ac) x + b y;  xy.y = -d x - c xy
    by_x = (
        (k(0), k(1), k(0), k(0)),
        (k(-b), k(-a), k(0), k(0)),
        (z, k(-c), k(-a), k(-1)),
        (k(b * c), z + a * c, k(b), k(0)),
    )
    by_y = (
        (k(0), k(0), k(1), k(0)),
        (k(0), k(0), k(0), k(1)),
        (k(-d), k(0), k(-c), k(0)),
        (k(0), k(-d), k(0), k(-c)),
    )
    return {"x": by_x, "y": by_y}


@lru_cache(maxsize=100_000)
def word_coordinates(pres: Presentation, w: str) -> tuple[Poly, ...]:
    if not w:
        return (_const(pres, 1), Poly((), Z), Poly((), Z), Poly((), Z))
    prev = word_coordinates(pres, w[:-1])
    table = _right_tables(pres)[w[-1]]
    out = [Poly((), Z)] * 4
    for i, h in enumerate(prev):
        if h.is_zero():
            continue
        for j, entry in enumerate(table[i]):
            if not entry.is_zero():
                out[j] = out[j] + h * entry
    return tuple(out)


def center_coordinates(e: FreeElement, check: bool = True, emb: Embedding | None = None) -> CenterCoordinates:
    pres = e.pres
    acc = [Poly((), Z)] * 4
    for w, c in e.items():
        for i, h in enumerate(word_coordinates(pres, w)):
            if not h.is_zero():
                acc[i] = acc[i] + h * c
    cc = CenterCoordinates(*acc)
    if check:
        _check_through_phi(e, cc, emb or embed(pres))
    return cc


def central_scalar(emb: Embedding) -> Poly:
    """``g(t)`` with ``phi(z) = g(t) I``."""
    g = emb.phi(central_z(emb.presentation)).scalar_part()
    if g is None:
        raise CentralityError("phi(z) is not a scalar matrix")
    return g


def _check_through_phi(e: FreeElement, cc: CenterCoordinates, emb: Embedding):
    g = central_scalar(emb)
    pres = e.pres
    acc = PolyMatrix.zero(2)
    for h, m in zip(cc, MODULE_BASIS):
        if not h.is_zero():
            acc = acc + emb.word_image(m) * h.with_var(Z)(g).with_var("t")
    if acc != emb.phi(e):
        raise ArithmeticError(f"center coordinates disagree with the matrix image for {pres}")


def recombine(cc: CenterCoordinates, pres: Presentation) -> FreeElement:
    z = central_z(pres)
    acc = pres.zero
    for h, m in zip(cc, MODULE_BASIS):
        if h.is_zero():
            continue
        # Horner in z, then right factor m
        val = pres.zero
        for coef in reversed(h.coeffs):
            val = val * z + coef
        acc = acc + val * pres.word(m)
    return acc


def to_rho(e: FreeElement, norm: NormalizedPresentation | Embedding) -> RhoVector:
    emb = norm if isinstance(norm, Embedding) else embed(norm.presentation)
    uv = to_uv(e, emb)
    return RhoVector(*center_coordinates(uv, emb=emb.uv))


def rho_matrix(w: RhoVector, emb: Embedding) -> PolyMatrix:
    """``rho0 I + rho1 U + rho2 V + rho3 UV`` with ``Z = t^2 - delta*epsilon``."""
    tw = emb.tower
    de = emb.norm.delta * emb.norm.epsilon
    zt = Poly([tw(-de), tw.zero, tw.one], "t")
    acc = PolyMatrix.zero(2)
    for r, m in zip(w, (emb.I, emb.U, emb.V, emb.U * emb.V)):
        if not r.is_zero():
            acc = acc + m * r(zt)
    return acc


def rho_element(w: RhoVector, emb: Embedding) -> FreeElement:
    """The element with coordinates ``w`` in the ``u, v`` presentation."""
    return recombine(CenterCoordinates(*w), emb.norm.uv_presentation)


def even_to_z(p: Poly, de: int, tower: Tower) -> Poly:
    """Rewrite an even polynomial in ``t`` as a polynomial in ``Z = t^2 - de``."""
    if any(not c.is_zero() for c in p.coeffs[1::2]):
        raise ValueError(f"{p} is not even in t")
    s = Poly(p.coeffs[0::2], Z)
    return s(Poly([tower(de), tower.one], Z)) if s else Poly((), Z)


@dataclass(frozen=True)
class CentralWitness:
    """A nonzero ``tau(Z) I`` in the ideal generated by ``W``.

    ``tau`` is monic; ``tau_raw`` is the scalar before normalizing; ``case``
    names the branch and ``commutator`` the expression producing it.
    """

    tau: Poly
    tau_raw: Poly
    case: str
    commutator: str
    closed_form: str
    quoted_form_holds: bool

    @property
    def already_central(self) -> bool:
        return self.case == "central"

    def to_json(self) -> dict:
        return {
            "tau": self.tau.render(),
            "tau_raw": self.tau_raw.render(),
            "case": self.case,
            "commutator": self.commutator,
            "closed_form": self.closed_form,
            "quoted_form_holds": self.quoted_form_holds,
        }


def central_in_ideal(w: RhoVector, emb: Embedding) -> CentralWitness:
    if w.is_zero():
        raise ValueError("W = 0 generates the zero ideal")
    tw = emb.tower
    dl, ep = emb.norm.delta, emb.norm.epsilon
    de = dl * ep
    if w.is_central():
        tau = w.rho0
        return CentralWitness(tau.monic(), tau, "central", "W", "rho0", True)
    r0, r1, r2, r3 = w
    zt = Poly([tw(-de), tw.zero, tw.one], "t")
    rt = [r(zt) if r else Poly((), "t") for r in w]
    t2 = Poly([tw.zero, tw.zero, tw.one], "t")
    t2mde = t2 - tw(de)

    g1 = r2 * (r2 + r3 * dl)
    g2 = r1 * (r1 + r3 * ep)
    # closed forms for the commutator squares; "quoted" are the forms as
    # usually stated, which differ from the true value in cases 1 and 2
    if not g1.is_zero():
        case, G, name = "generic-U", emb.U, "[W,U]^2"
        closed = rt[2] * (rt[2] + rt[3] * dl) * t2 * t2mde
        quoted = closed
        label = "rho2(rho2+delta*rho3) t^2 (t^2-delta*epsilon)"
    elif not g2.is_zero():
        case, G, name = "generic-V", emb.V, "[W,V]^2"
        closed = rt[1] * (rt[1] + rt[3] * ep) * t2 * t2mde
        quoted = closed
        label = "rho1(rho1+epsilon*rho3) t^2 (t^2-delta*epsilon)"
    else:
        G, name = emb.U + emb.V, "[W,U+V]^2"
        s3 = rt[3] * rt[3]
        if r1.is_zero() and r2.is_zero():
            case = "case1"
            closed = s3 * t2 * t2 * (tw(de) - t2)
            quoted = s3 * t2 * (tw(de) - t2)
            label = "rho3^2 t^4 (delta*epsilon - t^2)"
        elif r1.is_zero() and dl == 1 and r2 == -r3:
            case = "case2"
            closed = -(s3 * t2 * (t2 - tw(ep)) * (t2 - tw(ep)))
            quoted = s3 * t2 * (tw(ep) - t2)
            label = "-rho3^2 t^2 (t^2 - epsilon)^2"
        elif r2.is_zero() and ep == 1 and r1 == -r3:
            case = "case2-mirror"
            closed = -(s3 * t2 * (t2 - tw(dl)) * (t2 - tw(dl)))
            quoted = s3 * t2 * (tw(dl) - t2)
            label = "-rho3^2 t^2 (t^2 - delta)^2"
        elif dl == ep == 1 and r1 == r2 and r1 == -r3:
            case = "case3"
            closed = s3 * t2 * t2 * (1 - t2)
            quoted = closed
            label = "rho3^2 t^4 (1 - t^2)"
        else:
            raise AssertionError(f"no branch applies to W = ({w})")
    wm = rho_matrix(w, emb)
    c = commutator(wm, G)
    sq = (c * c).scalar_part()
    if sq is None or sq.is_zero() or sq != closed:
        raise ArithmeticError(f"{name} does not match {label} for W = ({w})")
    tau_raw = even_to_z(sq, de, tw)
    return CentralWitness(tau_raw.monic(), tau_raw, case, name, label, quoted == sq)


def codim_upper_bound(w: RhoVector, emb: Embedding) -> int:
    """``4 deg_Z tau``: an upper bound on the codimension of the ideal
    generated by ``W``."""
    tau = central_in_ideal(w, emb).tau
    return 4 * int(tau.degree)


def reduce_mod_tau(w: RhoVector, tau: Poly) -> tuple[RhoVector, RhoVector]:
    """``(quotient, remainder)`` with ``w = tau * quotient + remainder``
    coordinatewise and every remainder of degree < deg tau."""
    qs, rs = zip(*(r.divmod(tau) for r in w))
    return RhoVector(*qs), RhoVector(*rs)
