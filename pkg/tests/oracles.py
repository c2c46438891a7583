"""Independent reference computations used by the tests.

These avoid the package's own linear algebra and closed forms: ranks come
from sympy, and the commutator squares are derived symbolically.
"""

from __future__ import annotations

import sympy as sp

from twoquad.freealg import basis_words

t = sp.Symbol("t")


def truncated_quotient_dims(pres, w, max_degree: int) -> list[int]:
    """Per-degree dimensions of F_k / (I ∩ F_k) for k <= max_degree.

    Only valid for a homogeneous generator in a monomial algebra (all of
    a, b, c, d zero), where the ideal is graded and its degree-k part is
    spanned by A*w*B with len(A) + deg(w) + len(B) = k.
    """
    if any(not v.is_zero() for v in (pres.a, pres.b, pres.c, pres.d)):
        raise ValueError("oracle needs a monomial algebra")
    degs = {len(word) for word in w.terms}
    if len(degs) != 1:
        raise ValueError("oracle needs a homogeneous generator")
    dw = degs.pop()
    words = basis_words(max_degree)
    by_len: dict[int, list[str]] = {}
    for word in words:
        by_len.setdefault(len(word), []).append(word)
    dims = []
    for k in range(max_degree + 1):
        basis_k = by_len.get(k, [])
        index = {word: i for i, word in enumerate(basis_k)}
        rows = []
        for la in range(k - dw + 1):
            for A in by_len.get(la, []):
                for B in by_len.get(k - dw - la, []):
                    prod = pres.word(A) * w * pres.word(B)
                    if prod.is_zero():
                        continue
                    row = [0] * len(basis_k)
                    for word, c in prod.terms.items():
                        row[index[word]] = sp.Rational(str(c.render()))
                    rows.append(row)
        rank = sp.Matrix(rows).rank() if rows else 0
        dims.append(len(basis_k) - rank)
    return dims


def uv_symbolic(delta, epsilon):
    U = sp.Matrix([[delta, t], [0, 0]])
    V = sp.Matrix([[0, 0], [t, epsilon]])
    return U, V, sp.eye(2)


def commutator_square(rho, delta, epsilon, generator: str):
    """``[W, G]^2`` for ``W = rho0 I + rho1 U + rho2 V + rho3 UV`` with
    scalar rho, computed with sympy."""
    U, V, I = uv_symbolic(delta, epsilon)
    W = rho[0] * I + rho[1] * U + rho[2] * V + rho[3] * U * V
    G = {"U": U, "V": V, "U+V": U + V}[generator]
    C = W * G - G * W
    return sp.expand(C * C)
