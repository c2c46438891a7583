"""A fixed mix of presentations used by the experiment scripts and tests.

Each entry is ``(label, field, (a, b, c, d))``.  The labels say how the two
quadratics factor: split (distinct roots in K), nonsplit (roots in a
quadratic extension) or double (a repeated root).
"""

from __future__ import annotations

from .field import BaseField
from .freealg import Presentation

CATALOG = (
    ("Q nilpotent/nilpotent", "Q", (0, 0, 0, 0)),
    ("Q idempotent/idempotent", "Q", (-1, 0, -1, 0)),
    ("Q split/split", "Q", (-3, 2, 1, 0)),
    ("Q nonsplit/double", "Q", (0, -2, 0, 0)),
    ("Q nonsplit/nonsplit, two generators", "Q", (0, -2, 0, -3)),
    ("Q nonsplit/double", "Q", (1, 1, 0, 0)),
    ("Q double/double", "Q", (-4, 4, 6, 9)),
    ("Q nonsplit/split", "Q", (0, 1, -1, 0)),
    ("Q double/nonsplit", "Q", (2, 1, 0, -2)),
    ("Q nonsplit/nonsplit, same generator", "Q", (0, -2, 0, -8)),
    ("F5 nilpotent/nilpotent", "Fp:5", (0, 0, 0, 0)),
    ("F5 nonsplit/nonsplit", "Fp:5", (0, 3, 1, 1)),
    ("F5 idempotent/split", "Fp:5", (-1, 0, 0, 1)),
    ("F5 double/double", "Fp:5", (2, 1, 0, 0)),
    ("F5 nonsplit/split", "Fp:5", (0, 2, -1, 0)),
    ("F7 nilpotent/idempotent", "Fp:7", (0, 0, -1, 0)),
    ("F7 nonsplit/double", "Fp:7", (0, 1, 0, 0)),
    ("F7 split/split", "Fp:7", (1, 1, 0, -2)),
    ("F7 nonsplit/nonsplit", "Fp:7", (0, -3, 0, 1)),
    ("F7 double/split", "Fp:7", (-2, 1, 3, 2)),
)


def presentation(entry) -> Presentation:
    _, field, coeffs = entry
    return Presentation.over(BaseField.parse(field), *coeffs)


def presentations() -> list[tuple[str, Presentation]]:
    return [(e[0], presentation(e)) for e in CATALOG]
