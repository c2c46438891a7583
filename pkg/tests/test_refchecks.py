import pytest

from twoquad.field import BaseField, Tower
from twoquad.golden import CONFIGS, representative, verify_paper
from twoquad.poly import Poly, PolyMatrix
from twoquad.refchecks import (
    b0_basis,
    b0_matrices,
    b0_realization_check,
    fits_weiss_shape,
    in_j,
    weiss_check,
    weiss_matrices,
)

Q = Tower(BaseField())


@pytest.mark.parametrize("p", [0, 3, 5])
def test_weiss_passes(p):
    rep = weiss_check(BaseField(p))
    assert rep.passed, rep.checks


def test_weiss_refused_in_char_2():
    rep = weiss_check(BaseField(2))
    assert rep.refused and not rep.passed


def test_weiss_idempotent_up_to_two():
    xw, yw, _ = weiss_matrices(Tower(BaseField(3)))
    assert (xw * xw - xw * 2).is_zero()
    assert (yw * yw - yw * 2).is_zero()


def test_shape_rejects_other_matrices():
    z, o = Poly((), "v"), Poly([Q.one], "v")
    v = Poly([Q.zero, Q.one], "v")
    assert not fits_weiss_shape(PolyMatrix([[z, o], [z, z]]), Q)
    assert not fits_weiss_shape(PolyMatrix([[v, z], [z, v]]), Q)
    assert fits_weiss_shape(PolyMatrix.identity(2, Q, "v"), Q)


def test_b0_basics():
    X, Y = b0_matrices(Q)
    assert (Y * X * Y).is_zero()
    assert (X * X)[0, 2] == Poly([Q.one])
    assert not in_j(X * X, "tK[t]e13")
    assert in_j(X * X, "K[t]e13") and in_j(X * X, "Ke13")


def test_b0_basis_words():
    assert b0_basis(1) == ["", "x", "xy", "xyx", "y", "yx", "xyy", "xyyx"]


def test_b0_report():
    rep = b0_realization_check(10)
    assert rep.passed
    notes = rep.notes[0]
    assert notes["consistent readings"] == ["Ke13"]
    assert not notes["J readings"]["tK[t]e13"]["X^2 in J"]
    assert any("literally stated" in n for n in rep.notes[1:])


def test_b0_degree_validated():
    with pytest.raises(ValueError):
        b0_realization_check(0)


@pytest.mark.parametrize("p", [0, 5, 7])
def test_representatives_have_requested_types(p):
    from twoquad.embedding import embed

    for dl, ep in CONFIGS:
        n = embed(representative(BaseField(p), dl, ep)).norm
        assert (n.delta, n.epsilon) == (dl, ep)


def test_scoreboard_all_pass_and_lists_errata():
    board = verify_paper(base=BaseField())
    assert board.passed and len(board.checks) >= 80
    assert board.errata and not any(e.quoted_holds for e in board.errata)
