import random

import pytest

from twoquad.catalog import presentations
from twoquad.embedding import (
    embed,
    evaluation_points,
    normalize,
    span_at,
    substitution_residual,
    to_uv,
)
from twoquad.field import BaseField
from twoquad.freealg import Presentation, random_element
from twoquad.poly import Poly, PolyMatrix, commutator

Q = BaseField()


def tpoly(tower, k, c=1):
    return Poly([tower.zero] * k + [tower(c)])


@pytest.mark.parametrize("entry", presentations(), ids=lambda e: e[0])
def test_normalization_is_exact(entry):
    _, pres = entry
    n = normalize(pres)
    assert n.delta in (0, 1) and n.epsilon in (0, 1)
    assert not n.alpha1.is_zero() and not n.beta1.is_zero()
    for s, r, sc, sh, k in ((pres.a, pres.b, n.alpha1, n.alpha2, n.delta),
                            (pres.c, pres.d, n.beta1, n.beta2, n.epsilon)):
        assert substitution_residual(s, r, sc, sh, k, n.tower).is_zero()


def test_normalization_values():
    n = normalize(Presentation.over(Q, -3, 2, 0, 0))
    # roots 1, 2: x = (2 - 1) u + 1
    assert (n.delta, n.alpha1, n.alpha2) == (1, n.tower(1), n.tower(1))
    assert (n.epsilon, n.beta1, n.beta2) == (0, n.tower(1), n.tower(0))


def test_nilpotent_matrices():
    emb = embed(Presentation.over(Q, 0, 0, 0, 0))
    tw = emb.tower
    zero = Poly(())
    assert emb.U == PolyMatrix([[zero, tpoly(tw, 1)], [zero, zero]])
    assert emb.V == PolyMatrix([[zero, zero], [tpoly(tw, 1), zero]])


def test_idempotent_u():
    emb = embed(Presentation.over(Q, -1, 0, 0, 0))
    assert emb.U * emb.U == emb.U
    assert emb.U[0, 0] == Poly([emb.tower.one])


def test_general_x_shape():
    emb = embed(Presentation.over(Q, -7, 10, 1, 1))
    n, tw = emb.norm, emb.tower
    assert emb.X == PolyMatrix([
        [Poly([n.alpha2 + n.alpha1 * n.delta]), tpoly(tw, 1) * n.alpha1],
        [Poly(()), Poly([n.alpha2])],
    ])


@pytest.mark.parametrize("p", [1, 2, 3])
def test_uv_power(p):
    pres = Presentation.over(Q, -1, 0, 0, 0)
    emb = embed(pres)
    e = pres.word("xy" * p)
    assert emb.phi(e) == emb.U * emb.V * tpoly(emb.tower, 2 * (p - 1))


@pytest.mark.parametrize("q", [0, 1, 2])
def test_uvu_power(q):
    pres = Presentation.over(Q, 0, 0, -1, 0)
    emb = embed(pres)
    assert emb.phi(pres.word("xy" * q + "x")) == emb.U * tpoly(emb.tower, 2 * q)


def test_commutator_square():
    pres = Presentation.over(Q, -7, 10, 0, -2)
    emb = embed(pres)
    n = emb.norm
    c = emb.phi(pres.x * pres.y - pres.y * pres.x)
    t2 = tpoly(emb.tower, 2)
    expected = emb.I * (t2 * (t2 - emb.tower(n.delta * n.epsilon)) * (n.alpha1 ** 2 * n.beta1 ** 2))
    assert c * c == expected
    assert commutator(emb.X, emb.Y) * commutator(emb.X, emb.Y) == expected


@pytest.mark.parametrize("word,k", [("xyxy", 4), ("yxyxy", 5), ("", 0), ("x", 1)])
def test_max_t_degree(word, k):
    emb = embed(Presentation.over(Q, 0, 0, 0, 0))
    assert emb.max_t_degree(word) == k


def test_max_t_degree_equals_length_everywhere():
    for _, pres in presentations()[:6]:
        emb = embed(pres)
        assert all(emb.max_t_degree(w) == len(w) for w in ["", "x", "y", "xy", "yxyxy", "xyxyxyxy"])


def test_cli_example_matrix():
    pres = Presentation.over(Q, 0, 0, 0, 0)
    emb = embed(pres)
    zero = Poly(())
    assert emb.phi(pres.word("xyxy")) == PolyMatrix([[tpoly(emb.tower, 4), zero], [zero, zero]])


def test_recover_round_trip_small():
    rng = random.Random(11)
    for _, pres in presentations()[:5]:
        emb = embed(pres)
        for _ in range(10):
            e = random_element(pres, rng, 6)
            assert emb.recover(emb.phi(e), 6) == e


def test_recover_rejects_non_images():
    emb = embed(Presentation.over(Q, 0, 0, 0, 0))
    tw = emb.tower
    zero = Poly(())
    # t in the (1,1) slot: the only words reaching it have even length
    m = PolyMatrix([[tpoly(tw, 1), zero], [zero, zero]])
    assert emb.recover(m) is None
    # degree beyond the bound
    assert emb.recover(emb.phi(emb.presentation.word("xy" * 7)), 12) is None
    assert emb.recover(PolyMatrix.zero(2)).is_zero()


def test_to_uv_preserves_image():
    rng = random.Random(2)
    pres = Presentation.over(Q, -7, 10, 0, -2)
    emb = embed(pres)
    e = random_element(pres, rng, 5)
    assert emb.uv.phi(to_uv(e, emb)) == emb.phi(e)


@pytest.mark.parametrize("delta,epsilon", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_full_span_off_degenerate_points(delta, epsilon):
    emb = embed(Presentation.over(Q, -delta, 0, -epsilon, 0))
    for t0 in evaluation_points(emb.tower, 5):
        assert span_at(emb, t0) == 4


def test_degeneration_at_unit_points():
    emb = embed(Presentation.over(Q, -1, 0, -1, 0))
    tw = emb.tower
    assert span_at(emb, tw(0)) < 4
    assert span_at(emb, tw(1)) < 4
    assert span_at(emb, tw(-1)) < 4


def test_evaluation_points_small_field():
    pts = evaluation_points(embed(Presentation.over(BaseField(5), 0, 0, 0, 0)).tower, 5)
    assert [p.render() for p in pts] == ["2", "3"]
