import itertools
import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from twoquad.field import BaseField, FieldElement, Tower, TowerError, adjoin_root, is_prime

Q = Tower(BaseField())
F5 = Tower(BaseField(5))

# small towers covering each arithmetic path
Q_SQRT2, _, _ = adjoin_root(Q, 0, -2)
Q_SQRT2_SQRT3, _, _ = adjoin_root(Q_SQRT2, 0, -3)
F25, _, _ = adjoin_root(F5, 0, -2)
F4, _, _ = adjoin_root(Tower(BaseField(2)), 1, 1)
TOWERS = [Q, Q_SQRT2, Q_SQRT2_SQRT3, F5, F25, F4]


def elements(tower):
    def build(coords):
        return FieldElement(tower, tuple(tower.base.scalar(c) for c in coords))

    if tower.base.p:
        coord = st.integers(0, tower.base.p - 1)
    else:
        coord = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coord, min_size=tower.dim, max_size=tower.dim).map(build)


@st.composite
def triples(draw):
    tower = draw(st.sampled_from(TOWERS))
    e = elements(tower)
    return draw(e), draw(e), draw(e)


@settings(max_examples=150, deadline=None)
@given(triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == a.tower.zero
    assert a * a.tower.one == a


@settings(max_examples=150, deadline=None)
@given(triples())
def test_inverse(abc):
    a = abc[0]
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == a.tower.one
        assert (a / a).is_one()


@settings(max_examples=100, deadline=None)
@given(triples())
def test_sqrt_of_square(abc):
    a = abc[0]
    s = (a * a).sqrt()
    assert s is not None and s * s == a * a


def test_is_prime_matches_sympy():
    assert [n for n in range(200) if is_prime(n)] == list(sp.primerange(0, 200))


def test_parse_and_reject():
    assert BaseField.parse("Q") == BaseField()
    assert BaseField.parse("Fp:7") == BaseField(7)
    with pytest.raises(ValueError):
        BaseField.parse("Fp:9")
    with pytest.raises(ValueError):
        BaseField.parse("R")


def test_scalar_rejects_bad_denominator():
    assert BaseField(5).scalar(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        BaseField(5).scalar(Fraction(1, 5))


def test_sqrt2_over_q():
    tower, e1, e2 = adjoin_root(Q, 0, -2)
    assert tower.height == 1
    assert tower.describe() == ["r1^2 - 2 = 0"]
    assert (e1, e2) == (-tower.gen(1), tower.gen(1))


def test_radicand_is_square_free():
    # x^2 - 8: discriminant 8 = 2 * 2^2, so the generator squares to 2
    tower, e1, e2 = adjoin_root(Q, 0, -8)
    assert tower.describe() == ["r1^2 - 2 = 0"]
    assert e2 == tower.gen(1) * 2


def test_second_generator_can_split():
    # x^2 - 8 already splits once sqrt(2) is adjoined
    tower, e1, e2 = adjoin_root(Q_SQRT2, 0, -8)
    assert tower is Q_SQRT2
    assert e1 * e1 == tower(8)


def test_double_root():
    tower, e1, e2 = adjoin_root(Q, -4, 4)
    assert tower is Q and e1 == e2 == Q(2)


def test_height_limit():
    with pytest.raises(TowerError):
        adjoin_root(Q_SQRT2_SQRT3, 0, -5)


def test_sympy_agrees_on_sqrt2_sqrt3():
    r1, r2 = Q_SQRT2_SQRT3.gen(1), Q_SQRT2_SQRT3.gen(2)
    e = (r1 + r2 * 3 + 1) * (r1 * r2 - 2)
    s2, s3 = sp.sqrt(2), sp.sqrt(3)
    ref = sp.expand((s2 + 3 * s3 + 1) * (s2 * s3 - 2))
    coords = e.coords
    mine = coords[0] + coords[1] * s2 + coords[2] * s3 + coords[3] * s2 * s3
    assert sp.simplify(sp.nsimplify(mine) - ref) == 0


def test_f25_exhaustive_roots():
    # every quadratic over F5 has its roots in F25
    for a, b in itertools.product(range(5), repeat=2):
        roots = [r for r in F25.elements() if r * r + F25(a) * r + F25(b) == 0]
        assert roots, (a, b)
        tower, e1, e2 = adjoin_root(F25, a, b)
        assert tower is F25
        assert sorted({e1, e2}, key=FieldElement.key) == sorted(set(roots), key=FieldElement.key)


def test_characteristic_two_extension():
    tower, e1, e2 = adjoin_root(Tower(BaseField(2)), 1, 1)
    assert tower.order == 4
    assert e1 + e2 == tower.one
    assert len(list(tower.elements())) == 4


def test_render():
    r = Q_SQRT2.gen(1)
    assert (r * Fraction(1, 2) + 1).render() == "1 + 1/2*r1"
    assert (-r).render() == "-r1"
    assert Q(0).render() == "0"


def test_hash_consistent_across_towers():
    assert Q(3) == Q(3).lift(Q_SQRT2)
    assert hash(Q(3)) == hash(Q(3).lift(Q_SQRT2))


def test_random_elements_deterministic():
    rng1, rng2 = random.Random(4), random.Random(4)
    assert [F25.random(rng1) for _ in range(10)] == [F25.random(rng2) for _ in range(10)]
