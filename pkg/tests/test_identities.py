import itertools
import random

import pytest
import sympy as sp
from sympy.combinatorics import Permutation

from twoquad.catalog import presentations
from twoquad.field import BaseField
from twoquad.freealg import Presentation
from twoquad.identities import (
    HALL,
    S2,
    S3,
    S4,
    evaluate_identity,
    exhaustive_check,
    find_nonvanishing,
    hall_check,
    randomized_suite,
    standard_identity,
)

Q = BaseField()
F22 = Presentation.over(Q, 0, 0, 0, 0)


def test_standard_identity_terms():
    assert len(S4.terms) == 24 and S4.is_multilinear
    assert sum(c for _, c in S3.terms) == 0
    assert dict(S2.terms) == {(0, 1): 1, (1, 0): -1}


def test_signs_match_sympy():
    for perm, sign in standard_identity(4).terms:
        assert sign == Permutation(list(perm)).signature()


def test_hall_expansion():
    # [[a, b]^2, c] has 8 monomials, each of degree 5 in 3 letters
    assert len(HALL.terms) == 8
    assert not HALL.is_multilinear
    assert all(len(m) == 5 for m, _ in HALL.terms)


def test_hall_terms_agree_with_direct_form():
    rng = random.Random(0)
    from twoquad.freealg import random_element

    for _ in range(5):
        args = [random_element(F22, rng, 3) for _ in range(3)]
        assert evaluate_identity(HALL, args) == hall_check(*args)


def test_s4_vanishes_on_sympy_matrices():
    # an independent check of the evaluator on generic 2x2 matrices
    syms = sp.symbols("a0:16")
    mats = [sp.Matrix(2, 2, syms[4 * i:4 * i + 4]) for i in range(4)]
    assert sp.expand(evaluate_identity(S4, mats)) == sp.zeros(2, 2)
    assert sp.expand(evaluate_identity(S3, mats[:3])) != sp.zeros(2, 2)


def test_arity_checked():
    with pytest.raises(ValueError):
        evaluate_identity(S4, [F22.x])


def test_s3_witness():
    args, value = find_nonvanishing(F22, S3)
    assert [a.render() for a in args] == ["1", "x", "y"]
    assert value == F22.word("xy") - F22.word("yx")


@pytest.mark.parametrize("entry", presentations()[::4], ids=lambda e: e[0])
def test_random_suite_passes(entry):
    rep = randomized_suite(entry[1], 10, 4, seed=1)
    assert rep.passed
    assert [r.identity for r in rep.reports] == ["S4", "Hall"]


def test_random_suite_is_deterministic():
    a = randomized_suite(F22, 5, 3, seed=7).to_json()
    b = randomized_suite(F22, 5, 3, seed=7).to_json()
    assert a == b


def test_suite_reports_counterexample_for_s3():
    from twoquad.identities import IdentityReport, _record

    rep = IdentityReport("S3", 1)
    args = [F22.one, F22.x, F22.y]
    _record(rep, evaluate_identity(S3, args), args)
    assert rep.failures == 1 and rep.first_counterexample == ["1", "x", "y"]


def test_bad_suite_arguments():
    with pytest.raises(ValueError):
        randomized_suite(F22, -1, 3, 0)
    with pytest.raises(ValueError):
        randomized_suite(F22, 1, 0, 0)


def test_exhaustive_small():
    rep = exhaustive_check(F22, S4, max_len=2)
    assert rep.samples == 5 ** 4 and rep.passed


def test_exhaustive_finds_s3_failures():
    rep = exhaustive_check(F22, S3, max_len=1)
    assert rep.failures > 0 and rep.samples == 27
    # count by brute force through the matrix-free evaluator
    words = [F22.word(w) for w in ("", "x", "y")]
    count = sum(not evaluate_identity(S3, list(a)).is_zero() for a in itertools.product(words, repeat=3))
    assert rep.failures == count
