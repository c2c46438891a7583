import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from twoquad.field import BaseField, Tower, adjoin_root
from twoquad.poly import (
    NEG_INF,
    LinearSolver,
    Poly,
    PolyMatrix,
    commutator,
    rank,
    solve_linear,
    trace_det_ch2,
)

Q = Tower(BaseField())
F7 = Tower(BaseField(7))
t = Poly([Q.zero, Q.one])


def uv(delta, epsilon, tower=Q):
    tt = Poly([tower.zero, tower.one])
    c = lambda v: Poly([tower(v)])  # noqa: E731
    U = PolyMatrix([[c(delta), tt], [c(0), c(0)]])
    V = PolyMatrix([[c(0), c(0)], [tt, c(epsilon)]])
    return U, V, PolyMatrix.identity(2, tower)


def random_poly(rng, tower, degree):
    return Poly([tower.random(rng) for _ in range(degree + 1)])


def random_matrix(rng, tower, degree, n=2):
    return PolyMatrix([[random_poly(rng, tower, rng.randint(0, degree)) for _ in range(n)] for _ in range(n)])


def to_sympy(m: PolyMatrix):
    x = sp.Symbol("t")
    return sp.Matrix(m.n, m.n, lambda i, j: sum(sp.Rational(str(c)) * x ** k for k, c in enumerate(m[i, j].coeffs)))


def test_zero_degree_marker():
    assert Poly(()).degree == NEG_INF
    assert (t * t).degree == 2


def test_render_and_json():
    p = t * t - 1
    assert p.render() == "t^2 - 1"
    assert p.to_json() == ["-1", "0", "1"]
    s2, _, _ = adjoin_root(Q, 0, -2)
    q = Poly([s2.zero, s2.zero, s2.gen(1) + 1])
    assert q.render() == "(1 + r1)*t^2"


def test_divmod():
    a = t ** 5 + t * 3 - 2
    b = t * t + 1
    q, r = a.divmod(b)
    assert q * b + r == a and r.degree < b.degree


def test_uv_product_nilpotent():
    U, V, _ = uv(0, 0)
    zero = Poly(())
    assert U * V == PolyMatrix([[t * t, zero], [zero, zero]])


def test_commutator_square_nilpotent():
    U, V, I = uv(0, 0)
    c = commutator(U, V)
    assert c * c == I * t ** 4


def test_identity_is_neutral():
    rng = random.Random(0)
    A = random_matrix(rng, Q, 3)
    assert A * PolyMatrix.identity(2, Q) == A


@pytest.mark.parametrize("delta,epsilon", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_cayley_hamilton_u_plus_v(delta, epsilon):
    U, V, _ = uv(delta, epsilon)
    tr, det, res = trace_det_ch2(U + V)
    assert res.is_zero()
    assert tr == Poly([Q(delta + epsilon)])
    assert det == Poly([Q(delta * epsilon)]) - t * t


def test_cayley_hamilton_identity():
    tr, det, res = trace_det_ch2(PolyMatrix.identity(2, Q))
    assert tr == Poly([Q(2)]) and det == Poly([Q(1)]) and res.is_zero()


def test_trace_det_needs_2x2():
    with pytest.raises(ValueError):
        trace_det_ch2(PolyMatrix.identity(3, Q))


def test_det_matches_sympy():
    rng = random.Random(3)
    for _ in range(10):
        A = random_matrix(rng, Q, 3, n=3)
        assert sp.expand(to_sympy(A).det()) == sp.expand(to_sympy(PolyMatrix([[A.det()]]))[0, 0])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        PolyMatrix.identity(2, Q) + PolyMatrix.identity(3, Q)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_associative_distributive(seed):
    rng = random.Random(seed)
    tower = rng.choice([Q, F7])
    A, B, C = (random_matrix(rng, tower, 4) for _ in range(3))
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert (A + B) * C == A * C + B * C


def test_product_matches_sympy():
    rng = random.Random(9)
    for _ in range(20):
        A, B = random_matrix(rng, Q, 4), random_matrix(rng, Q, 4)
        assert sp.expand(to_sympy(A * B) - to_sympy(A) * to_sympy(B)) == sp.zeros(2, 2)


def test_solve_unique_at_evaluation_point():
    U, V, I = uv(1, 1)
    t0 = Q(3)
    cols = [I, U.evaluate(t0), V.evaluate(t0), (U * V).evaluate(t0)]
    rng = random.Random(1)
    target = PolyMatrix([[Poly([Q.random(rng)]) for _ in range(2)] for _ in range(2)])
    x = solve_linear(cols, target)
    assert x is not None
    acc = PolyMatrix.zero(2)
    for c, m in zip(x, cols):
        acc = acc + m * c
    assert acc == target
    assert rank(cols) == 4


def test_solve_zero_target():
    U, V, I = uv(0, 0)
    x = solve_linear([I, U, V], PolyMatrix.zero(2))
    assert x is not None and all(c.is_zero() for c in x)


def test_no_solution():
    U, V, I = uv(0, 0)
    assert solve_linear([I, U], V) is None


def test_linear_solver_agrees_with_sympy():
    rng = random.Random(5)
    cols = [[Q.random(rng) for _ in range(7)] for _ in range(5)]
    solver = LinearSolver(cols)
    ref = sp.Matrix([[sp.Rational(str(c)) for c in col] for col in cols]).T
    assert solver.independent == (ref.rank() == 5)
    coeffs = [Q.random(rng) for _ in range(5)]
    target = [sum((col[i] * k for col, k in zip(cols, coeffs)), Q.zero) for i in range(7)]
    assert solver.solve(target) == coeffs
    off = list(target)
    off[0] = off[0] + 1
    augmented = ref.row_join(sp.Matrix([sp.Rational(str(c)) for c in off]))
    assert (solver.solve(off) is None) == (augmented.rank() > ref.rank())
