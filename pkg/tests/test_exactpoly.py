"""Kernel tests: exact polynomial arithmetic, determinants, linearization."""

import random
from fractions import Fraction

import pytest

from multalg.errors import NotDivisibleError, RingMismatchError
from multalg.exactpoly import (
    MPoly,
    PolyMatrix,
    RING_M,
    delinearize,
    det,
    exact_divide,
    linearize_quadratics,
    monomials_of_degree,
    parse_poly,
    reduce_root,
)

R3 = ("x", "y", "z")
F = Fraction


def rnd_poly(rng, ring, maxdeg=2, terms=4):
    p = MPoly.zero(ring)
    for _ in range(terms):
        e = [0] * len(ring)
        for _ in range(rng.randint(0, maxdeg)):
            e[rng.randrange(len(ring))] += 1
        p = p + MPoly.from_dict(ring, {tuple(e): F(rng.randint(-5, 5))})
    return p


def naive_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * naive_det(sub)
        term = term if j % 2 == 0 else -term
        total = term if total is None else total + term
    return total


def test_difference_of_squares():
    x, y = (MPoly.variable(("x", "y"), v) for v in ("x", "y"))
    assert (x + y) * (x - y) == x * x - y * y


def test_additive_inverse():
    p = parse_poly(R3, "2*x^2*y - 3/4*z + 1")
    assert (p + (-p)).is_zero()


def test_cube_expansion_matches_repeated_multiplication():
    s = parse_poly(R3, "x + y + z")
    cube = s**3
    naive = s * s * s
    assert cube == naive
    assert len(cube.terms) == 10
    assert cube.coefficient((1, 1, 1)) == 6


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        parse_poly(("x", "y"), "x") + parse_poly(("x", "z"), "x")


def test_evaluate_basics():
    p = parse_poly(("x", "y"), "x^2 + y")
    assert p.evaluate([2, 3]) == 7
    q = parse_poly(R3, "5*x*y - 3*z + 7/2")
    assert q.evaluate([0, 0, 0]) == F(7, 2)


def test_evaluate_commutes_with_ring_ops():
    rng = random.Random(11)
    for _ in range(50):
        p = rnd_poly(rng, R3)
        q = rnd_poly(rng, R3)
        pt = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)]
        assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
        assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


def test_ring_ops_axioms():
    rng = random.Random(5)
    for _ in range(1000):
        p, q, r = (rnd_poly(rng, ("x", "y"), 2, 3) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_partial_derivatives():
    p = parse_poly(("x", "y"), "x^2*y")
    assert p.partial(0) == parse_poly(("x", "y"), "2*x*y")
    assert MPoly.constant(("x", "y"), 5).partial("x").is_zero()


def test_euler_identity_on_symmetroid_determinant():
    # sum_i w_i dF/dw_i == deg(F) * F for homogeneous F
    from multalg.genus3 import StdPair, symmetroid

    _, f = symmetroid(StdPair(2, 3))
    ring = f.ring
    total = MPoly.zero(ring)
    for i, v in enumerate(ring):
        total = total + MPoly.variable(ring, v) * f.partial(i)
    assert total == 4 * f


def test_exact_divide():
    x, y = (MPoly.variable(("x", "y"), v) for v in ("x", "y"))
    assert exact_divide(x * x - y * y, x - y) == x + y
    with pytest.raises(NotDivisibleError):
        exact_divide(x * x + y * y, x - y)


def test_exact_divide_roundtrip_random():
    rng = random.Random(23)
    for _ in range(40):
        f = rnd_poly(rng, R3, 2, 3)
        g = rnd_poly(rng, R3, 2, 3)
        if g.is_zero():
            continue
        assert exact_divide(f * g, g) == f


def test_det_trivial_cases():
    ring = ("x", "y", "z", "w")
    ident = [
        [MPoly.constant(ring, 1 if i == j else 0) for j in range(4)] for i in range(4)
    ]
    assert det(PolyMatrix.from_rows(ident)) == MPoly.constant(ring, 1)
    diag = [
        [
            MPoly.variable(ring, ring[i]) if i == j else MPoly.zero(ring)
            for j in range(4)
        ]
        for i in range(4)
    ]
    assert det(PolyMatrix.from_rows(diag)) == parse_poly(ring, "x*y*z*w")


def test_det_matches_cofactor_oracle():
    rng = random.Random(2)
    ring = ("x", "y")
    for _ in range(10):
        rows = [[rnd_poly(rng, ring, 1, 2) for _ in range(5)] for _ in range(5)]
        m = PolyMatrix.from_rows(rows)
        expected = naive_det(rows)
        assert det(m, "minors") == expected
        assert det(m, "bareiss") == expected


def test_det_alternating_and_transpose():
    rng = random.Random(9)
    ring = ("u", "v")
    rows = [[rnd_poly(rng, ring, 1, 2) for _ in range(4)] for _ in range(4)]
    m = PolyMatrix.from_rows(rows)
    swapped = PolyMatrix.from_rows([rows[1], rows[0], rows[2], rows[3]])
    assert det(swapped) == -det(m)
    assert det(m.transpose()) == det(m)


def test_det_then_evaluate_commutes():
    # block form with a = 2, b = 3 at (x, y, z) = (1, 1, 1)
    a, b = F(2), F(3)
    x, y, z = (MPoly.variable(R3, v) for v in R3)
    zero = MPoly.zero(R3)
    m = PolyMatrix.from_rows(
        [
            [x + y, z, zero, zero],
            [z, x - y, zero, zero],
            [zero, zero, a * x + b * y, z],
            [zero, zero, z, a * x - b * y],
        ]
    )
    d = det(m)
    pt = [F(1), F(1), F(1)]
    evaluated_entries = [[e.evaluate(pt) for e in m.row(i)] for i in range(4)]
    assert d.evaluate(pt) == naive_det(evaluated_entries)


def test_linearize_quadratics():
    x, y = (MPoly.variable(R3, v) for v in ("x", "y"))
    assert linearize_quadratics(x * x + 2 * (x * y)) == parse_poly(RING_M, "m0 + 2*m3")
    assert linearize_quadratics((x + y) * (x - y)) == parse_poly(RING_M, "m0 - m1")
    with pytest.raises(ValueError):
        linearize_quadratics(parse_poly(R3, "x^3"))
    with pytest.raises(ValueError):
        linearize_quadratics(parse_poly(R3, "x^2 + x"))


def test_linearize_round_trip_random():
    rng = random.Random(17)
    quads = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    for _ in range(100):
        q = MPoly.from_dict(
            R3, {e: F(rng.randint(-9, 9)) for e in quads if rng.random() < 0.8}
        )
        assert delinearize(linearize_quadratics(q)) == q


def test_linearize_is_injective():
    quads = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    images = [linearize_quadratics(MPoly.from_dict(R3, {e: 1})) for e in quads]
    seen = {next(iter(img.terms)) for img in images}
    assert len(seen) == 6  # basis maps to six distinct coordinates


def test_reduce_root():
    ring = ("x", "s")
    x, s = (MPoly.variable(ring, v) for v in ring)
    assert reduce_root(s * s, 5) == MPoly.constant(ring, 5)
    p = (x + s) * (x - s)
    assert reduce_root(p, F(7, 3)) == x * x - F(7, 3)


def test_monomials_of_degree_count():
    assert len(monomials_of_degree(6, 7)) == 792
    assert len(monomials_of_degree(3, 2)) == 6
