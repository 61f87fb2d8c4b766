"""Quotient algebra tests: dimension, grading, duality pairing."""

import random
from fractions import Fraction

import pytest

from multalg._linalg import fraction_rank
from multalg.errors import NotVeryStableError
from multalg.exactpoly import parse_poly
from multalg.multiplicity import build_algebra, is_very_stable, poincare_pairing
from multalg.quadrics import NetOfQuadrics

F = Fraction


def net_from(ring, *texts):
    return NetOfQuadrics.from_quadrics([parse_poly(ring, t) for t in texts])


def test_square_relations_in_three_variables():
    alg = build_algebra(net_from(("a", "b", "c"), "a^2", "b^2", "c^2"))
    assert alg.dim == 8
    assert alg.hilbert == (1, 3, 3, 1)


def test_square_relations_in_two_variables():
    alg = build_algebra(net_from(("a", "b"), "a^2", "b^2"))
    assert alg.dim == 4


def test_base_point_raises():
    # z never appears: (0, 0, 1) is a base point
    net = net_from(("x", "y", "z"), "x^2", "x*y", "y^2")
    assert not is_very_stable(net)
    with pytest.raises(NotVeryStableError):
        build_algebra(net)


def test_non_square_system_rejected():
    net = net_from(("x", "y", "z"), "x^2", "y^2")
    with pytest.raises(ValueError):
        build_algebra(net)
    with pytest.raises(ValueError):
        is_very_stable(net)


def test_pairing_on_koszul_relations():
    alg = build_algebra(net_from(("x", "y", "z"), "x^2", "y^2", "z^2"))
    m0, nd0 = poincare_pairing(alg, 0)
    assert m0 == [[F(1)]] and nd0
    m1, nd1 = poincare_pairing(alg, 1)
    assert nd1
    # basis x < y < z pairs with complementary basis yz < xz < xy: the
    # antidiagonal permutation pairing
    flat = sorted(abs(c) for row in m1 for c in row)
    assert flat == [0, 0, 0, 0, 0, 0, 1, 1, 1]
    assert fraction_rank(m1) == 3


def test_dimension_is_power_of_two_and_hilbert_palindromic():
    rng = random.Random(19)
    ring = ("x", "y", "z")
    built = 0
    while built < 5:
        texts = []
        quads = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
        from multalg.exactpoly import MPoly

        gens = [
            MPoly.from_dict(ring, {e: F(rng.randint(-4, 4)) for e in quads})
            for _ in range(3)
        ]
        net = NetOfQuadrics.from_quadrics(gens)
        if not is_very_stable(net):
            continue
        alg = build_algebra(net)
        assert alg.dim == 2**3
        assert alg.hilbert == tuple(reversed(alg.hilbert))
        assert all(poincare_pairing(alg, k)[1] for k in range(alg.socle_degree + 1))
        built += 1


def test_congruent_nets_have_identical_invariants():
    rng = random.Random(8)
    base = net_from(("x", "y", "z"), "x^2 + y*z", "y^2 - x*z", "z^2 + 2*x*y")
    alg = build_algebra(base)
    for _ in range(3):
        while True:
            p = [[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            det3 = (
                p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1])
                - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
                + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0])
            )
            if det3:
                break
        other = build_algebra(base.congruent(p))
        assert other.hilbert == alg.hilbert
        for k in range(alg.socle_degree + 1):
            ra = fraction_rank(poincare_pairing(alg, k)[0])
            rb = fraction_rank(poincare_pairing(other, k)[0])
            assert ra == rb


def test_multiplication_respects_grading():
    alg = build_algebra(net_from(("x", "y", "z"), "x^2", "y^2", "z^2"))
    for ea in alg.basis:
        for eb in alg.basis:
            nf = alg.multiply(ea, eb)
            if nf.is_zero():
                continue
            degs = {sum(e) for e in nf.terms}
            assert degs == {sum(ea) + sum(eb)}
