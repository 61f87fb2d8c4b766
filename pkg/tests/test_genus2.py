"""Genus-2 constructions: odd triangle nets, Lorenzen nets, vGP nets."""

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from multalg.curves import is_smooth, j_invariant, PlaneCurve
from multalg.errors import DegenerateInputError
from multalg.exactpoly import MPoly, parse_poly
from multalg.genus2 import (
    Genus2Curve,
    LorenzenPoint,
    OddBundleData,
    VgpNet,
    lorenzen_discriminant_report,
    lorenzen_net,
    lorenzen_quadrics,
    odd_chords,
    odd_net,
    odd_triangle_check,
    vgp_branch_identity,
    vgp_genus3_curve,
    vgp_net,
)
from multalg.multiplicity import build_algebra, is_very_stable, poincare_pairing
from multalg.quadrics import discriminant

F = Fraction
FIXTURES = Path(__file__).parent / "fixtures"


# ---------- odd degree ----------

def test_odd_net_is_diagonal_and_dimension_eight():
    curve = Genus2Curve((0, 1, 2, 3, 4, 5))
    data = OddBundleData((-1, 6, 7))
    net = odd_net(curve, data)
    for g in net.grams:
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert g[i][j] == 0
    alg = build_algebra(net)
    assert alg.dim == 8
    assert alg.hilbert == (1, 3, 3, 1)
    assert all(poincare_pairing(alg, k)[1] for k in range(4))


def test_odd_divisor_point_on_branch_locus_is_not_very_stable():
    curve = Genus2Curve((0, 1, 2, 3, 4, 5))
    data = OddBundleData((0, 6, 7))  # a1 = 0 lies on the branch locus
    assert not is_very_stable(odd_net(curve, data))


def test_odd_repeated_divisor_point_rejected():
    with pytest.raises(DegenerateInputError):
        OddBundleData((-1, 6, 6))


def test_odd_triangle_check_explicit():
    curve = Genus2Curve((0, 1, 2, 3, 4, 5))
    data = OddBundleData((-1, 6, 7))
    assert odd_triangle_check(curve, data)


def test_odd_triangle_random_sweep():
    rng = random.Random(44)
    done = 0
    while done < 25:
        branch = set()
        while len(branch) < 6:
            branch.add(F(rng.randint(-10, 10), rng.randint(1, 3)))
        avals = set()
        while len(avals) < 3:
            c = F(rng.randint(-12, 12), rng.randint(1, 3))
            if c not in branch:
                avals.add(c)
        curve = Genus2Curve(tuple(branch))
        data = OddBundleData(tuple(avals))
        assert odd_triangle_check(curve, data)
        alg = build_algebra(odd_net(curve, data))
        assert alg.hilbert == (1, 3, 3, 1)
        done += 1


def test_odd_discriminant_is_triangle_of_chords():
    curve = Genus2Curve((0, 1, 2, 3, 4, 5))
    data = OddBundleData((-1, 6, 7))
    chords = odd_chords(curve, data)
    disc = discriminant(odd_net(curve, data), ("y0", "y1", "y2"))
    prod = chords[0] * chords[1] * chords[2]
    # the product of the three chords IS the discriminant here (scale 1)
    assert prod == disc.poly


# ---------- even degree ----------

def test_lorenzen_h2_coefficient_at_zero():
    # at u = 0 only the two constant-bracket terms contribute to xi0^2:
    # t * 1 + s*t * (-1) = t - s*t
    point = LorenzenPoint((2, 3, 5), (0, 0, 0))
    h2 = lorenzen_quadrics(point)[1]
    assert h2.coefficient((2, 0, 0)) == 5 - 3 * 5


def test_lorenzen_grams_symmetric():
    point = LorenzenPoint((2, 3, 5), (F(1, 2), F(1, 3), F(1, 5)))
    net = lorenzen_net(point)
    for g in net.grams:
        for i in range(3):
            for j in range(3):
                assert g[i][j] == g[j][i]


@pytest.mark.parametrize("variant", ["verbatim", "corrected"])
def test_lorenzen_dimension_gate_both_variants(variant):
    point = LorenzenPoint((2, 3, 5), (F(1, 2), F(1, 3), F(1, 5)))
    rep = lorenzen_discriminant_report(point, variant)
    assert rep.very_stable and rep.dim == 8 and rep.smooth


def test_lorenzen_j_regression_fixture():
    with open(FIXTURES / "lorenzen_j.json") as fh:
        fixture = json.load(fh)
    for variant, entries in fixture.items():
        for entry in entries:
            point = LorenzenPoint(
                tuple(F(v) for v in entry["rst"]), tuple(F(v) for v in entry["u"])
            )
            rep = lorenzen_discriminant_report(point, variant)
            assert rep.very_stable == entry["very_stable"]
            assert rep.dim == entry["dim"]
            assert rep.smooth == entry["smooth"]
            assert rep.j == F(entry["j"])


def test_lorenzen_modulus_varies_with_u():
    p1 = LorenzenPoint((2, 3, 5), (F(1, 2), F(1, 3), F(1, 5)))
    p2 = LorenzenPoint((2, 3, 5), (F(1, 3), F(1, 5), F(1, 7)))
    j1 = lorenzen_discriminant_report(p1).j
    j2 = lorenzen_discriminant_report(p2).j
    assert j1 is not None and j2 is not None and j1 != j2


def test_lorenzen_j_invariant_under_dual_reparametrization():
    point = LorenzenPoint((2, 3, 5), (F(1, 2), F(1, 3), F(1, 5)))
    net = lorenzen_net(point)
    cubic = discriminant(net, ("y1", "y2", "y3")).poly
    ring = cubic.ring
    y1, y2, y3 = (MPoly.variable(ring, v) for v in ring)
    relabeled = cubic.compose({"y1": y2 + y3, "y2": y1 - y3, "y3": y3 + y1})
    assert j_invariant(PlaneCurve(relabeled)) == j_invariant(PlaneCurve(cubic))


def test_lorenzen_degenerate_u_is_flagged():
    # constructed base point: for u = (1, w, w) the plane xi1 + xi2 = 0
    # carries a common zero (1, -w, w) once r = (1+w^2)^2 / (4 w^2) and
    # s (1-w)^2 = t; here w = 3
    point = LorenzenPoint((F(25, 9), 2, 8), (1, 3, 3))
    base = [F(1), F(-3), F(3)]
    for q in lorenzen_quadrics(point, "verbatim"):
        assert q.evaluate(base) == 0
    rep = lorenzen_discriminant_report(point, "verbatim")
    assert not rep.very_stable
    assert rep.dim is None and rep.j is None


def test_lorenzen_degenerate_input_validation():
    with pytest.raises(DegenerateInputError):
        LorenzenPoint((2, 3, 1), (0, 0, 0))  # t = 1 collides with a branch point
    with pytest.raises(DegenerateInputError):
        LorenzenPoint((2, 2, 5), (0, 0, 0))


# ---------- vGP nets ----------

def test_vgp_identity_identity_matrices():
    ident = tuple(tuple(F(1 if i == j else 0) for j in range(3)) for i in range(3))
    zero = tuple(tuple(F(0) for _ in range(3)) for _ in range(3))
    with pytest.raises(DegenerateInputError):
        VgpNet(ident, zero, ident)  # only a 2-dimensional span
    v = VgpNet(
        ident,
        ((0, 1, 0), (1, 0, 0), (0, 0, 0)),
        ((1, 0, 0), (0, 0, 0), (0, 0, -1)),
    )
    assert vgp_branch_identity(v)


def test_vgp_identity_random_sweep():
    rng = random.Random(3)
    count = 0
    while count < 30:
        def sym():
            m = [[F(rng.randint(-6, 6)) for _ in range(3)] for _ in range(3)]
            for i in range(3):
                for j in range(i + 1, 3):
                    m[j][i] = m[i][j]
            return tuple(tuple(r) for r in m)

        try:
            v = VgpNet(sym(), sym(), sym())
        except DegenerateInputError:
            continue
        assert vgp_branch_identity(v)
        count += 1


def test_vgp_quartic_degenerate_for_rank_one_grams():
    sq = lambda i: tuple(
        tuple(F(1) if (r, c) == (i, i) else F(0) for c in range(3)) for r in range(3)
    )
    xy = tuple(
        tuple(F(1, 2) if {r, c} == {0, 1} else F(0) for c in range(3)) for r in range(3)
    )
    with pytest.raises(DegenerateInputError):
        vgp_genus3_curve(VgpNet(sq(0), xy, sq(1)))  # x^2*y^2 - (xy)^2 == 0


def test_vgp_smooth_quartic_net_is_very_stable():
    v = VgpNet(
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, -1)),
    )
    quartic = vgp_genus3_curve(v)
    if is_smooth(quartic):
        alg = build_algebra(vgp_net(v))
        assert alg.dim == 8
