"""Genus-3 constructions: the 6x6 matrix, webs, relations, symmetroid."""

import random
from fractions import Fraction

import pytest

from multalg.curves import PlaneCurve, is_smooth, verify_product
from multalg.errors import DegenerateParametersError, NotDivisibleError
from multalg.exactpoly import MPoly, exact_divide, parse_poly
from multalg.genus3 import (
    RING_W,
    RING_XYZ,
    SixRelationParams,
    SpecialParams,
    StdPair,
    big_matrix,
    conic_intersection_membership,
    discriminant_split,
    genus3_web,
    linearized_matrix,
    mat2_derivation_check,
    section_conics,
    section_two_conics,
    six_relations,
    special_base_point,
    special_case,
    standard_bundle_data,
    surd_criterion,
    symmetroid,
    symmetroid_nodes,
    symmetroid_two_quadric_split,
)
from multalg.groebner import Ideal, buchberger, is_zero_dimensional
from multalg.multiplicity import build_algebra, is_very_stable, poincare_pairing
from multalg.quadrics import classify_point, singular_on_scheme

F = Fraction


def std_data(a, b, qtext="x*y"):
    return standard_bundle_data(StdPair(a, b), parse_poly(RING_XYZ, qtext))


# ---------- the 6x6 matrix ----------

def test_big_matrix_symmetric_and_blocks():
    data = std_data(2, 3)
    m = big_matrix(data)
    assert m.is_symmetric()
    assert m.entry(2, 2) == parse_poly(RING_XYZ, "x^2 - y^2 - z^2")
    assert m.entry(5, 5) == parse_poly(RING_XYZ, "4*x^2 - 9*y^2 - z^2")
    assert m.entry(2, 5) == data.q
    assert m.entry(0, 3) == data.q - data.b12 * data.b34
    assert m.entry(1, 4) == data.q + data.b12 * data.b34


def test_big_matrix_q_block_deletion_reproduces_pairing_block():
    # deleting rows/cols 3 and 6 and setting Q = 0 leaves only b-products
    pair = StdPair(2, 3)
    data_q = standard_bundle_data(pair, parse_poly(RING_XYZ, "x^2 + 3*y*z"))
    data_0 = standard_bundle_data(pair, MPoly.zero(RING_XYZ))
    mq = big_matrix(data_q)
    m0 = big_matrix(data_0)
    keep = [0, 1, 3, 4]
    for r in keep:
        for c in keep:
            lhs = mq.entry(r, c)
            if (r, c) in ((0, 3), (3, 0), (1, 4), (4, 1)):
                lhs = lhs - data_q.q
            assert lhs == m0.entry(r, c)


def test_pairing_block_determinant_identity():
    # on honest monomials (no linearization) the Q-free 4x4 block has
    # determinant exactly (Q1*Q2)^2, for any linear pairings
    rng = random.Random(21)

    def rnd_linear():
        return MPoly.from_dict(
            RING_XYZ,
            {
                (1, 0, 0): F(rng.randint(-3, 3)),
                (0, 1, 0): F(rng.randint(-3, 3)),
                (0, 0, 1): F(rng.randint(-3, 3)),
            },
        )

    from multalg.exactpoly import PolyMatrix, det
    from multalg.genus3 import Genus3BundleData

    built = 0
    while built < 3:
        forms = [rnd_linear() for _ in range(6)]
        try:
            data = Genus3BundleData(*forms, MPoly.zero(RING_XYZ))
        except ValueError:
            continue
        b11, b12, b22 = data.b11, data.b12, data.b22
        b33, b34, b44 = data.b33, data.b34, data.b44
        block = PolyMatrix.from_rows(
            [
                [b22 * b33, -(b12 * b33), -(b12 * b34), -(b22 * b34)],
                [-(b12 * b33), b11 * b33, b11 * b34, b12 * b34],
                [-(b12 * b34), b11 * b34, b11 * b44, b12 * b44],
                [-(b22 * b34), b12 * b34, b12 * b44, b22 * b44],
            ]
        )
        assert det(block) == (data.det_plus * data.det_minus) ** 2
        built += 1


def test_web_reconstruction():
    data = std_data(2, 3)
    net = genus3_web(data)
    ml = linearized_matrix(data)
    slots = [tuple(1 if k == j else 0 for k in range(6)) for j in range(6)]
    for j in range(6):
        for r in range(6):
            for c in range(6):
                assert net.grams[j][r][c] == ml.entry(r, c).coefficient(slots[j])


def test_web_dimension_and_duality():
    alg = build_algebra(genus3_web(std_data(2, 3)))
    assert alg.dim == 64
    assert alg.hilbert == (1, 6, 15, 20, 15, 6, 1)
    assert all(poincare_pairing(alg, k)[1] for k in range(7))


def test_discriminant_split_exactness():
    split = discriminant_split(std_data(2, 3))
    assert split.quartic.total_degree() == 4
    assert split.quartic * split.quadric == split.discriminant
    assert split.quadric_gram_rank == 3
    assert split.degeneracy_plane_ok


def test_discriminant_split_random_sweep():
    rng = random.Random(10)
    for _ in range(3):
        a = F(rng.randint(2, 9), rng.randint(1, 4))
        b = F(rng.randint(2, 9), rng.randint(1, 4))
        if a * a == b * b:
            continue
        terms = {}
        for e in ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)):
            terms[e] = F(rng.randint(-3, 3))
        q = MPoly.from_dict(RING_XYZ, terms)
        split = discriminant_split(standard_bundle_data(StdPair(a, b), q))
        assert split.quartic * split.quadric == split.discriminant


def test_discriminant_not_divisible_by_unrelated_quadric():
    split = discriminant_split(std_data(2, 3))
    from multalg.exactpoly import RING_M

    unrelated = parse_poly(RING_M, "m0^2 + m1*m2 + m4^2")
    with pytest.raises(NotDivisibleError):
        exact_divide(split.discriminant, unrelated)


# ---------- relation presentations ----------

def test_six_relations_dimension():
    alg = build_algebra(six_relations(SixRelationParams(2, 3, (1,) * 6)))
    assert alg.dim == 64
    assert alg.hilbert == (1, 6, 15, 20, 15, 6, 1)


def test_six_relations_display_structure():
    params = SixRelationParams(2, 3, (0, 0, 0, 0, 0, 0))
    quads = six_relations(params).quadrics(("xi1", "xi2", "xi3", "eta1", "eta2", "eta3"))
    # relation 5 with a5 = 0 is xi3^2 alone
    assert quads[4] == parse_poly(quads[4].ring, "xi3^2")
    # setting a = b drops the (a-b) terms from relation 1
    equal = six_relations(SixRelationParams(3, 3, (0,) * 6)).quadrics(quads[0].ring)
    assert equal[0].coefficient((2, 0, 0, 0, 0, 0)) == 0  # xi1^2 gone
    assert equal[0].coefficient((0, 2, 0, 0, 0, 0)) != 0  # xi2^2 stays


def test_special_case_trichotomy():
    assert special_base_point(SpecialParams((F(1, 3),) * 3, (F(1, 3),) * 3))
    p2 = SpecialParams((1, 2, 3), (1, 1, 1))
    assert not special_base_point(p2)
    assert build_algebra(special_case(p2)).dim == 64
    p3 = SpecialParams((0, 0, 0), (0, 0, 0))
    alg = build_algebra(special_case(p3))
    assert alg.dim == 64
    lts = sorted(g.leading()[0] for g in alg.gb.elements)
    expected = sorted(tuple(2 if j == i else 0 for j in range(6)) for i in range(6))
    assert lts == expected


def test_surd_criterion_cases():
    assert surd_criterion(SpecialParams((F(1, 3),) * 3, (F(1, 3),) * 3)) is True
    assert surd_criterion(SpecialParams((1, 2, 3), (1, 1, 1))) is None  # irrational
    assert surd_criterion(SpecialParams((1, 4, 9), (1, 1, 1))) is False
    # sign freedom: sqrt(4) - sqrt(1) - sqrt(4) = ... +2 +1 -2 = 1
    assert surd_criterion(SpecialParams((4, 1, 4), (1, 1, 1))) is True


# ---------- symmetroid ----------

def test_symmetroid_entries_and_validation():
    m, s = symmetroid(StdPair(2, 3))
    assert m.is_symmetric()
    # c = (a-b)(1+ab) = -7 at (2,3): first entry is -7w0 + w3
    assert m.entry(0, 0) == parse_poly(RING_W, "-7*w0 + w3")
    assert all(e.is_zero() or e.total_degree() == 1 for e in m.entries)
    assert s.total_degree() == 4
    with pytest.raises(DegenerateParametersError):
        symmetroid(StdPair(3, 3))
    with pytest.raises(DegenerateParametersError):
        symmetroid(StdPair(3, -3))


def test_symmetroid_has_no_rational_linear_factor():
    _, s = symmetroid(StdPair(2, 3))
    candidates = [
        "w0", "w1", "w2", "w3",
        "w0 + w1", "w0 - w1", "w1 + w2", "w1 - w2", "w2 + w3", "w2 - w3",
        "w0 + w1 + w2 + w3", "w0 - w3",
    ]
    for text in candidates:
        with pytest.raises(NotDivisibleError):
            exact_divide(s, parse_poly(RING_W, text))


def test_symmetroid_splits_into_four_planes_over_extension():
    # two conjugate rank-<=2 quadrics over sqrt((a^2-1)(b^2-1)); this is the
    # exact structure behind the degenerate Hessians at the singular points
    assert symmetroid_two_quadric_split(StdPair(2, 3))
    assert symmetroid_two_quadric_split(StdPair(F(5, 4), F(13, 12)))
    assert symmetroid_two_quadric_split(StdPair(F(7, 5), F(9, 7)))


def test_mat2_derivation_check_examples():
    assert mat2_derivation_check(StdPair(2, 3))
    assert mat2_derivation_check(StdPair(F(1, 2), F(1, 3)))


def test_mat2_symbolic_spot_check():
    # entry (1,2) of the pairing block is -b12*b33 = -z(ax+by), which the
    # w-identification sends to -b*w1 - a*w2
    pair = StdPair(F(7, 2), F(11, 3))
    m2, _ = symmetroid(pair)
    a, b = pair.a, pair.b
    expected = MPoly.from_dict(RING_W, {(0, 1, 0, 0): -b, (0, 0, 1, 0): -a})
    assert m2.entry(0, 1) == expected


def test_symmetroid_nodes_ten_verified_loci():
    report = symmetroid_nodes(StdPair(2, 3))
    assert report.count == 10
    assert all(rec.verified for rec in report.records)
    pair_records = [rec for rec in report.records if rec.point is not None]
    conic_records = [rec for rec in report.records if rec.point is None]
    assert len(pair_records) == 6
    assert len(conic_records) == 4


def test_symmetroid_explicit_singular_points_have_rank_two_hessians():
    # the spec of the construction expects ordinary nodes (Hessian rank 3);
    # the exact Hessian rank at every explicit singular point is 2, because
    # the quartic is a union of four planes, singular along six lines
    _, s = symmetroid(StdPair(F(5, 4), F(13, 12)))
    rep = classify_point(s, (0, 9, 5, 0))
    assert rep.gradient_vanishes
    assert rep.hessian_rank == 2
    assert rep.classification == "degenerate"


def test_symmetroid_singular_along_the_six_lines():
    # a point on the line joining two conic-intersection points, away from
    # the coordinate loci, is still singular: (1, 0, 0, t) with t^2 = 24
    _, s = symmetroid(StdPair(2, 3))
    rep = classify_point(s, ((1, 0), 0, 0, (0, 1)), extension=24)
    assert rep.gradient_vanishes


def test_symmetroid_excluded_parameters_detected():
    pair = StdPair(F(5, 4), F(5, 3))
    assert (pair.a**2 - 1) * (pair.b**2 - 1) == 1
    _, s = symmetroid(pair)
    rep = classify_point(s, (0, 9, 16, 0))
    assert rep.gradient_vanishes and rep.classification == "degenerate"


def test_section_two_conics():
    assert section_two_conics(StdPair(2, 3))
    assert section_two_conics(StdPair(F(5, 4), F(13, 12)))


def test_section_conics_random_sweep():
    rng = random.Random(12)
    done = 0
    while done < 10:
        a = F(rng.randint(2, 9), rng.randint(1, 4))
        b = F(rng.randint(2, 9), rng.randint(1, 4))
        if a * a == b * b or a * a == 1 or b * b == 1:
            continue
        assert section_two_conics(StdPair(a, b))
        done += 1


def test_section_is_reducible_but_no_plane_section_is_smooth():
    # reducible member: the w0 = 0 section is the (split) pair of conics;
    # smooth members do not exist, since every plane in P^3 meets the six
    # singular lines of the four-plane quartic
    pair = StdPair(2, 3)
    section, cplus, cminus, ext = section_conics(pair)
    assert verify_product(PlaneCurve(section), [cplus, cminus], extension=ext)
    rng = random.Random(5)
    ring3 = ("u0", "u1", "u2")
    _, s = symmetroid(pair)
    for _ in range(5):
        # substitute a random plane w3 = c0 w0 + c1 w1 + c2 w2
        c = [F(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(3)]
        u = [MPoly.variable(ring3, v) for v in ring3]
        image = c[0] * u[0] + c[1] * u[1] + c[2] * u[2]
        restricted = s.compose({"w0": u[0], "w1": u[1], "w2": u[2], "w3": image})
        if restricted.is_zero():
            continue
        assert not is_smooth(PlaneCurve(restricted))


def test_conic_intersection_membership_direct():
    assert conic_intersection_membership(StdPair(2, 3))
    assert conic_intersection_membership(StdPair(F(5, 4), F(13, 12)))


def test_singular_on_scheme_on_symmetroid_locus():
    _, s = symmetroid(StdPair(2, 3))
    w = [MPoly.variable(RING_W, v) for v in RING_W]
    ideal = Ideal.of([w[0], w[3], 8 * (w[1] * w[1]) - 3 * (w[2] * w[2])])
    assert singular_on_scheme(s, ideal)
    bad = Ideal.of([w[0], w[3], 7 * (w[1] * w[1]) - 3 * (w[2] * w[2])])
    assert not singular_on_scheme(s, bad)
