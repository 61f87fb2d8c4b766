"""The acceptance suite: every headline computational claim as a checklist.

Each criterion function returns a CriterionResult with named sub-checks, so
the CLI and the test suite share one implementation.  All arithmetic is
exact; a sub-check either holds identically or fails with the computed
witness in its detail string.

One sub-check is expected to fail and is reported honestly (see C7): the
explicit singular points of the standard-pair symmetroid have Hessian rank
2, not 3.  The surface is a union of four planes (certified exactly by
symmetroid_two_quadric_split), singular along the six lines joining its
four triple points, so none of its singular points is an ordinary node.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import macaulay
from .curves import PlaneCurve, is_smooth
from .exactpoly import MPoly, parse_poly
from .genus2 import (
    Genus2Curve,
    LorenzenPoint,
    OddBundleData,
    VgpNet,
    lorenzen_discriminant_report,
    lorenzen_net,
    odd_net,
    odd_triangle_check,
    vgp_branch_identity,
)
from .genus3 import (
    RING_XYZ,
    SixRelationParams,
    SpecialParams,
    StdPair,
    conic_intersection_membership,
    discriminant_split,
    genus3_web,
    mat2_derivation_check,
    section_two_conics,
    six_relations,
    special_case,
    standard_bundle_data,
    symmetroid,
    symmetroid_nodes,
    symmetroid_two_quadric_split,
)
from .groebner import buchberger, Ideal
from .multiplicity import build_algebra, is_very_stable, poincare_pairing
from .quadrics import classify_point

F = Fraction


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CriterionResult:
    cid: int
    title: str
    seconds: float = 0.0
    subchecks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.subchecks)

    def check(self, name: str, ok: bool, detail: str = ""):
        self.subchecks.append(SubCheck(name, bool(ok), detail))


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    return wrapper


def _pairings_nondegenerate(alg) -> bool:
    return all(
        poincare_pairing(alg, k)[1] for k in range(alg.socle_degree + 1)
    )


LORENZEN_POINTS = (
    (F(1, 2), F(1, 3), F(1, 5)),
    (F(1, 3), F(1, 5), F(1, 7)),
    (F(2, 7), F(3, 11), F(5, 13)),
)


@_timed
def criterion_1() -> CriterionResult:
    r = CriterionResult(1, "genus-2 odd net: dimension, triangle discriminant")
    t0 = time.perf_counter()
    curve = Genus2Curve((0, 1, 2, 3, 4, 5))
    data = OddBundleData((-1, 6, 7))
    net = odd_net(curve, data)
    alg = build_algebra(net)
    r.check("dim == 8", alg.dim == 8, f"dim={alg.dim}")
    r.check("hilbert == (1,3,3,1)", alg.hilbert == (1, 3, 3, 1), str(alg.hilbert))
    squares = [
        MPoly.from_dict(alg.ring, {tuple(2 if j == i else 0 for j in range(3)): 1})
        for i in range(3)
    ]
    r.check(
        "ideal == (x1^2, x2^2, x3^2)",
        sorted(map(str, alg.gb.elements)) == sorted(map(str, squares)),
        "; ".join(map(str, alg.gb.elements)),
    )
    r.check("triangle of chords", odd_triangle_check(curve, data))
    elapsed = time.perf_counter() - t0
    r.check("runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f}s")
    return r


@_timed
def criterion_2() -> CriterionResult:
    r = CriterionResult(2, "even-degree nets: dim 8, smooth cubic, j varies")
    js = []
    for u in LORENZEN_POINTS:
        t0 = time.perf_counter()
        point = LorenzenPoint((2, 3, 5), u)
        alg = build_algebra(lorenzen_net(point))
        rep = lorenzen_discriminant_report(point)
        tag = f"u={tuple(map(str, u))}"
        r.check(f"{tag}: very stable, dim 8", rep.very_stable and rep.dim == 8)
        r.check(f"{tag}: pairings nondegenerate", _pairings_nondegenerate(alg))
        r.check(f"{tag}: discriminant cubic smooth", bool(rep.smooth))
        elapsed = time.perf_counter() - t0
        r.check(f"{tag}: runtime < 10 s", elapsed < 10.0, f"{elapsed:.2f}s")
        js.append(rep.j)
    r.check(
        "j differs between first two points",
        js[0] is not None and js[1] is not None and js[0] != js[1],
    )
    return r


def _random_symmetric(rng) -> tuple:
    return tuple(
        tuple(
            F(rng.randint(-9, 9), rng.randint(1, 4)) if i <= j else None
            for j in range(3)
        )
        for i in range(3)
    )


def _symmetrize(half):
    m = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            m[i][j] = half[i][j] if i <= j else half[j][i]
    return tuple(tuple(row) for row in m)


@_timed
def criterion_3(seed: int = 0) -> CriterionResult:
    r = CriterionResult(3, "branch-point identity for nets of conics")
    rng = random.Random(seed)
    t0 = time.perf_counter()
    count = 0
    while count < 100:
        try:
            v = VgpNet(
                _symmetrize(_random_symmetric(rng)),
                _symmetrize(_random_symmetric(rng)),
                _symmetrize(_random_symmetric(rng)),
            )
        except Exception:
            continue  # dependent triple; redraw
        if not vgp_branch_identity(v):
            r.check("identity holds for 100 random triples", False, f"failed at #{count}")
            return r
        count += 1
    r.check("identity holds for 100 random triples", True)
    elapsed = time.perf_counter() - t0
    r.check("runtime < 5 s", elapsed < 5.0, f"{elapsed:.2f}s")
    return r


def _random_quadratic(rng) -> MPoly:
    while True:
        terms = {}
        for e in ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)):
            c = rng.randint(-4, 4)
            if c:
                terms[e] = F(c)
        if terms:
            return MPoly.from_dict(RING_XYZ, terms)


def _random_pair(rng) -> StdPair:
    while True:
        a = F(rng.randint(-8, 8), rng.randint(1, 4))
        b = F(rng.randint(-8, 8), rng.randint(1, 4))
        if a and b and a * a != b * b:
            return StdPair(a, b)


@_timed
def criterion_4(seed: int = 0) -> CriterionResult:
    r = CriterionResult(4, "discriminant splits off the quadric factor exactly")
    rng = random.Random(seed + 4)
    for i in range(10):
        pair = _random_pair(rng)
        q = _random_quadratic(rng)
        t0 = time.perf_counter()
        data = standard_bundle_data(pair, q)
        split = discriminant_split(data)  # NotDivisibleError = claim failure
        back = split.quartic * split.quadric == split.discriminant
        tag = f"#{i} (a={pair.a}, b={pair.b})"
        r.check(f"{tag}: zero remainder", back)
        r.check(f"{tag}: quartic degree 4", split.quartic.total_degree() == 4)
        r.check(
            f"{tag}: quadric Gram rank 3, degenerate on the plane",
            split.quadric_gram_rank == 3 and split.degeneracy_plane_ok,
            f"rank={split.quadric_gram_rank}",
        )
        elapsed = time.perf_counter() - t0
        r.check(f"{tag}: runtime < 30 s", elapsed < 30.0, f"{elapsed:.2f}s")
    return r


@_timed
def criterion_5() -> CriterionResult:
    r = CriterionResult(5, "genus-3 webs: dim 64, palindromic grading, duality")
    instances = [
        ("six-relation presentation", six_relations(SixRelationParams(2, 3, (1,) * 6))),
        (
            "web from standard pair (2,3), Q=xy",
            genus3_web(standard_bundle_data(StdPair(2, 3), parse_poly(RING_XYZ, "x*y"))),
        ),
    ]
    for tag, net in instances:
        t0 = time.perf_counter()
        alg = build_algebra(net)
        elapsed = time.perf_counter() - t0
        r.check(f"{tag}: dim == 64", alg.dim == 64, f"dim={alg.dim}")
        r.check(
            f"{tag}: hilbert (1,6,15,20,15,6,1)",
            alg.hilbert == (1, 6, 15, 20, 15, 6, 1),
            str(alg.hilbert),
        )
        r.check(f"{tag}: all pairings nondegenerate", _pairings_nondegenerate(alg))
        r.check(f"{tag}: basis computed < 60 s", elapsed < 60.0, f"{elapsed:.2f}s")
    return r


@_timed
def criterion_6() -> CriterionResult:
    r = CriterionResult(6, "special-case base-point criterion")
    t0 = time.perf_counter()
    p1 = SpecialParams((F(1, 3),) * 3, (F(1, 3),) * 3)
    r.check("a_i=b_i=1/3: not very stable", not is_very_stable(special_case(p1)))
    p2 = SpecialParams((1, 2, 3), (1, 1, 1))
    alg2 = build_algebra(special_case(p2))
    r.check("a=(1,2,3), b=(1,1,1): dim 64", alg2.dim == 64, f"dim={alg2.dim}")
    p3 = SpecialParams((0, 0, 0), (0, 0, 0))
    alg3 = build_algebra(special_case(p3))
    monomials = sorted(
        str(MPoly.from_dict(alg3.ring, {tuple(2 if j == i else 0 for j in range(6)): 1}))
        for i in range(6)
    )
    r.check(
        "a_i=b_i=0: dim 64 with square relations",
        alg3.dim == 64 and sorted(map(str, alg3.gb.elements)) == monomials,
    )
    elapsed = time.perf_counter() - t0
    r.check("runtime < 60 s", elapsed < 60.0, f"{elapsed:.2f}s")
    return r


@_timed
def criterion_7() -> CriterionResult:
    r = CriterionResult(7, "symmetroid: singular loci, explicit points, section")
    t0 = time.perf_counter()
    report = symmetroid_nodes(StdPair(2, 3))
    pairs = [rec for rec in report.records if rec.point is not None]
    conic = [rec for rec in report.records if rec.point is None]
    r.check(
        "ten verified singular loci (6 coordinate-pair + 4 conic-intersection)",
        report.count == 10
        and len(pairs) == 6
        and len(conic) == 4
        and all(rec.verified for rec in report.records),
    )
    _, s54 = symmetroid(StdPair(F(5, 4), F(13, 12)))
    rep = classify_point(s54, (0, 9, 5, 0))
    r.check(
        "explicit point (0,9,5,0) at (5/4,13/12): gradient vanishes",
        rep.gradient_vanishes,
    )
    r.check(
        "explicit point (0,9,5,0): Hessian rank 3 (ordinary node)",
        rep.hessian_rank == 3,
        f"computed rank {rep.hessian_rank}; the quartic is a union of four "
        f"planes (two conjugate quadrics over sqrt((a^2-1)(b^2-1)): "
        f"{symmetroid_two_quadric_split(StdPair(F(5, 4), F(13, 12)))}), singular "
        f"along the six lines joining its four triple points, so no singular "
        f"point is an ordinary node",
    )
    _, s53 = symmetroid(StdPair(F(5, 4), F(5, 3)))
    rep53 = classify_point(s53, (0, 9, 16, 0))
    r.check(
        "excluded case (5/4,5/3): degeneracy detected",
        rep53.gradient_vanishes and rep53.classification == "degenerate",
        f"rank={rep53.hessian_rank}",
    )
    r.check("w0=0 section factors into the two conics", section_two_conics(StdPair(2, 3)))
    elapsed = time.perf_counter() - t0
    r.check("runtime < 30 s", elapsed < 30.0, f"{elapsed:.2f}s")
    return r


@_timed
def criterion_8(seed: int = 0) -> CriterionResult:
    r = CriterionResult(8, "coordinate-change validation of the symmetroid matrix")
    rng = random.Random(seed + 8)
    t0 = time.perf_counter()
    for i in range(20):
        pair = _random_pair(rng)
        if not mat2_derivation_check(pair):
            r.check("20 random (a, b) re-derivations", False, f"failed at (a={pair.a}, b={pair.b})")
            return r
    r.check("20 random (a, b) re-derivations", True)
    elapsed = time.perf_counter() - t0
    r.check("runtime < 20 s", elapsed < 20.0, f"{elapsed:.2f}s")
    return r


@_timed
def criterion_9() -> CriterionResult:
    r = CriterionResult(9, "Hilbert data cross-checked by Macaulay ranks")

    def compare(tag, net):
        gens = [q for q in net.quadrics() if not q.is_zero()]
        alg = build_algebra(net)
        dims = macaulay.quotient_dimensions(gens, max_degree=len(alg.hilbert) + 2)
        r.check(
            f"{tag}: oracle dims match",
            dims == list(alg.hilbert) + [0],
            f"groebner {list(alg.hilbert)} vs macaulay {dims}",
        )

    compare("odd net", odd_net(Genus2Curve((0, 1, 2, 3, 4, 5)), OddBundleData((-1, 6, 7))))
    for u in LORENZEN_POINTS:
        compare(f"even net u={tuple(map(str, u))}", lorenzen_net(LorenzenPoint((2, 3, 5), u)))
    compare("six relations", six_relations(SixRelationParams(2, 3, (1,) * 6)))
    compare(
        "standard-pair web",
        genus3_web(standard_bundle_data(StdPair(2, 3), parse_poly(RING_XYZ, "x*y"))),
    )
    compare("special (1,2,3)/(1,1,1)", special_case(SpecialParams((1, 2, 3), (1, 1, 1))))
    compare("special zeros", special_case(SpecialParams((0, 0, 0), (0, 0, 0))))
    base = special_case(SpecialParams((F(1, 3),) * 3, (F(1, 3),) * 3))
    dims = macaulay.quotient_dimensions(base.quadrics(), max_degree=8)
    r.check(
        "base-point case: quotient never vanishes (both methods)",
        not is_very_stable(base) and len(dims) == 9 and all(d > 0 for d in dims),
        f"macaulay dims {dims}",
    )
    return r


def run_all(seed: int = 0):
    return [
        criterion_1(),
        criterion_2(),
        criterion_3(seed),
        criterion_4(seed),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(seed),
        criterion_9(),
    ]


def format_results(results) -> str:
    lines = []
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        lines.append(f"[{mark}] criterion {res.cid}: {res.title} ({res.seconds:.2f}s)")
        for sub in res.subchecks:
            m = "ok" if sub.passed else "FAIL"
            detail = f"  [{sub.detail}]" if sub.detail and not sub.passed else ""
            lines.append(f"    - {m}: {sub.name}{detail}")
    return "\n".join(lines)
