"""Genus-3 constructions: the 6x6 quadratic-form matrix, its discriminant
factorization, the six-relation algebra, the special-case family, and the
quartic symmetroid with its singular loci.

The 6x6 matrix is built from six linear pairings b11, b12, b22, b33, b34,
b44 and a quadratic Q in (x, y, z); its entries are quadratic forms, hence
linear functions on the dual space with coordinates m0..m5 (the basis
x^2, y^2, z^2, xy, xz, yz).  The determinant in those coordinates is the
degree-6 discriminant of the associated web of quadrics, and the quadric
Q1*Q2 - Q^2 (linearized) splits off exactly, leaving a quartic factor.

The "standard pair" specializes b11, b12, b22 = x+y, z, x-y and b33, b34,
b44 = ax+by, z, ax-by, so Q1 = x^2-y^2-z^2 and Q2 = a^2x^2-b^2y^2-z^2.  On
the subspace Q1 = Q2 = 0, with homogeneous coordinates w1 = yz, w2 = zx,
w3 = xy and z^2 = (a^2-b^2)w0, the Q-free 4x4 block becomes an explicit
symmetric matrix of linear forms in w; its determinant is the quartic
surface studied by the singular-locus routines here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import fraction_rank, kernel_basis
from .errors import DegenerateParametersError
from .exactpoly import (
    MPoly,
    PolyMatrix,
    RING_M,
    det,
    exact_divide,
    linearize_quadratics,
    reduce_root,
)
from .groebner import Ideal, buchberger, normal_form
from .quadrics import NetOfQuadrics, classify_point, singular_on_scheme

RING_XYZ = ("x", "y", "z")
RING_W = ("w0", "w1", "w2", "w3")
RING_XE = ("xi1", "xi2", "xi3", "eta1", "eta2", "eta3")


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Genus3BundleData:
    """Pairings (v_i, v_j) as linear forms, plus the square-root quadratic Q."""

    b11: MPoly
    b12: MPoly
    b22: MPoly
    b33: MPoly
    b34: MPoly
    b44: MPoly
    q: MPoly

    def __post_init__(self):
        for name in ("b11", "b12", "b22", "b33", "b34", "b44"):
            p = getattr(self, name)
            if p.ring != RING_XYZ or (not p.is_zero() and p.total_degree() != 1):
                raise ValueError(f"{name} must be a linear form in (x, y, z)")
        if self.q.ring != RING_XYZ or (not self.q.is_zero() and self.q.total_degree() != 2):
            raise ValueError("q must be a quadratic form in (x, y, z)")
        if self.det_plus.is_zero() or self.det_minus.is_zero():
            raise ValueError("both 2x2 block determinants must be nonzero")

    @property
    def det_plus(self) -> MPoly:
        return self.b11 * self.b22 - self.b12 * self.b12

    @property
    def det_minus(self) -> MPoly:
        return self.b33 * self.b44 - self.b34 * self.b34

    def quartic_curve(self) -> MPoly:
        return self.det_plus * self.det_minus - self.q * self.q


@dataclass(frozen=True)
class StdPair:
    """Parameters of the simultaneously diagonalized pair of conics."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _fr(self.a))
        object.__setattr__(self, "b", _fr(self.b))
        if self.a == 0 or self.b == 0:
            raise DegenerateParametersError("parameters a, b must be nonzero")

    def require_distinct_squares(self):
        if self.a * self.a == self.b * self.b:
            raise DegenerateParametersError("a^2 == b^2 is excluded")


@dataclass(frozen=True)
class SixRelationParams:
    a: Fraction
    b: Fraction
    coeffs: tuple  # a1..a6

    def __post_init__(self):
        object.__setattr__(self, "a", _fr(self.a))
        object.__setattr__(self, "b", _fr(self.b))
        object.__setattr__(self, "coeffs", tuple(_fr(c) for c in self.coeffs))
        if len(self.coeffs) != 6:
            raise ValueError("need six coefficients a1..a6")


@dataclass(frozen=True)
class SpecialParams:
    a: tuple  # a1, a2, a3
    b: tuple  # b1, b2, b3

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_fr(c) for c in self.a))
        object.__setattr__(self, "b", tuple(_fr(c) for c in self.b))
        if len(self.a) != 3 or len(self.b) != 3:
            raise ValueError("need three coefficients on each side")


def standard_bundle_data(pair: StdPair, q: MPoly) -> Genus3BundleData:
    x, y, z = (MPoly.variable(RING_XYZ, v) for v in RING_XYZ)
    a, b = pair.a, pair.b
    return Genus3BundleData(x + y, z, x - y, a * x + b * y, z, a * x - b * y, q)


# ---------- the 6x6 matrix and its web ----------

def big_matrix(data: Genus3BundleData) -> PolyMatrix:
    """The symmetric 6x6 matrix of the quadratic map, entries in (x, y, z)."""
    b11, b12, b22 = data.b11, data.b12, data.b22
    b33, b34, b44 = data.b33, data.b34, data.b44
    q = data.q
    q1, q2 = data.det_plus, data.det_minus
    zero = MPoly.zero(RING_XYZ)
    rows = [
        [b22 * b33, -(b12 * b33), zero, q - b12 * b34, -(b22 * b34), zero],
        [-(b12 * b33), b11 * b33, zero, b11 * b34, q + b12 * b34, zero],
        [zero, zero, q1, zero, zero, q],
        [q - b12 * b34, b11 * b34, zero, b11 * b44, b12 * b44, zero],
        [-(b22 * b34), q + b12 * b34, zero, b12 * b44, b22 * b44, zero],
        [zero, zero, q, zero, zero, q2],
    ]
    return PolyMatrix.from_rows(rows)


def linearized_matrix(data: Genus3BundleData) -> PolyMatrix:
    """big_matrix with every entry rewritten as a linear form in m0..m5."""
    zero = MPoly.zero(RING_M)
    return big_matrix(data).map_entries(
        lambda e: linearize_quadratics(e) if not e.is_zero() else zero
    )


def genus3_web(data: Genus3BundleData) -> NetOfQuadrics:
    """Six 6x6 Gram matrices G_j: the coefficient of m_j in the matrix.

    The relations of the multiplicity algebra are v^T G_j v = 0."""
    ml = linearized_matrix(data)
    slots = [tuple(1 if k == j else 0 for k in range(6)) for j in range(6)]
    grams = []
    for j in range(6):
        g = tuple(
            tuple(ml.entry(r, c).coefficient(slots[j]) for c in range(6))
            for r in range(6)
        )
        grams.append(g)
    return NetOfQuadrics(6, tuple(grams))


@dataclass(frozen=True)
class DiscriminantSplit:
    discriminant: MPoly  # degree 6 in m0..m5
    quadric: MPoly  # linearized Q1*Q2 - Q^2
    quartic: MPoly  # exact cofactor
    quadric_gram_rank: int
    degeneracy_plane_ok: bool  # kernel of the quadric == {L1 = L2 = L = 0}


def discriminant_split(data: Genus3BundleData) -> DiscriminantSplit:
    """Split det(M) = (linearized Q1*Q2 - Q^2) * quartic, exactly.

    NotDivisibleError here would falsify the factorization claim; it is a
    build-failing event, never an expected branch.
    """
    d = det(linearized_matrix(data))
    l1 = linearize_quadratics(data.det_plus)
    l2 = linearize_quadratics(data.det_minus)
    l = (
        linearize_quadratics(data.q)
        if not data.q.is_zero()
        else MPoly.zero(RING_M)
    )
    quad = l1 * l2 - l * l
    quartic = exact_divide(d, quad)
    # Gram data of the quadric factor in the m-coordinates
    gram = [[Fraction(0)] * 6 for _ in range(6)]
    for exps, c in quad.terms.items():
        nz = [i for i, e in enumerate(exps) if e]
        if len(nz) == 1:
            gram[nz[0]][nz[0]] = c
        else:
            i, j = nz
            gram[i][j] = gram[j][i] = c / 2
    rank = fraction_rank(gram)
    kern = kernel_basis(gram)
    plane_ok = all(
        all(
            sum(f.coefficient(tuple(1 if t == s else 0 for t in range(6))) * v[s] for s in range(6)) == 0
            for v in kern
        )
        for f in (l1, l2, l)
        if not f.is_zero()
    )
    return DiscriminantSplit(d, quad, quartic, rank, plane_ok)


# ---------- explicit relation presentations ----------

def six_relations(params: SixRelationParams) -> NetOfQuadrics:
    """The six displayed relations in (xi1, xi2, xi3, eta1, eta2, eta3)."""
    a, b = params.a, params.b
    a1, a2, a3, a4, a5, a6 = params.coeffs
    x1, x2, x3, e1, e2, e3 = (MPoly.variable(RING_XE, v) for v in RING_XE)
    dot = x1 * e1 + x2 * e2 + x3 * e3
    rels = [
        (a - b) * (1 + a * b) * (x1 * x1 + e1 * e1)
        + (a + b) * (1 - a * b) * (x2 * x2 + e2 * e2)
        + 2 * (a * a - b * b) * (x1 * e1 - x2 * e2)
        + a1 * dot,
        (x1 * e2 - x2 * e1) + a * (x1 * x2 - e1 * e2) + a2 * dot,
        (x1 * e2 + x2 * e1) - b * (x1 * x2 + e1 * e2) + a3 * dot,
        (a + b) * (x2 * x2 - e2 * e2) - (a - b) * (x1 * x1 - e1 * e1) + a4 * dot,
        x3 * x3 + a5 * dot,
        e3 * e3 + a6 * dot,
    ]
    return NetOfQuadrics.from_quadrics(rels)


def special_case(params: SpecialParams) -> NetOfQuadrics:
    """Relations xi_i^2 = a_i * P, eta_i^2 = b_i * P with P the dot pairing."""
    x1, x2, x3, e1, e2, e3 = (MPoly.variable(RING_XE, v) for v in RING_XE)
    dot = x1 * e1 + x2 * e2 + x3 * e3
    xs, es = (x1, x2, x3), (e1, e2, e3)
    rels = [xs[i] * xs[i] - params.a[i] * dot for i in range(3)]
    rels += [es[i] * es[i] - params.b[i] * dot for i in range(3)]
    return NetOfQuadrics.from_quadrics(rels)


def _rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if x < 0:
        return None
    from math import isqrt

    pn, qn = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and qn * qn == x.denominator:
        return Fraction(pn, qn)
    return None


def surd_criterion(params: SpecialParams):
    """Base-point criterion: some sign choice of sum(sqrt(a_i*b_i)) equals 1.

    Decidable over the rationals only when every product a_i*b_i is a
    rational square; returns None otherwise."""
    roots = []
    for ai, bi in zip(params.a, params.b):
        r = _rational_sqrt(ai * bi)
        if r is None:
            return None
        roots.append(r)
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                if s1 * roots[0] + s2 * roots[1] + s3 * roots[2] == 1:
                    return True
    return False


def special_base_point(params: SpecialParams) -> bool:
    """True iff the special-case relations have a base point (not very
    stable), cross-checked against the surd criterion when decidable."""
    from .multiplicity import is_very_stable

    has_base = not is_very_stable(special_case(params))
    crit = surd_criterion(params)
    if crit is not None and crit != has_base:
        raise AssertionError(
            "surd criterion disagrees with the zero-dimensionality test"
        )
    return has_base


# ---------- the quartic symmetroid ----------

def symmetroid(pair: StdPair):
    """The 4x4 symmetric matrix of linear forms in w0..w3 and its quartic
    determinant (with c = (a-b)(1+ab), d = (a+b)(1-ab))."""
    pair.require_distinct_squares()
    a, b = pair.a, pair.b
    w0, w1, w2, w3 = (MPoly.variable(RING_W, v) for v in RING_W)
    c = (a - b) * (1 + a * b)
    d = (a + b) * (1 - a * b)
    rows = [
        [c * w0 - (a - b) * w3, -b * w1 - a * w2, (b * b - a * a) * w0, w1 - w2],
        [-b * w1 - a * w2, d * w0 + (a + b) * w3, w1 + w2, (a * a - b * b) * w0],
        [(b * b - a * a) * w0, w1 + w2, c * w0 + (a - b) * w3, -b * w1 + a * w2],
        [w1 - w2, (a * a - b * b) * w0, -b * w1 + a * w2, d * w0 - (a + b) * w3],
    ]
    m = PolyMatrix.from_rows(rows)
    return m, det(m)


def mat2_derivation_check(pair: StdPair) -> bool:
    """Re-derive the symmetroid matrix from the Q-free 4x4 block.

    Substitutes the standard-pair linear forms, reduces each entry modulo
    the Groebner basis of (Q1, Q2), rewrites the surviving monomials through
    yz -> w1, zx -> w2, xy -> w3, z^2 -> (a^2-b^2) w0, and compares with the
    displayed matrix.  A False return is a transcription bug."""
    pair.require_distinct_squares()
    a, b = pair.a, pair.b
    x, y, z = (MPoly.variable(RING_XYZ, v) for v in RING_XYZ)
    data = standard_bundle_data(pair, x * y)  # q is irrelevant for this block
    b11, b12, b22 = data.b11, data.b12, data.b22
    b33, b34, b44 = data.b33, data.b34, data.b44
    block = [
        [b22 * b33, -(b12 * b33), -(b12 * b34), -(b22 * b34)],
        [-(b12 * b33), b11 * b33, b11 * b34, b12 * b34],
        [-(b12 * b34), b11 * b34, b11 * b44, b12 * b44],
        [-(b22 * b34), b12 * b34, b12 * b44, b22 * b44],
    ]
    gb = buchberger(Ideal.of([data.det_plus, data.det_minus]))
    w0, w1, w2, w3 = (MPoly.variable(RING_W, v) for v in RING_W)
    wmap = {
        (0, 0, 2): (a * a - b * b) * w0,
        (1, 1, 0): w3,
        (1, 0, 1): w2,
        (0, 1, 1): w1,
    }
    m2, _ = symmetroid(pair)
    for i in range(4):
        for j in range(4):
            nf = normal_form(block[i][j], gb)
            image = MPoly.zero(RING_W)
            for exps, c in nf.terms.items():
                if exps not in wmap:
                    return False
                image = image + c * wmap[exps]
            if image != m2.entry(i, j):
                return False
    return True


@dataclass(frozen=True)
class NodeRecord:
    locus: str
    kind: str  # "node" | "degenerate" | "scheme-verified"
    verified: bool
    point: tuple | None = None
    extension: Fraction | None = None
    hessian_rank: int | None = None


@dataclass(frozen=True)
class NodeReport:
    records: tuple
    count: int


def _pair_loci(pair: StdPair):
    """The three coordinate-pair singular loci: (ideal generators, the two
    explicit points over a single quadratic extension)."""
    a2 = pair.a * pair.a
    b2 = pair.b * pair.b
    if a2 == 1 or b2 == 1:
        raise DegenerateParametersError(
            "a^2 == 1 or b^2 == 1 collapses the coordinate loci"
        )
    w = MPoly.variables(RING_W)
    loci = []
    # (z^2, xy): w0 = w3 = 0, (b^2-1) w1^2 = (a^2-1) w2^2
    d1 = (a2 - 1) * (b2 - 1)
    loci.append(
        (
            "w0 = w3 = 0, (b^2-1) w1^2 = (a^2-1) w2^2",
            [w[0], w[3], (b2 - 1) * (w[1] * w[1]) - (a2 - 1) * (w[2] * w[2])],
            d1,
            [
                (0, (0, 1), (b2 - 1, 0), 0),
                (0, (0, -1), (b2 - 1, 0), 0),
            ],
        )
    )
    # (y^2, zx): w0 = w2 = 0, (b^2-1) w1^2 = (b^2-a^2) w3^2
    d2 = (b2 - a2) * (b2 - 1)
    loci.append(
        (
            "w0 = w2 = 0, (b^2-1) w1^2 = (b^2-a^2) w3^2",
            [w[0], w[2], (b2 - 1) * (w[1] * w[1]) - (b2 - a2) * (w[3] * w[3])],
            d2,
            [
                (0, (0, 1), 0, (b2 - 1, 0)),
                (0, (0, -1), 0, (b2 - 1, 0)),
            ],
        )
    )
    # (x^2, yz): w0 = w1 = 0, (a^2-1) w2^2 = (b^2-a^2) w3^2
    d3 = (b2 - a2) * (a2 - 1)
    loci.append(
        (
            "w0 = w1 = 0, (a^2-1) w2^2 = (b^2-a^2) w3^2",
            [w[0], w[1], (a2 - 1) * (w[2] * w[2]) - (b2 - a2) * (w[3] * w[3])],
            d3,
            [
                (0, 0, (0, 1), (a2 - 1, 0)),
                (0, 0, (0, -1), (a2 - 1, 0)),
            ],
        )
    )
    return loci


def conic_intersection_membership(pair: StdPair) -> bool:
    """All partials of the symmetroid vanish at the four intersection points
    of the two conics, checked by membership modulo the conic ideal after
    pulling back through (w0, w1, w2, w3) = (z^2/(a^2-b^2), yz, zx, xy)."""
    pair.require_distinct_squares()
    a, b = pair.a, pair.b
    _, s = symmetroid(pair)
    x, y, z = (MPoly.variable(RING_XYZ, v) for v in RING_XYZ)
    pull = {
        "w0": (z * z) * (1 / (a * a - b * b)),
        "w1": y * z,
        "w2": z * x,
        "w3": x * y,
    }
    q1 = x * x - y * y - z * z
    q2 = a * a * (x * x) - b * b * (y * y) - z * z
    gb = buchberger(Ideal.of([q1, q2]))
    return all(
        normal_form(s.partial(i).compose(pull), gb).is_zero() for i in range(4)
    )


def symmetroid_nodes(pair: StdPair) -> NodeReport:
    """The ten singular loci of the symmetroid: six explicit points on the
    three coordinate-pair loci (scheme-verified, classified when a single
    quadratic extension suffices) and the four conic-intersection points
    (scheme-verified through the conic ideal)."""
    pair.require_distinct_squares()
    _, s = symmetroid(pair)
    records = []
    for locus, gens, d, points in _pair_loci(pair):
        gens = [g for g in gens if not g.is_zero()]
        ok = singular_on_scheme(s, Ideal.of(gens))
        for pt in points:
            # fold the surd into the rationals when d is a perfect square
            root = _rational_sqrt(d) if d >= 0 else None
            if root is not None:
                rat = tuple(
                    c[0] + c[1] * root if isinstance(c, tuple) else _fr(c)
                    for c in pt
                )
                rep = classify_point(s, rat)
            else:
                rep = classify_point(s, pt, extension=d)
            records.append(
                NodeRecord(locus, rep.classification, ok, pt, d, rep.hessian_rank)
            )
    ok4 = conic_intersection_membership(pair)
    for sig in ("+++", "++-", "+-+", "+--"):
        records.append(
            NodeRecord(
                f"conic intersection (x,y,z) signs {sig}",
                "scheme-verified",
                ok4,
            )
        )
    return NodeReport(tuple(records), len(records))


def section_conics(pair: StdPair):
    """The w0 = 0 section and the two displayed conics over the extension
    s^2 = (1-a^2)(a^2-b^2).  Returns (section, C+, C-, D)."""
    pair.require_distinct_squares()
    a2 = pair.a * pair.a
    b2 = pair.b * pair.b
    _, s = symmetroid(pair)
    ring = ("w1", "w2", "w3")
    w1, w2, w3 = (MPoly.variable(ring, v) for v in ring)
    section = s.compose(
        {"w0": MPoly.zero(ring), "w1": w1, "w2": w2, "w3": w3}
    )
    ext = ring + ("s",)
    e1, e2, e3, es = (MPoly.variable(ext, v) for v in ext)
    base = (b2 - 1) * (e1 * e1) - (a2 - 1) * (e2 * e2) + (a2 - b2) * (e3 * e3)
    cplus = base - 2 * (es * e2 * e3)
    cminus = base + 2 * (es * e2 * e3)
    dd = (1 - a2) * (a2 - b2)
    return section, cplus, cminus, dd


def section_two_conics(pair: StdPair) -> bool:
    """Exact check that the w0 = 0 plane section is the product of the two
    displayed conics over s^2 = (1-a^2)(a^2-b^2), and that the conics meet
    exactly where w2 = 0 or w3 = 0."""
    from .curves import PlaneCurve, verify_product

    section, cplus, cminus, dd = section_conics(pair)
    if not verify_product(PlaneCurve(section), [cplus, cminus], extension=dd):
        return False
    # C+ - C- = -4 s w2 w3: the conics agree exactly on w2 = 0 and w3 = 0
    diff = cplus - cminus
    ring = cplus.ring
    expected = -4 * (
        MPoly.variable(ring, "s") * MPoly.variable(ring, "w2") * MPoly.variable(ring, "w3")
    )
    return diff == expected


def symmetroid_two_quadric_split(pair: StdPair) -> bool:
    """The symmetroid splits into two conjugate quadric forms over
    sqrt((a^2-1)(b^2-1)); each has rank <= 2, so the surface is a union of
    four planes, singular along the six lines joining the four triple
    points.  (This is the exact local structure behind the degenerate
    Hessians at the explicit singular points.)"""
    pair.require_distinct_squares()
    a2 = pair.a * pair.a
    b2 = pair.b * pair.b
    _, s = symmetroid(pair)
    ext = RING_W + ("s",)
    w0, w1, w2, w3, es = (MPoly.variable(ext, v) for v in ext)
    dd = (a2 - 1) * (b2 - 1)
    alpha2 = (a2 - 1) * (b2 - 1) * (b2 - a2)
    # A = alpha^2 w0^2 + (b^2-a^2) w3^2 - (b^2-1) w1^2 - (a^2-1) w2^2
    #     + 2 (b^2-a^2) sqrt(D) w0 w3 - 2 sqrt(D) w1 w2,  B its conjugate
    base = (
        alpha2 * (w0 * w0)
        + (b2 - a2) * (w3 * w3)
        - (b2 - 1) * (w1 * w1)
        - (a2 - 1) * (w2 * w2)
    )
    lifted = s.compose({v: MPoly.variable(ext, v) for v in RING_W})
    for sign in (1, -1):
        cross = 2 * (b2 - a2) * (es * w0 * w3) + sign * 2 * (es * w1 * w2)
        reduced = reduce_root((base + cross) * (base - cross), dd)
        if reduced == lifted:
            return True
    return False
