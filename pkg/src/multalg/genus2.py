"""Genus-2 constructions: odd-degree triangle nets, Lorenzen nets, and
van Geemen-Previato nets, with their claim checks.

Odd degree: the net attached to a branch sextic f and three divisor images
a1, a2, a3 is diagonal,

    sum_i f(a_i) * L_i(x) * xi_i^2,

with L_i the Lagrange basis polynomial through the other two a's.  Its
discriminant is a product of three linear forms, the chords of the conic
y0*y2 = y1^2 through pairs of the a_i (the triangle).

Even degree: the Lorenzen formulas give three explicit quadratic functions
h1, h2, h3 in (xi0, xi1, xi2) whose coefficients are polynomial in the
branch parameters (r, s, t) and the bundle coordinates (u0, u1, u2).  They
are transcribed from the published display verbatim; the display's fourth
bracket of h1 repeats xi0 where the symmetry of the first bracket suggests
xi1, so both transcriptions are available ("verbatim" is the default, and
both pass the dimension-8 and smooth-discriminant gates at generic points).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import PlaneCurve, is_smooth, j_invariant, line_through_conic_points, verify_product
from .errors import DegenerateInputError, NotVeryStableError
from .exactpoly import MPoly, PolyMatrix, det
from .multiplicity import build_algebra, is_very_stable
from .quadrics import NetOfQuadrics, discriminant

RING_XI = ("xi0", "xi1", "xi2")
RING_Y = ("y0", "y1", "y2")

H1_VARIANTS = ("verbatim", "corrected")


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Genus2Curve:
    """Double cover of the line branched over six distinct points."""

    branch: tuple

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(_fr(x) for x in self.branch))
        if len(self.branch) != 6 or len(set(self.branch)) != 6:
            raise DegenerateInputError("branch locus needs six distinct points")

    def sextic_at(self, t: Fraction) -> Fraction:
        v = Fraction(1)
        for x in self.branch:
            v *= t - x
        return v


@dataclass(frozen=True)
class OddBundleData:
    """Images a1, a2, a3 of the divisor points of the annihilating section."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_fr(x) for x in self.a))
        if len(self.a) != 3 or len(set(self.a)) != 3:
            raise DegenerateInputError("divisor images must be three distinct points")


@dataclass(frozen=True)
class LorenzenPoint:
    """Branch points 0, 1, infinity, r, s, t and bundle coordinates u."""

    rst: tuple
    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "rst", tuple(_fr(x) for x in self.rst))
        object.__setattr__(self, "u", tuple(_fr(x) for x in self.u))
        if len(self.rst) != 3 or len(self.u) != 3:
            raise DegenerateInputError("need three branch parameters and three coordinates")
        if len(set(self.rst)) != 3 or set(self.rst) & {Fraction(0), Fraction(1)}:
            raise DegenerateInputError("r, s, t must be distinct and avoid 0, 1")


@dataclass(frozen=True)
class VgpNet:
    """A net of conics spanned by three symmetric 3x3 matrices."""

    q1: tuple
    q2: tuple
    q3: tuple

    def __post_init__(self):
        mats = []
        for m in (self.q1, self.q2, self.q3):
            m = tuple(tuple(_fr(x) for x in row) for row in m)
            if len(m) != 3 or any(len(r) != 3 for r in m):
                raise DegenerateInputError("matrices must be 3x3")
            if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
                raise DegenerateInputError("matrices must be symmetric")
            mats.append(m)
        object.__setattr__(self, "q1", mats[0])
        object.__setattr__(self, "q2", mats[1])
        object.__setattr__(self, "q3", mats[2])
        rows = [[m[i][j] for i in range(3) for j in range(i, 3)] for m in mats]
        from ._linalg import fraction_rank

        if fraction_rank(rows) != 3:
            raise DegenerateInputError("the three conics do not span a net")


# ---------- odd degree ----------

def _lagrange_coeffs(data: OddBundleData, i: int):
    """Coefficients (c0, c1, c2) of (x-aj)(x-ak)/((ai-aj)(ai-ak))."""
    j, k = [t for t in range(3) if t != i]
    ai, aj, ak = data.a[i], data.a[j], data.a[k]
    d = (ai - aj) * (ai - ak)
    return (aj * ak / d, -(aj + ak) / d, Fraction(1) / d)


def odd_net(curve: Genus2Curve, data: OddBundleData) -> NetOfQuadrics:
    """Diagonal net: quadric j has entries f(a_i) * [x^j] L_i(x)."""
    grams = []
    fa = [curve.sextic_at(t) for t in data.a]
    coeffs = [_lagrange_coeffs(data, i) for i in range(3)]
    for j in range(3):
        g = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            g[i][i] = fa[i] * coeffs[i][j]
        grams.append(tuple(tuple(row) for row in g))
    return NetOfQuadrics(3, tuple(grams))


def odd_chords(curve: Genus2Curve, data: OddBundleData):
    """The three linear factors of the odd discriminant, in (y0, y1, y2).

    Factor i is f(a_i) times the chord of the conic y0*y2 = y1^2 through the
    parameter values a_j, a_k ({i, j, k} = {1, 2, 3})."""
    lines = []
    fa = [curve.sextic_at(t) for t in data.a]
    for i in range(3):
        c0, c1, c2 = _lagrange_coeffs(data, i)
        lines.append(
            MPoly.from_dict(
                RING_Y, {(1, 0, 0): fa[i] * c0, (0, 1, 0): fa[i] * c1, (0, 0, 1): fa[i] * c2}
            )
        )
    return lines


def odd_triangle_check(curve: Genus2Curve, data: OddBundleData) -> bool:
    """Discriminant == product of the three chords through pairs of the a_i."""
    net = odd_net(curve, data)
    disc = discriminant(net, RING_Y)
    chords = odd_chords(curve, data)
    if any(c.is_zero() for c in chords):
        return False
    if not verify_product(PlaneCurve(disc.poly), chords):
        return False
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        if not line_through_conic_points(chords[i], data.a[j], data.a[k]):
            return False
    return True


# ---------- even degree: Lorenzen nets ----------

def lorenzen_quadrics(point: LorenzenPoint, h1_variant: str = "verbatim"):
    """The three quadratic forms h1, h2, h3 in (xi0, xi1, xi2)."""
    if h1_variant not in H1_VARIANTS:
        raise ValueError(f"h1_variant must be one of {H1_VARIANTS}")
    r, s, t = point.rst
    u0, u1, u2 = point.u
    x0, x1, x2 = (MPoly.variable(RING_XI, v) for v in RING_XI)
    pr = x0 * u0 + x1 * u1 + x2 * u2

    b1 = x0 * (u0 * u0 - 1) + x1 * (u0 * u1 + u2) + x2 * (u2 * u0 + u1)
    b2 = x0 * (u0 * u1 - u2) + x1 * (u1 * u1 + 1) + x2 * (u1 * u2 + u0)
    b3 = x0 * u0 + x1 * u1
    mid = (x0 if h1_variant == "verbatim" else x1) * (u0 * u1 + u2)
    b4 = x0 * (u0 * u0 + 1) + mid + x2 * (u2 * u0 - u1)
    h1 = r * s * t * (b1 * b1) - s * t * (b2 * b2) + 4 * r * s * (b3 * b3) - r * t * (b4 * b4)

    h2 = (
        (t * (u0 * u0 + u1 * u1 + u2 * u2 + 1)) * ((x0 * x0 + x1 * x1 + x2 * x2) + pr * pr)
        + (s * t * (u0 * u0 - u1 * u1 + u2 * u2 - 1)) * ((x0 * x0 - x1 * x1 + x2 * x2) - pr * pr)
        + (4 * r * (u0 * u2 - u1)) * (x0 * x2 + pr * x1)
        + (4 * s * r * (u2 * u0 + u1)) * (x2 * x0 - pr * x1)
        + (4 * s * (u1 * u2 + u0)) * (x1 * x2 - pr * x0)
        + (4 * r * t * (u0 * u1 + u2)) * (x0 * x1 - pr * x2)
    )

    c1 = x0 * (u2 * u0 + u1) + x1 * (u1 * u2 + u0) + x2 * (u2 * u2 - 1)
    c2 = x0 * (u2 * u0 - u1) + x1 * (u1 * u2 + u0) + x2 * (u2 * u2 + 1)
    c3 = x0 * (u0 * u1 + u2) + x2 * (u1 * u2 - u0) + x1 * (u2 * u2 + 1)
    c4 = x1 * u1 + x2 * u2
    h3 = s * (c1 * c1) - (c2 * c2) - t * (c3 * c3) + 4 * r * (c4 * c4)
    return [h1, h2, h3]


def lorenzen_net(point: LorenzenPoint, h1_variant: str = "verbatim") -> NetOfQuadrics:
    return NetOfQuadrics.from_quadrics(lorenzen_quadrics(point, h1_variant))


@dataclass(frozen=True)
class LorenzenReport:
    very_stable: bool
    dim: int | None
    cubic: PlaneCurve | None
    smooth: bool | None
    j: Fraction | None


def lorenzen_discriminant_report(
    point: LorenzenPoint, h1_variant: str = "verbatim"
) -> LorenzenReport:
    """Very-stability, discriminant cubic, smoothness, and j when smooth."""
    net = lorenzen_net(point, h1_variant)
    try:
        alg = build_algebra(net)
        stable, dim = True, alg.dim
    except NotVeryStableError:
        stable, dim = False, None
    disc = discriminant(net, RING_Y)
    if disc.poly.is_zero():
        return LorenzenReport(stable, dim, None, None, None)
    cubic = PlaneCurve(disc.poly)
    smooth = is_smooth(cubic)
    j = j_invariant(cubic) if smooth else None
    return LorenzenReport(stable, dim, cubic, smooth, j)


# ---------- van Geemen-Previato nets ----------

def vgp_net(v: VgpNet) -> NetOfQuadrics:
    return NetOfQuadrics.from_grams([v.q1, v.q2, v.q3])


def vgp_branch_identity(v: VgpNet) -> bool:
    """D(1, 2u, u^2) == det(Q1 + 2u*Q2 + u^2*Q3) as polynomials in u.

    The roots of either side are the six branch points of the double cover,
    realizing the branch-point incidence with the discriminant.
    """
    net = vgp_net(v)
    d = discriminant(net, RING_Y).poly
    ring_u = ("u",)
    u = MPoly.variable(ring_u, "u")
    one = MPoly.constant(ring_u, 1)
    lhs = d.compose({"y0": one, "y1": 2 * u, "y2": u * u})
    entries = []
    for i in range(3):
        for j in range(3):
            entries.append(v.q1[i][j] * one + 2 * v.q2[i][j] * u + v.q3[i][j] * (u * u))
    rhs = det(PolyMatrix(3, 3, entries))
    return lhs == rhs


def vgp_genus3_curve(v: VgpNet) -> PlaneCurve:
    """The plane quartic Q1*Q3 - Q2^2 cut out by the net."""
    ring = ("x", "y", "z")
    q1, q2, q3 = NetOfQuadrics.from_grams([v.q1, v.q2, v.q3]).quadrics(ring)
    f = q1 * q3 - q2 * q2
    if f.is_zero():
        raise DegenerateInputError("net gives the zero quartic")
    return PlaneCurve(f)


def vgp_is_very_stable(v: VgpNet) -> bool:
    return is_very_stable(vgp_net(v))
