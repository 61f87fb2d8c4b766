"""Plane-curve predicates and invariants over exact rationals.

Smoothness goes through the Jacobian ideal (zero-dimensional iff smooth, by
the Euler relation in characteristic 0).  For ternary cubics, the degree-4
and degree-6 invariants are built as full epsilon-tensor contractions of the
symmetric coefficient tensor; any nonzero full contraction of the right
degree spans the (one-dimensional) invariant space, so the scale is fixed by
calibration against the Weierstrass family

    z*y^2 - x^3 - a*x*z^2 - b*z^3       (j = 1728 * 4a^3 / (4a^3 + 27b^2))

at import of the first invariant computation.  The calibration re-derives
the constants from scratch and raises CalibrationError if the expected
consistency checks fail, rather than hard-coding classical formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import CalibrationError, SingularCurveError
from .exactpoly import MPoly, reduce_root
from .groebner import Ideal, buchberger, is_zero_dimensional


@dataclass(frozen=True)
class PlaneCurve:
    """Nonzero homogeneous form in three variables."""

    f: MPoly

    def __post_init__(self):
        if len(self.f.ring) != 3:
            raise ValueError("plane curves live in a ring with three variables")
        if self.f.is_zero() or not self.f.is_homogeneous():
            raise ValueError("curve must be a nonzero homogeneous form")

    @property
    def degree(self) -> int:
        return self.f.total_degree()


def is_smooth(curve: PlaneCurve) -> bool:
    """True iff the three partials vanish simultaneously only at the origin."""
    parts = [curve.f.partial(i) for i in range(3)]
    if any(p.is_zero() for p in parts):
        return False
    return is_zero_dimensional(buchberger(Ideal.of(parts)))


# ---------- ternary cubic invariants ----------

_EPS = []
for _p in itertools.permutations(range(3)):
    _s = 1
    for _i in range(3):
        for _j in range(_i + 1, 3):
            if _p[_i] > _p[_j]:
                _s = -_s
    _EPS.append((_p, _s))

# bracket patterns: each letter occurs in exactly three brackets, consuming
# its three tensor slots; full contractions are SL(3)-invariant
_S_PATTERN = (("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d"))
_T_PATTERN = (
    ("a", "b", "c"),
    ("a", "b", "d"),
    ("a", "c", "e"),
    ("b", "d", "f"),
    ("c", "e", "f"),
    ("d", "e", "f"),
)

_MULTINOMIAL = {3: 1, 2: 3, 1: 6}  # 3!/(product of multiplicities!)


def _int_tensor(curve: PlaneCurve):
    """6 * L * (symmetric tensor), integer entries; returns (tensor, L)."""
    den = 1
    for c in curve.f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    t = {}
    for ijk in itertools.product(range(3), repeat=3):
        e = [0, 0, 0]
        for i in ijk:
            e[i] += 1
        c = curve.f.coefficient(tuple(e))
        # 6/multinomial is 1, 2 or 6, so 6*L*c/multinomial is integral
        t[ijk] = int(c * den) * (6 // _MULTINOMIAL[max(e)])
    return t, den


def _contract(tensor, pattern) -> int:
    letters = sorted({l for br in pattern for l in br})
    total = 0
    for combo in itertools.product(_EPS, repeat=len(pattern)):
        sgn = 1
        idx = {l: [] for l in letters}
        for (perm, s), br in zip(combo, pattern):
            sgn *= s
            for slot, l in enumerate(br):
                idx[l].append(perm[slot])
        prod = sgn
        for l in letters:
            prod *= tensor[tuple(idx[l])]
            if not prod:
                break
        total += prod
    return total


def _raw_invariants(curve: PlaneCurve):
    t, den = _int_tensor(curve)
    scale = 6 * den
    s_raw = Fraction(_contract(t, _S_PATTERN), scale**4)
    t_raw = Fraction(_contract(t, _T_PATTERN), scale**6)
    return s_raw, t_raw


_CALIBRATION: list = []  # [(s_unit, t_unit)] once derived


def _weierstrass(a, b) -> PlaneCurve:
    ring = ("x", "y", "z")
    return PlaneCurve(
        MPoly.from_dict(
            ring, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -Fraction(a), (0, 0, 3): -Fraction(b)}
        )
    )


def _calibration():
    if _CALIBRATION:
        return _CALIBRATION[0]
    s_unit, t_zero = _raw_invariants(_weierstrass(1, 0))
    s_zero, t_unit = _raw_invariants(_weierstrass(0, 1))
    if not s_unit or t_zero or s_zero or not t_unit:
        raise CalibrationError("invariant contractions do not diagonalize the family")
    # linearity of the restriction to the family, checked at two more members
    for a, b in ((1, 1), (2, 3)):
        sv, tv = _raw_invariants(_weierstrass(a, b))
        if sv != a * s_unit or tv != b * t_unit:
            raise CalibrationError("invariants are not linear on the family")
    # the j formula must reproduce two classical values
    for a, b, expect in ((1, 1, Fraction(6912, 31)), (2, 3, Fraction(1728 * 32, 275))):
        j = Fraction(1728 * 4 * a**3, 4 * a**3 + 27 * b**2)
        if j != expect:
            raise CalibrationError("classical j values inconsistent")
    _CALIBRATION.append((s_unit, t_unit))
    return _CALIBRATION[0]


def cubic_invariants(curve: PlaneCurve):
    """Degree-4 and degree-6 invariants (S, T) of a ternary cubic.

    Normalized so the Weierstrass curve z*y^2 - x^3 - a*x*z^2 - b*z^3 has
    (S, T) = (a, b); under a linear substitution with matrix P they scale by
    det(P)^4 and det(P)^6.
    """
    if curve.degree != 3:
        raise ValueError("cubic invariants require a degree-3 curve")
    s_unit, t_unit = _calibration()
    s_raw, t_raw = _raw_invariants(curve)
    return s_raw / s_unit, t_raw / t_unit


def j_invariant(curve: PlaneCurve) -> Fraction:
    """Projective j-invariant of a smooth plane cubic, exactly."""
    if curve.degree != 3:
        raise ValueError("j-invariant requires a degree-3 curve")
    if not is_smooth(curve):
        raise SingularCurveError("curve is singular; no j-invariant")
    s, t = cubic_invariants(curve)
    den = 4 * s**3 + 27 * t**2
    if not den:
        raise SingularCurveError("vanishing discriminant combination")
    return Fraction(1728) * 4 * s**3 / den


# ---------- products and incidence ----------

def _lift(p: MPoly, ring_ext):
    images = {v: MPoly.variable(ring_ext, v) for v in p.ring}
    return p.compose(images)


def verify_product(curve: PlaneCurve, factors, extension: Fraction | None = None) -> bool:
    """True iff the curve equals a nonzero scalar times the product of the
    factors, allowing factor coefficients in Q(sqrt(extension)).

    Factors are MPoly (or PlaneCurve) in the curve's ring, or in that ring
    with one extra last variable playing the square root when an extension
    is declared.
    """
    ring = curve.f.ring
    ring_ext = ring + ("_s",)
    polys = []
    degsum = 0
    for f in factors:
        p = f.f if isinstance(f, PlaneCurve) else f
        if p.is_zero():
            return False
        if p.ring == ring:
            p = _lift(p, ring_ext)
        elif len(p.ring) == 4 and tuple(p.ring[:3]) == ring:
            if extension is None:
                raise ValueError("factor uses a root variable but no extension given")
            p = p.compose(
                {
                    **{v: MPoly.variable(ring_ext, v) for v in p.ring[:3]},
                    p.ring[3]: MPoly.variable(ring_ext, "_s"),
                }
            )
        else:
            raise ValueError("factor lives in an incompatible ring")
        degsum += max(sum(e[:3]) for e in p.terms)
        polys.append(p)
    if degsum != curve.degree:
        raise ValueError("factor degrees do not sum to the curve degree")
    prod = MPoly.constant(ring_ext, 1)
    d = Fraction(extension) if extension is not None else Fraction(0)
    for p in polys:
        prod = reduce_root(prod * p, d)
    if any(e[-1] for e in prod.terms):
        return False  # product did not land back in the rational ring
    target = _lift(curve.f, ring_ext)
    if prod.is_zero():
        return False
    e0, c0 = prod.leading()
    lam = target.coefficient(e0) / c0
    if not lam:
        return False
    return prod * lam == target


def line_through_conic_points(line, t1, t2) -> bool:
    """Does the line vanish at (1, t, t^2) for t = t1, t2 (points of the
    conic y0*y2 = y1^2)?"""
    p = line.f if isinstance(line, PlaneCurve) else line
    t1, t2 = Fraction(t1), Fraction(t2)
    return (
        p.evaluate([Fraction(1), t1, t1 * t1]) == 0
        and p.evaluate([Fraction(1), t2, t2 * t2]) == 0
    )
