"""Families of quadrics as symmetric pencils: discriminants and singularities.

A `NetOfQuadrics` is k quadratic forms in n variables, stored as Gram
matrices.  The pencil matrix M(y) = sum_i y_i G_i is linear in the dual
coordinates; its determinant is the discriminant hypersurface.  Singular
points of such determinantal hypersurfaces are analyzed either by ideal
membership of all partial derivatives (for whole candidate loci, staying
over the rationals) or by exact gradient/Hessian evaluation at explicit
points, with coordinates allowed in a declared quadratic extension
Q(sqrt(D)) realized as pairs (alpha, beta) = alpha + beta*sqrt(D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import ext_mul, ext_rank, fraction_rank
from .errors import ExtensionRequiredError, NotDivisibleError
from .exactpoly import MPoly, PolyMatrix, det, exact_divide
from .groebner import GroebnerBasis, Ideal, buchberger, normal_form


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class NetOfQuadrics:
    """k quadratic forms in n variables, as symmetric n x n Gram matrices."""

    n: int
    grams: tuple  # k matrices, each a tuple of n row-tuples of Fraction

    def __post_init__(self):
        for g in self.grams:
            if len(g) != self.n or any(len(row) != self.n for row in g):
                raise ValueError("Gram matrix has wrong shape")
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    if g[i][j] != g[j][i]:
                        raise ValueError("Gram matrix is not symmetric")

    @property
    def k(self) -> int:
        return len(self.grams)

    @classmethod
    def from_grams(cls, grams) -> "NetOfQuadrics":
        mats = tuple(
            tuple(tuple(_frac(x) for x in row) for row in g) for g in grams
        )
        if not mats:
            raise ValueError("need at least one quadric")
        return cls(len(mats[0]), mats)

    @classmethod
    def from_quadrics(cls, polys) -> "NetOfQuadrics":
        """Read Gram matrices off quadratic forms in a common ring."""
        n = len(polys[0].ring)
        grams = []
        for q in polys:
            g = [[Fraction(0)] * n for _ in range(n)]
            for exps, c in q.terms.items():
                nz = [i for i, e in enumerate(exps) if e]
                if sum(exps) != 2:
                    raise ValueError("generator is not homogeneous quadratic")
                if len(nz) == 1:
                    g[nz[0]][nz[0]] = c
                else:
                    i, j = nz
                    g[i][j] = g[j][i] = c / 2
            grams.append(tuple(tuple(row) for row in g))
        return cls(n, tuple(grams))

    def quadrics(self, ring=None):
        """The quadratic forms v^T G v as MPoly (default ring x1..xn)."""
        ring = tuple(ring) if ring else tuple(f"x{i+1}" for i in range(self.n))
        out = []
        for g in self.grams:
            terms = {}
            for i in range(self.n):
                for j in range(i, self.n):
                    c = g[i][j] if i == j else 2 * g[i][j]
                    if c:
                        e = [0] * self.n
                        e[i] += 1
                        e[j] += 1
                        terms[tuple(e)] = c
            out.append(MPoly.from_dict(ring, terms))
        return out

    def congruent(self, p) -> "NetOfQuadrics":
        """Transform every Gram matrix G -> P^T G P (change of variables)."""
        n = self.n
        p = [[_frac(x) for x in row] for row in p]
        grams = []
        for g in self.grams:
            gp = [
                [sum(g[i][k] * p[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
            ptgp = [
                [sum(p[k][i] * gp[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
            grams.append(tuple(tuple(row) for row in ptgp))
        return NetOfQuadrics(n, tuple(grams))


@dataclass(frozen=True)
class Discriminant:
    """det of the symmetric pencil, homogeneous of degree n in k dual vars."""

    poly: MPoly
    degree: int


@dataclass(frozen=True)
class SingularityReport:
    point: tuple
    gradient_vanishes: bool
    hessian_rank: int | None
    classification: str  # "smooth" | "node" | "degenerate"


def pencil_matrix(net: NetOfQuadrics, var_names=None) -> PolyMatrix:
    """Symmetric n x n matrix M(y) = sum_i y_i G_i, linear in the duals."""
    names = tuple(var_names) if var_names else tuple(
        f"y{i+1}" for i in range(net.k)
    )
    if len(names) != net.k:
        raise ValueError("need one dual variable per quadric")
    entries = []
    for i in range(net.n):
        for j in range(net.n):
            terms = {}
            for idx in range(net.k):
                c = net.grams[idx][i][j]
                if c:
                    e = [0] * net.k
                    e[idx] = 1
                    terms[tuple(e)] = c
            entries.append(MPoly.from_dict(names, terms))
    return PolyMatrix(net.n, net.n, entries)


def discriminant(net: NetOfQuadrics, var_names=None) -> Discriminant:
    """The locus of singular members of the family, det M(y) = 0."""
    return Discriminant(det(pencil_matrix(net, var_names)), net.n)


def extract_factor(disc: Discriminant, g: MPoly) -> MPoly:
    """Exact quotient of the discriminant by a known homogeneous factor."""
    if g.is_zero() or not g.is_homogeneous():
        raise ValueError("factor must be nonzero and homogeneous")
    return exact_divide(disc.poly, g)


def singular_on_scheme(f: MPoly, ideal: Ideal | GroebnerBasis) -> bool:
    """True iff every partial derivative of f lies in the ideal.

    Certifies that f is singular along the whole subscheme V(I) without ever
    leaving the rationals.
    """
    gb = ideal if isinstance(ideal, GroebnerBasis) else buchberger(ideal)
    return all(
        normal_form(f.partial(i), gb).is_zero() for i in range(len(f.ring))
    )


def _to_pair(c):
    if isinstance(c, tuple):
        return (_frac(c[0]), _frac(c[1]))
    return (_frac(c), Fraction(0))


def _eval_ext(p: MPoly, point, D: Fraction):
    """Evaluate at coordinates alpha + beta*sqrt(D), exactly."""
    total = (Fraction(0), Fraction(0))
    for exps, c in p.terms.items():
        v = (c, Fraction(0))
        for coord, e in zip(point, exps):
            for _ in range(e):
                v = ext_mul(v, coord, D)
        total = (total[0] + v[0], total[1] + v[1])
    return total


def classify_point(f: MPoly, point, extension: Fraction | None = None) -> SingularityReport:
    """Gradient and Hessian analysis of a hypersurface at an explicit point.

    Coordinates are rationals or (alpha, beta) pairs in a declared quadratic
    extension alpha + beta*sqrt(extension).  For a hypersurface in P^(n-1), a
    node is a vanishing gradient with Hessian rank exactly n-1; lower rank is
    reported as "degenerate".
    """
    n = len(f.ring)
    if len(point) != n:
        raise ValueError("point has wrong number of coordinates")
    needs_ext = any(isinstance(c, tuple) and _frac(c[1]) != 0 for c in point)
    if needs_ext and extension is None:
        raise ExtensionRequiredError(
            "point has surd coordinates but no quadratic extension is declared"
        )
    coords = [_to_pair(c) for c in point]
    if all(a == 0 and b == 0 for a, b in coords):
        raise ValueError("point must be nonzero")
    D = _frac(extension) if extension is not None else Fraction(0)

    grad = [_eval_ext(f.partial(i), coords, D) for i in range(n)]
    grad_zero = all(g == (0, 0) for g in grad)
    if not grad_zero:
        return SingularityReport(tuple(point), False, None, "smooth")

    hess = [
        [_eval_ext(f.partial(i).partial(j), coords, D) for j in range(n)]
        for i in range(n)
    ]
    if needs_ext:
        rank = ext_rank(hess, D)
    else:
        rank = fraction_rank([[e[0] for e in row] for row in hess])
    cls = "node" if rank == n - 1 else "degenerate"
    return SingularityReport(tuple(point), True, rank, cls)
