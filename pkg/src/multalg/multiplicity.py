"""Graded Artinian quotients by square systems of quadrics.

Given n quadratic relations in n variables (a `NetOfQuadrics` with k = n),
the quotient algebra is finite-dimensional exactly when the relations have
no common nonzero solution; that condition is taken as the computational
definition of "very stable", and in that case the quotient is a complete
intersection of dimension 2^n with palindromic Hilbert vector and a perfect
pairing between complementary degrees into the one-dimensional socle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._linalg import fraction_rank
from .errors import NotVeryStableError, SocleNotOneDimensionalError
from .exactpoly import MPoly
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    hilbert_vector,
    is_zero_dimensional,
    normal_form,
    standard_monomials,
)
from .quadrics import NetOfQuadrics


@dataclass
class MultiplicityAlgebra:
    """Quotient by the relation quadrics of a very stable net."""

    net: NetOfQuadrics
    ring: tuple
    gb: GroebnerBasis
    basis: tuple  # standard monomials as exponent tuples
    hilbert: tuple
    socle_degree: int
    mult_table: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_of_degree(self, k: int):
        return [e for e in self.basis if sum(e) == k]

    def socle_monomial(self):
        top = self.basis_of_degree(self.socle_degree)
        if len(top) != 1:
            raise SocleNotOneDimensionalError(
                f"top graded piece has dimension {len(top)}"
            )
        return top[0]

    def multiply(self, ea, eb) -> MPoly:
        """Normal form of the product of two basis monomials (cached)."""
        prod = tuple(a + b for a, b in zip(ea, eb))
        nf = self.mult_table.get(prod)
        if nf is None:
            nf = normal_form(MPoly.from_dict(self.ring, {prod: 1}), self.gb)
            self.mult_table[prod] = nf
        return nf


def is_very_stable(
    net: NetOfQuadrics, order: str = "grevlex", timeout_secs: float | None = None
) -> bool:
    """True iff the quadrics have no common nonzero solution."""
    if net.k != net.n:
        raise ValueError(f"need a square system, got {net.k} quadrics in {net.n} variables")
    gens = [q for q in net.quadrics() if not q.is_zero()]
    if len(gens) < net.n:
        return False  # a dropped (zero) relation leaves a base point
    return is_zero_dimensional(buchberger(Ideal.of(gens, order), timeout_secs))


def build_algebra(
    net: NetOfQuadrics, order: str = "grevlex", timeout_secs: float | None = None
) -> MultiplicityAlgebra:
    """Construct the full quotient data; NotVeryStableError on a base point."""
    if net.k != net.n:
        raise ValueError(f"need a square system, got {net.k} quadrics in {net.n} variables")
    gens = [q for q in net.quadrics() if not q.is_zero()]
    ring = tuple(f"x{i+1}" for i in range(net.n))
    if len(gens) < net.n:
        raise NotVeryStableError("a relation vanishes identically; base locus is nonempty")
    gb = buchberger(Ideal.of(gens, order), timeout_secs)
    if not is_zero_dimensional(gb):
        raise NotVeryStableError("relation quadrics have a common nonzero solution")
    basis = tuple(standard_monomials(gb))
    hv = hilbert_vector(gb)
    return MultiplicityAlgebra(net, ring, gb, basis, hv, len(hv) - 1)


def poincare_pairing(alg: MultiplicityAlgebra, k: int):
    """Pairing A_k x A_(n-k) -> A_n in the standard-monomial bases.

    Returns (matrix, nondegenerate): entry (i, j) is the coefficient of the
    socle monomial in the product of the i-th degree-k and j-th complementary
    basis element.  Raises if the socle is not one-dimensional.
    """
    n = alg.socle_degree
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} outside 0..{n}")
    socle = alg.socle_monomial()
    left = alg.basis_of_degree(k)
    right = alg.basis_of_degree(n - k)
    matrix = []
    for ea in left:
        row = []
        for eb in right:
            nf = alg.multiply(ea, eb)
            row.append(nf.coefficient(socle))
        matrix.append(row)
    nondeg = fraction_rank(matrix) == min(len(left), len(right))
    return matrix, nondeg


def algebra_report(
    net: NetOfQuadrics, order: str = "grevlex", timeout_secs: float | None = None
) -> dict:
    """Dimension/grading/pairing summary used by the JSON surface."""
    try:
        alg = build_algebra(net, order, timeout_secs)
    except NotVeryStableError:
        return {"very_stable": False, "dim": None, "hilbert": None, "pairing_ranks": None}
    ranks = []
    for k in range(alg.socle_degree + 1):
        matrix, _ = poincare_pairing(alg, k)
        ranks.append(fraction_rank(matrix))
    return {
        "very_stable": True,
        "dim": alg.dim,
        "hilbert": list(alg.hilbert),
        "pairing_ranks": ranks,
    }
