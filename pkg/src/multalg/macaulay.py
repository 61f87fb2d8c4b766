"""Per-degree dimension counts for homogeneous quotients via Macaulay matrices.

This is the dense-linear-algebra cross-check for every Groebner-based
dimension or Hilbert computation: the degree-d piece of the ideal generated
by homogeneous g_1..g_k is spanned by the monomial multiples m * g_i of
degree d, and the quotient dimension is (number of degree-d monomials) minus
the rank of their coefficient matrix.  No Groebner machinery is involved.

Ranks are exact.  Small matrices go through fraction-free integer
elimination.  Large ones use modular elimination with a two-sided exact
certificate: a nonzero r x r minor mod p lifts to a nonzero rational minor
(rank >= r), and rationally reconstructed kernel vectors are verified by
exact integer multiplication (rank <= cols - #kernel).  When the two bounds
meet, the rank is certified; otherwise more primes are added, falling back
to pure exact elimination if needed, so the output is always exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .exactpoly import MPoly, count_monomials, grevlex_key, monomials_of_degree

# 31-bit primes; products fit int64 during modular elimination
_PRIMES = (
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
    2147483489,
    2147483477,
)

_EXACT_COLUMN_LIMIT = 160


def _int_rows(gens, d):
    """Rows of the degree-d Macaulay matrix as integer dicts col -> coef."""
    ring = gens[0].ring
    n = len(ring)
    cols = {e: i for i, e in enumerate(monomials_of_degree(n, d))}
    rows = []
    for g in gens:
        dg = g.total_degree()
        if dg > d:
            continue
        den = 1
        for c in g.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ig = {e: int(c * den) for e, c in g.terms.items()}
        for m in monomials_of_degree(n, d - dg):
            row = {}
            for e, c in ig.items():
                ee = tuple(a + b for a, b in zip(m, e))
                row[cols[ee]] = c
            rows.append(row)
    return rows, len(cols)


def _exact_rank_sparse(rows, ncols) -> int:
    """Fraction-free sparse elimination over the integers."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv = min(rows, key=lambda r: (len(r), min(r)))
        rows.remove(piv)
        rank += 1
        pc = min(piv)
        pv = piv[pc]
        nxt = []
        for r in rows:
            c = r.get(pc)
            if c is None:
                nxt.append(r)
                continue
            new = {}
            for j, v in r.items():
                new[j] = v * pv
            for j, v in piv.items():
                w = new.get(j, 0) - c * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        rows = nxt
    return rank


def _mod_rref(rows, ncols, p):
    """RREF mod p.  Returns (rank, pivot column list, dense RREF array)."""
    m = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, v in r.items():
            m[i, j] = v % p
    rank = 0
    pivots = []
    nrows = m.shape[0]
    for col in range(ncols):
        sel = np.nonzero(m[rank:, col])[0]
        if sel.size == 0:
            continue
        r0 = rank + int(sel[0])
        if r0 != rank:
            m[[rank, r0]] = m[[r0, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        hit = np.nonzero(m[:, col])[0]
        hit = hit[hit != rank]
        if hit.size:
            m[hit] = (m[hit] - np.outer(m[hit, col], m[rank])) % p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, m[:rank]


def _rat_reconstruct(a: int, m: int):
    """Fraction p/q with p/q == a mod m and |p|, q <= sqrt(m/2), or None."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1) if s1 > 0 else Fraction(-r1, -s1)


def _verify_kernel(rows, vec) -> bool:
    den = 1
    for c in vec:
        den = den * c.denominator // gcd(den, c.denominator)
    iv = [int(c * den) for c in vec]
    for r in rows:
        if sum(v * iv[j] for j, v in r.items()):
            return False
    return True


def _certified_rank(rows, ncols) -> int:
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return 0
    maxrank = min(len(rows), ncols)
    residues = {}  # free column -> list of (prime, residue vector over pivots)
    used = []
    best = None
    for p in _PRIMES:
        rank, pivots, rref = _mod_rref(rows, ncols, p)
        if rank == maxrank:
            # saturated: the modular lower bound meets the trivial upper bound
            return rank
        if best is None or rank > best[0]:
            # new (better) pivot structure: discard residues from worse primes
            best = (rank, tuple(pivots))
            residues = {}
            used = []
        if (rank, tuple(pivots)) != best:
            continue  # bad prime for this pivot structure
        used.append(p)
        pivset = set(best[1])
        free = [c for c in range(ncols) if c not in pivset]
        for fcol in free:
            residues.setdefault(fcol, []).append(
                (p, [int(rref[i, fcol]) for i in range(best[0])])
            )
        # CRT-combine residues over the used primes and try to reconstruct
        mod = 1
        for q in used:
            mod *= q
        kernel = []
        ok = True
        for fcol in free:
            entries = residues[fcol]
            if len(entries) != len(used):
                ok = False
                break
            vec = [Fraction(0)] * ncols
            vec[fcol] = Fraction(1)
            for i, piv in enumerate(best[1]):
                x = 0
                m = 1
                for q, res in entries:
                    r = res[i]
                    # incremental CRT
                    t = ((r - x) * pow(m % q, q - 2, q)) % q
                    x = x + m * t
                    m *= q
                rec = _rat_reconstruct(x, m)
                if rec is None:
                    ok = False
                    break
                vec[piv] = -rec
            if not ok:
                break
            kernel.append(vec)
        if ok and kernel and all(_verify_kernel(rows, v) for v in kernel):
            if best[0] + len(kernel) == ncols:
                return best[0]
    # certificates failed (astronomically unlikely): exact elimination
    return _exact_rank_sparse(rows, ncols)


def macaulay_rank(gens, d: int) -> int:
    """Exact rank of the degree-d Macaulay matrix of homogeneous generators."""
    rows, ncols = _int_rows(gens, d)
    if ncols <= _EXACT_COLUMN_LIMIT:
        return _exact_rank_sparse(rows, ncols)
    return _certified_rank(rows, ncols)


def quotient_dimensions(gens, max_degree: int = 24):
    """Dimensions of the graded quotient pieces, degree 0 up.

    Stops after the first zero (an ideal containing all of degree d contains
    everything beyond), or at max_degree for non-terminating quotients.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0].ring)
    for g in gens:
        if g.is_zero() or not g.is_homogeneous():
            raise ValueError("generators must be nonzero and homogeneous")
    dims = []
    for d in range(max_degree + 1):
        dim = count_monomials(n, d) - macaulay_rank(gens, d)
        dims.append(dim)
        if dim == 0:
            break
    return dims


def contains_homogeneous(gens, p: MPoly) -> bool:
    """Membership of a homogeneous polynomial, by rank comparison."""
    if p.is_zero():
        return True
    if not p.is_homogeneous():
        raise ValueError("membership oracle requires homogeneous input")
    d = p.total_degree()
    rows, ncols = _int_rows(gens, d)
    cols = {e: i for i, e in enumerate(monomials_of_degree(len(p.ring), d))}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    prow = {cols[e]: int(c * den) for e, c in p.terms.items()}
    if ncols <= _EXACT_COLUMN_LIMIT:
        return _exact_rank_sparse(rows, ncols) == _exact_rank_sparse(
            rows + [prow], ncols
        )
    return _certified_rank(rows, ncols) == _certified_rank(rows + [prow], ncols)
