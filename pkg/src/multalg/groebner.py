"""Buchberger's algorithm, normal forms, and Hilbert data for ideals.

The engine works on packed-integer monomials (see `_packed`) with integer
coefficients and pseudo-reduction, so the hot loop never touches rationals;
results are rescaled to exact monic `MPoly` elements at the end.

For homogeneous inputs, S-pairs are processed in increasing degree.  As soon
as every monomial of some degree lies in the initial ideal, the quotient
vanishes there and onward, and the initial ideal has no minimal generators
beyond that degree, so the remaining higher-degree pairs reduce to zero and
are discarded.  This keeps zero-dimensional runs bounded by the socle degree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd

from ._packed import codec_for
from .errors import GroebnerTimeoutError, NotFiniteError, RingMismatchError
from .exactpoly import MPoly, monomial_key, monomials_of_degree

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "is_zero_dimensional",
    "standard_monomials",
    "hilbert_vector",
]


@dataclass(frozen=True)
class Ideal:
    """A list of nonzero generators in a common ring with a term order."""

    generators: tuple
    ring: tuple
    order: str = "grevlex"

    @classmethod
    def of(cls, gens, order: str = "grevlex") -> "Ideal":
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise ValueError("ideal needs at least one nonzero generator")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators live in different rings")
        return cls(tuple(gens), ring, order)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements, unique for its order."""

    elements: tuple
    ring: tuple
    order: str

    def leading_exponents(self):
        return [g.leading(self.order)[0] for g in self.elements]


# ---------- integer polynomial plumbing ----------

def _to_int_poly(p: MPoly, codec):
    """(packed dict with integer coefficients, denominator) so dict == den*p."""
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    d = {}
    for exps, c in p.terms.items():
        d[codec.pack(exps)] = int(c * den)
    return d, den


def _primitive(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return d
    if g > 1:
        return {k: c // g for k, c in d.items()}
    return d


def _from_int_poly(d, codec, ring, scale: Fraction) -> MPoly:
    return MPoly(ring, {codec.unpack(k): Fraction(c) * scale for k, c in d.items()})


class _Engine:
    """Pseudo-reduction and Buchberger over packed monomials."""

    def __init__(self, codec):
        self.codec = codec

    def reduce(self, work, basis):
        """Fully reduce `work` (dict, consumed) modulo `basis`.

        basis entries are (leadkey, leadcoef, tail_items).  Returns
        (remainder_dict, multiplier) with multiplier * input == remainder
        modulo the ideal; the remainder has no reducible monomial.
        """
        codec = self.codec
        divides = codec.divides
        mulkey = codec.mul
        divkey = codec.div
        mult = 1
        heap = [-k for k in work]
        heapify(heap)
        while heap:
            k = -heappop(heap)
            c = work.get(k)
            if not c:
                work.pop(k, None)
                continue
            hit = None
            for entry in basis:
                if divides(entry[0], k):
                    hit = entry
                    break
            if hit is None:
                continue
            lt, lc, tail = hit[0], hit[1], hit[2]
            d = gcd(c, lc)
            f = lc // d
            q = c // d
            if f != 1:
                if f < 0:
                    f, q = -f, -q
                mult *= f
                for kk in work:
                    work[kk] *= f
            del work[k]
            shift = divkey(k, lt)
            for gk, gc in tail:
                kk = mulkey(shift, gk)
                v = work.get(kk)
                if v is None:
                    work[kk] = -q * gc
                    heappush(heap, -kk)
                else:
                    v -= q * gc
                    if v:
                        work[kk] = v
                    else:
                        del work[kk]
        return work, mult

    def spoly(self, f, g):
        """S-polynomial of two basis entries (leadkey, leadcoef, tail, dict)."""
        codec = self.codec
        ltf, lcf, _, fd = f
        ltg, lcg, _, gd = g
        tau = codec.lcm(ltf, ltg)
        d = gcd(lcf, lcg)
        mf = lcg // d
        mg = lcf // d
        sf = codec.div(tau, ltf)
        sg = codec.div(tau, ltg)
        out = {}
        for k, c in fd.items():
            out[codec.mul(sf, k)] = mf * c
        for k, c in gd.items():
            kk = codec.mul(sg, k)
            v = out.get(kk, 0) - mg * c
            if v:
                out[kk] = v
            else:
                out.pop(kk, None)
        return out


def buchberger(ideal: Ideal, timeout_secs: float | None = None) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with both standard criteria.

    Pair selection: normal strategy, ties broken by (degree, lcm exponents,
    generator indices), so the run is deterministic for a fixed input order.
    """
    ring = ideal.ring
    n = len(ring)
    codec = codec_for(ideal.order, n)
    eng = _Engine(codec)
    deadline = time.monotonic() + timeout_secs if timeout_secs else None

    homogeneous = all(g.is_homogeneous() for g in ideal.generators)

    # basis entries: (leadkey, leadcoef>0, tail_items, full_dict)
    basis = []

    def insert(d):
        d = _primitive(d)
        lt = max(d)
        lc = d[lt]
        if lc < 0:
            d = {k: -c for k, c in d.items()}
            lc = -lc
        tail = [(k, c) for k, c in d.items() if k != lt]
        basis.append((lt, lc, tail, d))

    seen = set()
    for g in ideal.generators:
        di, _ = _to_int_poly(g, codec)
        key = frozenset(_primitive(dict(di)).items())
        if key not in seen:
            seen.add(key)
            insert(di)

    packed_monos: dict[int, list[int]] = {}

    def saturated(dd: int) -> bool:
        # every degree-dd monomial divisible by some current leading term
        keys = packed_monos.get(dd)
        if keys is None:
            keys = [codec.pack(e) for e in monomials_of_degree(n, dd)]
            packed_monos[dd] = keys
        lts = [b[0] for b in basis]
        return all(any(codec.divides(lt, k) for lt in lts) for k in keys)

    def find_stop(dfrom: int):
        # once a whole degree lies in the initial ideal, the quotient is zero
        # there and onward and the reduced basis has no higher-degree element;
        # the scan window only bounds the optimization, not correctness
        for dd in range(dfrom, dfrom + n + 1):
            if len(monomials_of_degree(n, dd)) > 1200:
                return None
            if saturated(dd):
                return dd
        return None

    stop_degree = find_stop(2) if homogeneous else None

    def pair_entry(i, j):
        tau = codec.lcm(basis[i][0], basis[j][0])
        return (codec.deg(tau), codec.unpack(tau), i, j, tau)

    pairs = [pair_entry(i, j) for j in range(len(basis)) for i in range(j)]
    heapify(pairs)
    done = set()

    while pairs:
        deg, _, i, j, tau = heappop(pairs)
        if stop_degree is not None and deg > stop_degree:
            break
        if deadline and time.monotonic() > deadline:
            raise GroebnerTimeoutError("basis computation timed out")
        done.add((i, j))
        lti, ltj = basis[i][0], basis[j][0]
        # product criterion: coprime leading monomials
        if codec.mul(lti, ltj) == tau:
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if codec.divides(basis[k][0], tau):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        s = eng.spoly(basis[i], basis[j])
        r, _ = eng.reduce(s, basis)
        if r:
            insert(r)
            jnew = len(basis) - 1
            for k in range(jnew):
                heappush(pairs, pair_entry(k, jnew))
            if homogeneous and stop_degree is None:
                stop_degree = find_stop(codec.deg(basis[jnew][0]))

    # minimalize: keep only elements whose lead is not divisible by another
    order_idx = sorted(range(len(basis)), key=lambda i: basis[i][0])
    keep = []
    for i in order_idx:
        lt = basis[i][0]
        if not any(codec.divides(basis[k][0], lt) for k in keep if k != i):
            keep.append(i)
    minimal = [basis[i] for i in keep]

    # inter-reduce tails against the other minimal elements
    reduced = []
    for idx, (lt, lc, tail, full) in enumerate(minimal):
        others = [minimal[k] for k in range(len(minimal)) if k != idx]
        r, mult = eng.reduce(dict(full), [(o[0], o[1], o[2]) for o in others])
        r = _primitive(r)
        lead_c = r[max(r)]
        reduced.append(_from_int_poly(r, codec, ring, Fraction(1, lead_c)))

    mk = monomial_key(ideal.order)
    reduced.sort(key=lambda p: mk(p.leading(ideal.order)[0]), reverse=True)
    return GroebnerBasis(tuple(reduced), ring, ideal.order)


def normal_form(p: MPoly, gb: GroebnerBasis) -> MPoly:
    """Unique remainder of p modulo the basis; zero iff p lies in the ideal."""
    if p.ring != gb.ring:
        raise RingMismatchError("polynomial ring differs from basis ring")
    if p.is_zero():
        return p
    codec = codec_for(gb.order, len(gb.ring))
    eng = _Engine(codec)
    basis = []
    for g in gb.elements:
        d, _ = _to_int_poly(g, codec)
        d = _primitive(d)
        lt = max(d)
        basis.append((lt, d[lt], [(k, c) for k, c in d.items() if k != lt]))
    work, den = _to_int_poly(p, codec)
    r, mult = eng.reduce(work, basis)
    return _from_int_poly(r, codec, gb.ring, Fraction(1, den * mult))


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading terms.

    For homogeneous ideals this says the only common zero is the origin.
    """
    n = len(gb.ring)
    pure = [False] * n
    for exps in gb.leading_exponents():
        nz = [i for i, e in enumerate(exps) if e]
        if len(nz) == 1:
            pure[nz[0]] = True
    return all(pure)


def _standard_by_degree(gb: GroebnerBasis, cap: int | None = None):
    """Yield (degree, list of standard exponent tuples) until exhausted."""
    n = len(gb.ring)
    codec = codec_for(gb.order, n)
    lts = [codec.pack(e) for e in gb.leading_exponents()]
    d = 0
    while True:
        monos = [
            e
            for e in monomials_of_degree(n, d)
            if not any(codec.divides(lt, codec.pack(e)) for lt in lts)
        ]
        yield d, monos
        if not monos:
            return
        if cap is not None and d >= cap:
            return
        d += 1


def standard_monomials(gb: GroebnerBasis):
    """Monomials outside the initial ideal, for zero-dimensional ideals.

    Returned as exponent tuples ordered by (degree, grevlex ascending); their
    count is the vector-space dimension of the quotient.
    """
    if not is_zero_dimensional(gb):
        raise NotFiniteError("ideal is not zero-dimensional")
    out = []
    for _, monos in _standard_by_degree(gb):
        if not monos:
            break
        out.extend(reversed(monos))
    return out


def hilbert_vector(gb: GroebnerBasis):
    """Graded dimensions (dim of degree-k piece) of the quotient, up to the
    socle degree.  Requires a homogeneous zero-dimensional ideal."""
    for g in gb.elements:
        if not g.is_homogeneous():
            raise NotFiniteError("hilbert_vector requires a homogeneous ideal")
    if not is_zero_dimensional(gb):
        raise NotFiniteError("ideal is not zero-dimensional")
    dims = []
    for _, monos in _standard_by_degree(gb):
        if not monos:
            break
        dims.append(len(monos))
    return tuple(dims)
