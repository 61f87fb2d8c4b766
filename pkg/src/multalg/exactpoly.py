"""Sparse multivariate polynomials over exact rationals.

The universal carrier for everything downstream: quadratic forms, pencil
matrices, discriminants and plane curves are all built from `MPoly` and
`PolyMatrix`.  Coefficients are `fractions.Fraction` throughout and every
operation is exact; there is no floating point anywhere in the package.

A ring is just a tuple of variable names.  Terms are stored as a dict
mapping exponent tuples to nonzero coefficients; canonical (sorted) views
are produced on demand via the term-order keys below.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from .errors import NotDivisibleError, RingMismatchError

ORDERS = ("grevlex", "lex")

# dual-coordinate ring for quadratic forms in three variables,
# basis order x^2, y^2, z^2, xy, xz, yz
RING_M = ("m0", "m1", "m2", "m3", "m4", "m5")


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex_key(exps):
    return tuple(exps)


def monomial_key(order: str):
    if order == "grevlex":
        return grevlex_key
    if order == "lex":
        return lex_key
    raise ValueError(f"unknown monomial order {order!r}")


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class MPoly:
    """Sparse polynomial with Fraction coefficients, immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # internal constructor: `terms` must already be canonical
        self.ring = tuple(ring)
        self.terms = terms

    # ---------- constructors ----------

    @classmethod
    def from_dict(cls, ring, d) -> "MPoly":
        ring = tuple(ring)
        n = len(ring)
        terms = {}
        for exps, c in d.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            c = _coerce(c)
            if c:
                terms[exps] = terms.get(exps, Fraction(0)) + c
        return cls(ring, {e: c for e, c in terms.items() if c})

    @classmethod
    def zero(cls, ring) -> "MPoly":
        return cls(tuple(ring), {})

    @classmethod
    def constant(cls, ring, c) -> "MPoly":
        ring = tuple(ring)
        c = _coerce(c)
        return cls(ring, {(0,) * len(ring): c} if c else {})

    @classmethod
    def variable(cls, ring, name) -> "MPoly":
        ring = tuple(ring)
        i = ring.index(name)
        e = [0] * len(ring)
        e[i] = 1
        return cls(ring, {tuple(e): Fraction(1)})

    @classmethod
    def variables(cls, ring):
        return [cls.variable(ring, v) for v in ring]

    # ---------- predicates and views ----------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self, order: str = "grevlex"):
        """Terms as (exps, coef) pairs, strictly decreasing in the order."""
        key = monomial_key(order)
        return [(e, self.terms[e]) for e in sorted(self.terms, key=key, reverse=True)]

    def leading(self, order: str = "grevlex"):
        """(exponents, coefficient) of the leading term; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = monomial_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    # ---------- ring operations ----------

    def _check(self, other: "MPoly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.ring, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            if v is None:
                terms[e] = c
            else:
                v = v + c
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = _coerce(other)
            if not c:
                return MPoly.zero(self.ring)
            return MPoly(self.ring, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        prod = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = prod.get(e)
                if v is None:
                    prod[e] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        prod[e] = v
                    else:
                        del prod[e]
        return MPoly(self.ring, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # ---------- evaluation and calculus ----------

    def evaluate(self, point) -> Fraction:
        point = [_coerce(c) for c in point]
        if len(point) != len(self.ring):
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {len(self.ring)}"
            )
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def partial(self, var) -> "MPoly":
        """Formal partial derivative with respect to a variable name or index."""
        i = self.ring.index(var) if isinstance(var, str) else int(var)
        if not 0 <= i < len(self.ring):
            raise IndexError(f"variable index {i} out of range")
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                newe = exps[:i] + (e - 1,) + exps[i + 1 :]
                v = terms.get(newe, Fraction(0)) + c * e
                if v:
                    terms[newe] = v
                else:
                    terms.pop(newe, None)
        return MPoly(self.ring, terms)

    def gradient(self):
        return [self.partial(i) for i in range(len(self.ring))]

    def compose(self, images: dict) -> "MPoly":
        """Substitute polynomials for variables (simultaneously).

        `images` maps variable names to MPoly values in a common target ring;
        every variable of this ring must be assigned.
        """
        missing = [v for v in self.ring if v not in images]
        if missing:
            raise ValueError(f"no image given for variables {missing}")
        target = images[self.ring[0]].ring
        for v in self.ring:
            if images[v].ring != target:
                raise RingMismatchError("images live in different rings")
        pow_cache = {v: {0: MPoly.constant(target, 1)} for v in self.ring}

        def power(v, e):
            cache = pow_cache[v]
            if e not in cache:
                cache[e] = images[v] ** e
            return cache[e]

        out = MPoly.zero(target)
        for exps, c in self.terms.items():
            t = MPoly.constant(target, c)
            for v, e in zip(self.ring, exps):
                if e:
                    t = t * power(v, e)
            out = out + t
        return out

    # ---------- display ----------

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.ring, exps) if e
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    __repr__ = __str__


# ---------- parsing ----------

_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(r"^([A-Za-z_]\w*)(?:\^(\d+))?$")


def parse_poly(ring, text: str) -> MPoly:
    """Parse a '+'/'-' separated sum of monomial terms like '2/3*x^2*y - z'.

    No parentheses; meant for test fixtures and CLI inputs, not general input.
    """
    ring = tuple(ring)
    p = MPoly.zero(ring)
    for chunk in _TERM_SPLIT.split(text.replace(" ", "")):
        if not chunk:
            continue
        sign = Fraction(1)
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = Fraction(-1)
            chunk = chunk[1:]
        if not chunk:
            raise ValueError("dangling sign in polynomial text")
        coef = sign
        exps = [0] * len(ring)
        for factor in chunk.split("*"):
            m = _FACTOR.match(factor)
            if m and m.group(1) in ring:
                exps[ring.index(m.group(1))] += int(m.group(2) or 1)
            else:
                coef *= Fraction(factor)
        p = p + MPoly.from_dict(ring, {tuple(exps): coef})
    return p


# ---------- polynomial matrices ----------

class PolyMatrix:
    """Rectangular matrix with MPoly entries (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if rows <= 0 or cols <= 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match matrix shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]), [e for r in rows for e in r])

    def entry(self, i: int, j: int) -> MPoly:
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def evaluate(self, point):
        return [
            [self.entry(i, j).evaluate(point) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(e) for e in self.row(i)) + "]"
            for i in range(self.rows)
        )


# ---------- division and determinants ----------

def exact_divide(f: MPoly, g: MPoly, order: str = "grevlex") -> MPoly:
    """Return h with f == g*h, or raise NotDivisibleError.

    Single-divisor division: the remainder is zero iff g divides f, so the
    failure signal is sound.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check(g)
    key = monomial_key(order)
    glead, gc = g.leading(order)
    gtail = [(e, c) for e, c in g.terms.items() if e != glead]
    rem = dict(f.terms)
    quo = {}
    while rem:
        e = max(rem, key=key)
        c = rem.pop(e)
        shift = tuple(a - b for a, b in zip(e, glead))
        if any(x < 0 for x in shift):
            raise NotDivisibleError(f"{g} does not divide {f}")
        q = c / gc
        quo[shift] = q
        for ge, gcc in gtail:
            ee = tuple(a + b for a, b in zip(shift, ge))
            v = rem.get(ee, Fraction(0)) - q * gcc
            if v:
                rem[ee] = v
            else:
                rem.pop(ee, None)
    return MPoly(f.ring, quo)


def _det_bareiss(m: PolyMatrix) -> MPoly:
    n = m.rows
    ring = m.entries[0].ring
    a = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    prev = MPoly.constant(ring, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, n) if not a[i][k].is_zero()), None
            )
            if pivot_row is None:
                return MPoly.zero(ring)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev) if not num.is_zero() else num
            a[i][k] = MPoly.zero(ring)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _det_minors(m: PolyMatrix) -> MPoly:
    # Laplace expansion down the rows, memoized over column subsets.
    n = m.rows
    ring = m.entries[0].ring
    minors = {0: MPoly.constant(ring, 1)}
    for k in range(1, n + 1):
        nxt = {}
        for mask in range(1 << n):
            if bin(mask).count("1") != k:
                continue
            total = MPoly.zero(ring)
            sgn = 1 if (k - 1) % 2 == 0 else -1  # Laplace along row k-1
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    e = m.entry(k - 1, j)
                    if not e.is_zero():
                        sub = minors[mask ^ bit]
                        total = total + (e * sub if sgn > 0 else -(e * sub))
                    sgn = -sgn
            nxt[mask] = total
        minors = nxt
    return minors[(1 << n) - 1]


def det(m: PolyMatrix, method: str = "auto") -> MPoly:
    """Exact determinant of a square polynomial matrix.

    'bareiss' is fraction-free elimination (exact divisions by previous
    pivots); 'minors' is Laplace expansion memoized over column subsets,
    division-free.  'auto' picks minors up to 6x6, Bareiss beyond.
    """
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    if method == "auto":
        method = "minors" if m.rows <= 6 else "bareiss"
    if method == "bareiss":
        return _det_bareiss(m)
    if method == "minors":
        return _det_minors(m)
    raise ValueError(f"unknown determinant method {method!r}")


# ---------- quadratic-form helpers ----------

_QUAD_SLOT = {
    (2, 0, 0): 0,
    (0, 2, 0): 1,
    (0, 0, 2): 2,
    (1, 1, 0): 3,
    (1, 0, 1): 4,
    (0, 1, 1): 5,
}


def linearize_quadratics(q: MPoly) -> MPoly:
    """Rewrite a quadratic form in three variables as a linear form in m0..m5.

    Basis: x^2 -> m0, y^2 -> m1, z^2 -> m2, xy -> m3, xz -> m4, yz -> m5.
    The map is a linear isomorphism on the 6-dimensional space of quadratics;
    the zero polynomial maps to zero.
    """
    if len(q.ring) != 3:
        raise ValueError("input must live in a ring with exactly 3 variables")
    terms = {}
    for exps, c in q.terms.items():
        slot = _QUAD_SLOT.get(exps)
        if slot is None:
            raise ValueError("input is not homogeneous of degree 2")
        e = [0] * 6
        e[slot] = 1
        terms[tuple(e)] = c
    return MPoly(RING_M, terms)


def delinearize(p: MPoly, ring=("x", "y", "z")) -> MPoly:
    """Inverse of linearize_quadratics on linear forms in m0..m5."""
    ring = tuple(ring)
    slots = {v: k for k, v in _QUAD_SLOT.items()}
    images = {
        f"m{i}": MPoly.from_dict(ring, {slots[i]: 1}) for i in range(6)
    }
    return p.compose(images)


def reduce_root(p: MPoly, d) -> MPoly:
    """Reduce modulo s^2 - d, where s is the last variable of the ring.

    Realizes the quadratic extension Q(sqrt(d)) on polynomials: every power
    s^e is rewritten as d^(e//2) * s^(e%2)."""
    d = _coerce(d)
    out = {}
    for exps, c in p.terms.items():
        se = exps[-1]
        key = exps[:-1] + (se % 2,)
        v = out.get(key, Fraction(0)) + c * d ** (se // 2)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return MPoly(p.ring, out)


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of total degree d in n variables (grevlex order,
    largest first)."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n)
    out.sort(key=grevlex_key, reverse=True)
    return out


def count_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, n - 1)
