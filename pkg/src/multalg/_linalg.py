"""Small exact linear-algebra helpers (rank over Q and over Q(sqrt(D)))."""

from __future__ import annotations

from fractions import Fraction


def fraction_rank(rows) -> int:
    """Rank of a matrix given as list of Fraction rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def kernel_basis(rows):
    """Basis of the right kernel of a Fraction matrix (list of vectors)."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [a / pv for a in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


# ---------- arithmetic in Q(sqrt(D)) on (alpha, beta) pairs ----------

def ext_mul(a, b, D: Fraction):
    return (a[0] * b[0] + D * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def ext_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def ext_inv(a, D: Fraction):
    nrm = a[0] * a[0] - D * a[1] * a[1]
    if not nrm:
        # D is a rational square and a is a zero divisor; callers must avoid
        raise ZeroDivisionError("element has zero norm in the extension")
    return (a[0] / nrm, -a[1] / nrm)


def ext_rank(rows, D: Fraction) -> int:
    """Rank of a matrix over Q(sqrt(D)); entries are (alpha, beta) pairs."""
    zero = (Fraction(0), Fraction(0))
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv_inv = ext_inv(rows[rank][col], D)
        for i in range(len(rows)):
            if i != rank and rows[i][col] != zero:
                f = ext_mul(rows[i][col], pv_inv, D)
                rows[i] = [
                    ext_sub(a, ext_mul(f, b, D)) for a, b in zip(rows[i], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank
