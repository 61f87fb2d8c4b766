"""Canonical JSON encoding of the core types, shared by modules and CLI.

Rationals are strings "p/q" ("p" when the denominator is 1).  Polynomials
carry their variable list and a term array sorted in decreasing grevlex
order, so serialization is deterministic and reports are byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .exactpoly import MPoly, PolyMatrix, grevlex_key
from .groebner import GroebnerBasis, Ideal
from .quadrics import NetOfQuadrics

SCHEMA = "multalg/1"


def frac_to_json(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_json(s) -> Fraction:
    return Fraction(s)


def mpoly_to_json(p: MPoly) -> dict:
    terms = [
        {"c": frac_to_json(c), "e": list(e)}
        for e, c in sorted(p.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)
    ]
    return {"vars": list(p.ring), "terms": terms}


def mpoly_from_json(d) -> MPoly:
    ring = tuple(d["vars"])
    return MPoly.from_dict(
        ring, {tuple(t["e"]): frac_from_json(t["c"]) for t in d["terms"]}
    )


def matrix_to_json(m: PolyMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [mpoly_to_json(e) for e in m.entries],
    }


def matrix_from_json(d) -> PolyMatrix:
    return PolyMatrix(d["rows"], d["cols"], [mpoly_from_json(e) for e in d["entries"]])


def net_to_json(net: NetOfQuadrics) -> dict:
    return {
        "n": net.n,
        "grams": [[frac_to_json(x) for row in g for x in row] for g in net.grams],
    }


def net_from_json(d) -> NetOfQuadrics:
    n = d["n"]
    grams = []
    for flat in d["grams"]:
        if len(flat) != n * n:
            raise ValueError("gram matrix has wrong entry count")
        vals = [frac_from_json(x) for x in flat]
        grams.append([vals[i * n : (i + 1) * n] for i in range(n)])
    return NetOfQuadrics.from_grams(grams)


def ideal_to_json(ideal: Ideal) -> dict:
    return {
        "generators": [mpoly_to_json(g) for g in ideal.generators],
        "order": ideal.order,
    }


def ideal_from_json(d) -> Ideal:
    return Ideal.of(
        [mpoly_from_json(g) for g in d["generators"]], d.get("order", "grevlex")
    )


def basis_to_json(gb: GroebnerBasis) -> dict:
    return {"elements": [mpoly_to_json(g) for g in gb.elements], "order": gb.order}


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def input_digest(obj) -> str:
    return "sha256:" + hashlib.sha256(canonical_dumps(obj).encode()).hexdigest()
