"""Command-line front end: JSON in, deterministic JSON reports out.

Subcommands mirror the library surface: `algebra`, `discriminant`, `g2-odd`,
`g2-lorenzen`, `g2-vgp`, `g3-web`, `g3-relations`, `g3-special`,
`symmetroid`, `sweep`, and `verify-paper`.  Inputs come from --in (JSON) or
from per-command flags; rationals are always "p/q" strings, never floats.

Reports are byte-identical for identical inputs: keys are sorted and
timings are only included when --timings is passed.  Exit codes: 0 ok,
1 input/schema error, 2 claim_failed (a verified-claim check came out
false, e.g. a non-dividing discriminant factor or a failed criterion).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import acceptance
from .curves import PlaneCurve, is_smooth
from .errors import DegenerateInputError, NotDivisibleError, NotVeryStableError
from .exactpoly import MPoly, parse_poly
from .genus2 import (
    Genus2Curve,
    LorenzenPoint,
    OddBundleData,
    VgpNet,
    lorenzen_discriminant_report,
    lorenzen_net,
    odd_chords,
    odd_net,
    odd_triangle_check,
    vgp_branch_identity,
    vgp_genus3_curve,
    vgp_net,
)
from .genus3 import (
    RING_XYZ,
    SixRelationParams,
    SpecialParams,
    StdPair,
    discriminant_split,
    genus3_web,
    mat2_derivation_check,
    section_two_conics,
    six_relations,
    special_case,
    standard_bundle_data,
    surd_criterion,
    symmetroid,
    symmetroid_nodes,
)
from .jsonio import (
    SCHEMA,
    canonical_dumps,
    frac_to_json,
    input_digest,
    mpoly_to_json,
    net_from_json,
)
from .multiplicity import algebra_report
from .quadrics import discriminant


def _fracs(text: str):
    return [Fraction(part) for part in text.split(",")]


def _load_input(args, fallback: dict | None = None) -> dict:
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            return json.load(fh)
    if fallback is None:
        raise ValueError("this command requires --in")
    return fallback


def _poly_json(blob) -> MPoly:
    from .jsonio import mpoly_from_json

    return mpoly_from_json(blob)


def _q_from(payload) -> MPoly:
    q = payload.get("q", "0")
    if isinstance(q, str):
        return parse_poly(RING_XYZ, q)
    return _poly_json(q)


# ---------- per-command runners (return the results dict) ----------

def _run_algebra(payload, args):
    return algebra_report(net_from_json(payload["net"]), args.order, args.timeout_secs)


def _run_discriminant(payload, args):
    net = net_from_json(payload["net"])
    disc = discriminant(net)
    return {"degree": disc.degree, "poly": mpoly_to_json(disc.poly)}


def _run_g2_odd(payload, args):
    curve = Genus2Curve(_payload_fracs(payload, "branch"))
    data = OddBundleData(_payload_fracs(payload, "a"))
    rep = algebra_report(odd_net(curve, data), args.order, args.timeout_secs)
    rep["triangle"] = odd_triangle_check(curve, data)
    rep["chords"] = [mpoly_to_json(c) for c in odd_chords(curve, data)]
    return rep


def _run_g2_lorenzen(payload, args):
    point = LorenzenPoint(_payload_fracs(payload, "rst"), _payload_fracs(payload, "u"))
    variant = payload.get("h1_variant", "verbatim")
    rep = lorenzen_discriminant_report(point, variant)
    return {
        "very_stable": rep.very_stable,
        "dim": rep.dim,
        "smooth": rep.smooth,
        "j": frac_to_json(rep.j) if rep.j is not None else None,
        "cubic": mpoly_to_json(rep.cubic.f) if rep.cubic else None,
        "h1_variant": variant,
    }


def _run_g2_vgp(payload, args):
    v = VgpNet(payload["q1"], payload["q2"], payload["q3"])
    out = {"branch_identity": vgp_branch_identity(v)}
    try:
        quartic = vgp_genus3_curve(v)
        out["quartic_smooth"] = is_smooth(quartic)
    except DegenerateInputError:
        out["quartic_smooth"] = None
    out.update(algebra_report(vgp_net(v), args.order, args.timeout_secs))
    return out


def _run_g3_web(payload, args):
    if "b11" in payload:
        from .genus3 import Genus3BundleData

        forms = {}
        for key in ("b11", "b12", "b22", "b33", "b34", "b44"):
            v = payload[key]
            forms[key] = (
                parse_poly(RING_XYZ, v) if isinstance(v, str) else _poly_json(v)
            )
        data = Genus3BundleData(
            forms["b11"], forms["b12"], forms["b22"],
            forms["b33"], forms["b34"], forms["b44"], _q_from(payload),
        )
    else:
        pair = StdPair(Fraction(payload["a"]), Fraction(payload["b"]))
        data = standard_bundle_data(pair, _q_from(payload))
    try:
        split = discriminant_split(data)
    except NotDivisibleError as ex:
        raise ClaimFailed(f"quadric factor does not divide the discriminant: {ex}")
    rep = algebra_report(genus3_web(data), args.order, args.timeout_secs)
    rep["split"] = {
        "quartic_degree": split.quartic.total_degree(),
        "quadric_gram_rank": split.quadric_gram_rank,
        "degeneracy_plane_ok": split.degeneracy_plane_ok,
    }
    return rep


def _run_g3_relations(payload, args):
    params = SixRelationParams(
        Fraction(payload["a"]), Fraction(payload["b"]), _payload_fracs(payload, "coeffs")
    )
    return algebra_report(six_relations(params), args.order, args.timeout_secs)


def _run_g3_special(payload, args):
    params = SpecialParams(_payload_fracs(payload, "a"), _payload_fracs(payload, "b"))
    rep = algebra_report(special_case(params), args.order, args.timeout_secs)
    crit = surd_criterion(params)
    rep["surd_criterion"] = crit
    return rep


def _run_symmetroid(payload, args):
    pair = StdPair(Fraction(payload["a"]), Fraction(payload["b"]))
    _, s = symmetroid(pair)
    report = symmetroid_nodes(pair)
    return {
        "det": mpoly_to_json(s),
        "count": report.count,
        "nodes": [
            {"locus": rec.locus, "type": rec.kind, "verified": rec.verified}
            for rec in report.records
        ],
        "section_two_conics": section_two_conics(pair),
        "derivation_check": mat2_derivation_check(pair),
    }


def _payload_fracs(payload, key):
    v = payload[key]
    if isinstance(v, str):
        return _fracs(v)
    return [Fraction(x) for x in v]


class ClaimFailed(RuntimeError):
    pass


# ---------- sweeps ----------

def _lorenzen_row(task):
    rst, u, variant = task
    rep = lorenzen_discriminant_report(LorenzenPoint(rst, u), variant)
    return {
        "u0": frac_to_json(u[0]),
        "u1": frac_to_json(u[1]),
        "u2": frac_to_json(u[2]),
        "very_stable": rep.very_stable,
        "dim": rep.dim if rep.dim is not None else "",
        "smooth": rep.smooth if rep.smooth is not None else "",
        "j_num": rep.j.numerator if rep.j is not None else "",
        "j_den": rep.j.denominator if rep.j is not None else "",
    }


def _web_row(task):
    (a, b), q_text = task
    pair = StdPair(a, b)
    data = standard_bundle_data(pair, parse_poly(RING_XYZ, q_text))
    try:
        split = discriminant_split(data)
        split_ok = split.quartic.total_degree() == 4 and split.quadric_gram_rank == 3
    except NotDivisibleError:
        split_ok = False
    rep = algebra_report(genus3_web(data))
    return {
        "a": frac_to_json(a),
        "b": frac_to_json(b),
        "very_stable": rep["very_stable"],
        "dim": rep["dim"] if rep["dim"] is not None else "",
        "split_ok": split_ok,
    }


_SWEEPS = {
    "g2-lorenzen": (
        _lorenzen_row,
        ("u0", "u1", "u2", "very_stable", "dim", "smooth", "j_num", "j_den"),
    ),
    "g3-web": (_web_row, ("a", "b", "very_stable", "dim", "split_ok")),
}


def _grid_points(grid: dict):
    if "points" in grid:
        return [[Fraction(x) for x in row] for row in grid["points"]]
    if "axes" in grid:
        import itertools

        axes = [[Fraction(x) for x in axis] for axis in grid["axes"]]
        return [list(p) for p in itertools.product(*axes)]
    raise ValueError("grid JSON needs 'points' or 'axes'")


def _run_sweep(args):
    with open(args.grid) as fh:
        grid = json.load(fh)
    points = _grid_points(grid)
    row_fn, columns = _SWEEPS[args.kind]
    if args.kind == "g2-lorenzen":
        if not args.rst:
            raise ValueError("sweep g2-lorenzen requires --rst r,s,t")
        rst = tuple(_fracs(args.rst))
        tasks = [(rst, tuple(u), args.h1_variant) for u in points]
        keyed = [(tuple(map(str, t[1])), t) for t in tasks]
    else:
        q_text = args.q or "x*y"
        tasks = [((p[0], p[1]), q_text) for p in points]
        keyed = [(tuple(map(str, t[0])), t) for t in tasks]
    keyed.sort(key=lambda kv: kv[0])
    ordered = [t for _, t in keyed]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(row_fn, ordered))
    else:
        rows = [row_fn(t) for t in ordered]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


# ---------- entry point ----------

_RUNNERS = {
    "algebra": _run_algebra,
    "discriminant": _run_discriminant,
    "g2-odd": _run_g2_odd,
    "g2-lorenzen": _run_g2_lorenzen,
    "g2-vgp": _run_g2_vgp,
    "g3-web": _run_g3_web,
    "g3-relations": _run_g3_relations,
    "g3-special": _run_g3_special,
    "symmetroid": _run_symmetroid,
}

_FLAG_KEYS = ("a", "b", "branch", "rst", "u", "q", "coeffs", "h1_variant")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="multalg-kit",
        description="exact verification toolkit for multiplicity algebras of quadric nets",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--in", dest="infile", help="input JSON file")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--timeout-secs", type=float, default=None)
        p.add_argument("--timings", action="store_true", help="include timings in the report")

    for name in _RUNNERS:
        p = sub.add_parser(name)
        common(p)
        for key in _FLAG_KEYS:
            p.add_argument(f"--{key.replace('_', '-')}", dest=key)

    p = sub.add_parser("sweep")
    p.add_argument("kind", choices=sorted(_SWEEPS))
    common(p)
    p.add_argument("--rst")
    p.add_argument("--q")
    p.add_argument("--grid", required=True, help="grid JSON ('points' or 'axes')")
    p.add_argument("--h1-variant", dest="h1_variant", default="verbatim")

    p = sub.add_parser("verify-paper")
    common(p)
    return ap


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = time.perf_counter()

    if args.command == "sweep":
        try:
            csv_text = _run_sweep(args)
        except (ValueError, KeyError, OSError, json.JSONDecodeError) as ex:
            print(f"error: {ex}", file=sys.stderr)
            return 1
        _emit(csv_text, args.out)
        return 0

    if args.command == "verify-paper":
        results = acceptance.run_all(args.seed)
        print(acceptance.format_results(results))
        report = {
            "schema": SCHEMA,
            "command": "verify-paper",
            "status": "ok" if all(r.passed for r in results) else "claim_failed",
            "results": [
                {
                    "criterion": r.cid,
                    "title": r.title,
                    "passed": r.passed,
                    "subchecks": [
                        {"name": s.name, "passed": s.passed, "detail": s.detail}
                        for s in r.subchecks
                    ],
                }
                for r in results
            ],
        }
        if args.out:
            _emit(canonical_dumps(report) + "\n", args.out)
        return 0 if report["status"] == "ok" else 2

    runner = _RUNNERS[args.command]
    fallback = {
        k: getattr(args, k) for k in _FLAG_KEYS if getattr(args, k, None) is not None
    }
    try:
        payload = _load_input(args, fallback if fallback else None)
        results = runner(payload, args)
        status = "ok"
    except ClaimFailed as ex:
        results = {"message": str(ex)}
        status = "claim_failed"
    except NotVeryStableError as ex:
        results = {"very_stable": False, "message": str(ex)}
        status = "ok"
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "input_digest": input_digest(payload),
        "status": status,
        "results": results,
    }
    if args.timings:
        report["timings_ms"] = {"total": round((time.perf_counter() - t0) * 1000, 3)}
    _emit(canonical_dumps(report) + "\n", args.out)
    return 0 if status == "ok" else 2


if __name__ == "__main__":
    sys.exit(main())
