"""Command line front end.

Exit status: 0 for a positive answer, 1 when the computation finished
with a negative answer (not a changemaker, obstruction found, not
realized, ...), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import alexander, cables, changemaker, dinvariants, realization
from .alexander import AlexanderPoly


_NEGATIVE_LIST = re.compile(r"^-\d+([,;]-?\d+)*$")


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(";", ",").split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _poly(text: str) -> AlexanderPoly:
    try:
        return AlexanderPoly.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _changemaker(text: str) -> changemaker.Changemaker:
    try:
        return changemaker.Changemaker(_ints(text))
    except ValueError as exc:
        raise UsageError(str(exc))


def _rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, exit status)


def cmd_cm(args) -> tuple[dict, int]:
    if args.action == "check":
        sigma = _ints(args.sigma)
        try:
            ok = changemaker.is_changemaker(sigma)
        except ValueError as exc:
            raise UsageError(str(exc))
        return {"sigma": list(sigma), "changemaker": ok,
                "subset_sums_complete": changemaker.subset_sums_complete(sigma)}, 0 if ok else 1
    if args.action == "enum":
        if args.p < 1:
            raise UsageError("p must be positive")
        if args.allow_zeros and args.length is None:
            raise UsageError("--allow-zeros needs --length")
        found = changemaker.enumerate_changemakers(args.p, args.length, args.allow_zeros)
        return {"p": args.p, "changemakers": [list(c.sigma) for c in found],
                "count": len(found)}, 0 if found else 1
    cm = _changemaker(args.sigma)
    if not 0 <= args.k <= cm.l1:
        raise UsageError(f"k must lie in [0, {cm.l1}]")
    subset = changemaker.make_change(cm, args.k)
    return {"sigma": list(cm.sigma), "k": args.k, "subset": list(subset)}, 0


def cmd_alex(args) -> tuple[dict, int]:
    if args.action == "validate":
        poly = _poly(args.coeffs)
        ok = alexander.validate_lspace_form(poly)
        return {"coeffs": list(poly.half), "lspace_form": ok, "genus": poly.degree}, 0 if ok else 1
    if args.action == "torsion":
        poly = _poly(args.coeffs)
        payload: dict[str, Any] = {"coeffs": list(poly.half),
                                   "validated": alexander.validate_lspace_form(poly)}
        if args.i is None:
            payload["torsion"] = list(alexander.torsion_profile(poly))
        else:
            payload["i"] = args.i
            payload["torsion"] = alexander.torsion(poly, args.i)
        return payload, 0
    if args.action == "torus":
        try:
            poly = alexander.torus_poly(args.r, args.s)
        except ValueError as exc:
            raise UsageError(str(exc))
        return {"r": args.r, "s": args.s, "coeffs": list(poly.half), "genus": poly.degree}, 0
    try:
        g = alexander.cable_genus(args.q, args.r, args.g)
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = alexander.cable_lspace_criterion(args.q, args.r, args.g)
    return {"q": args.q, "r": args.r, "companion_genus": args.g, "genus": g,
            "lspace_cable": ok}, 0


def cmd_dinv(args) -> tuple[dict, int]:
    if args.action == "unknot":
        try:
            d = dinvariants.d_unknot(args.p, args.i)
        except ValueError as exc:
            raise UsageError(str(exc))
        return {"p": args.p, "i": args.i, "d": _rational(d)}, 0
    if args.action == "surgery":
        poly = _poly(args.coeffs)
        if not 0 <= args.i <= args.p:
            raise UsageError(f"label must lie in [0, {args.p}]")
        if not alexander.validate_lspace_form(poly):
            return {"p": args.p, "i": args.i, "coeffs": list(poly.half),
                    "error": "not an L-space knot polynomial"}, 1
        d = dinvariants.d_lspace_surgery(args.p, args.i, poly)
        return {"p": args.p, "i": args.i, "coeffs": list(poly.half), "d": _rational(d),
                "d_unknot": _rational(dinvariants.d_unknot(args.p, args.i))}, 0
    cm = _changemaker(args.sigma)
    poly = _poly(args.coeffs)
    if not alexander.validate_lspace_form(poly):
        return {"sigma": list(cm.sigma), "coeffs": list(poly.half),
                "error": "not an L-space knot polynomial"}, 1
    if args.box < 1:
        raise UsageError("--box must be positive")
    rep = dinvariants.lemma_c_check(cm, poly, args.box)
    payload = {
        "sigma": list(cm.sigma),
        "coeffs": list(poly.half),
        "box": args.box,
        "obstructed": rep.obstructed,
        "violations": [{"c": list(c), "label": i, "lhs": lhs, "rhs": rhs}
                       for c, i, lhs, rhs in rep.violations[:20]],
        "violation_count": len(rep.violations),
        "witnesses": {str(i): (list(w) if w is not None else None)
                      for i, w in sorted(rep.witnesses.items())},
        "caveat": rep.caveat,
    }
    return payload, 1 if rep.obstructed else 0


def cmd_bounds(args) -> tuple[dict, int]:
    if args.p < 1:
        raise UsageError("p must be positive")
    return {"p": args.p, "nonsharp": changemaker.bound_nonsharp(args.p),
            "sharp": changemaker.bound_sharp(args.p)}, 0


def cmd_family(args) -> tuple[dict, int]:
    if args.n < 1:
        raise UsageError("n must be positive")
    st = cables.family(args.n)
    ok = cables.verify_stage(st)
    return {"n": st.n, "cable_params": list(st.cable_params), "p": st.p,
            "sigma": list(st.sigma.sigma), "genus": st.genus, "degenerate": st.degenerate,
            "verified": ok}, 0 if ok else 1


def cmd_realize(args) -> tuple[dict, int]:
    try:
        w = realization.realize(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    weights = list(realization.hj_expand(args.p, args.q).weights)
    if w is None:
        return {"p": args.p, "q": args.q, "weights": weights, "realized": False,
                "verdict": "not realized"}, 1
    return {"p": args.p, "q": args.q, "weights": weights, "realized": True,
            "verdict": "realized", "sigma": list(w.sigma.sigma), "genus": w.genus,
            "chain": [list(v) for v in w.chain], "chain_weights": list(w.weights),
            "berge_ok": realization.berge_bound(args.p, w.genus)}, 0


def cmd_gt(args) -> tuple[dict, int]:
    if args.p < 2:
        raise UsageError("p must be at least 2")
    best = realization.goda_teragaito_max(args.p)
    maximizers = [list(c.sigma) for c in changemaker.enumerate_changemakers(args.p)
                  if 2 * changemaker.sharp_genus(c) - 1 == best]
    return {"p": args.p, "max_2g_minus_1": best, "maximizers": maximizers,
            "within_p_minus_9": best <= args.p - 9}, 0


def cmd_scan(args) -> tuple[Optional[dict], int]:
    if args.pmax < 2:
        raise UsageError("pmax must be at least 2")
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    records = realization.scan(args.pmax, workers=args.workers)
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(realization.CSV_COLUMNS)
        for r in records:
            writer.writerow(r.csv_row())
        text = buf.getvalue()
    elif args.json:
        text = realization.records_to_jsonl(records)
    else:
        lines = []
        for r in records:
            verdict = (f"sigma={','.join(map(str, r.sigma))} genus={r.genus}"
                       + ("" if r.berge_ok else "  BERGE BOUND FAILS")) if r.realized else "-"
            lines.append(f"L({r.p},{r.q}) [{','.join(map(str, r.weights))}]: {verdict}")
        bad = realization.berge_violations(records)
        lines.append(f"# {len(records)} pairs, {sum(r.realized for r in records)} realized, "
                     f"{len(bad)} Berge bound violations: "
                     + (", ".join(f"({r.p},{r.q})" for r in bad) or "none"))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return None, 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output")
    group.add_argument("--csv", action="store_true", help="CSV output")

    parser = argparse.ArgumentParser(
        prog="sharpgenus",
        description="Changemaker lattices, correction terms and genus bounds for "
                    "L-space surgeries.")
    sub = parser.add_subparsers(dest="command", required=True)

    cm = sub.add_parser("cm", help="changemaker vectors")
    cm_sub = cm.add_subparsers(dest="action", required=True)
    p = cm_sub.add_parser("check", parents=[fmt])
    p.add_argument("sigma", help="e.g. 1,2,4")
    p = cm_sub.add_parser("enum", parents=[fmt])
    p.add_argument("p", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--allow-zeros", action="store_true")
    p = cm_sub.add_parser("change", parents=[fmt])
    p.add_argument("sigma")
    p.add_argument("k", type=int)
    cm.set_defaults(func=cmd_cm)

    al = sub.add_parser("alex", help="Alexander polynomials (coefficients a_0,...,a_g)")
    al_sub = al.add_subparsers(dest="action", required=True)
    p = al_sub.add_parser("validate", parents=[fmt])
    p.add_argument("coeffs")
    p = al_sub.add_parser("torsion", parents=[fmt])
    p.add_argument("coeffs")
    p.add_argument("i", type=int, nargs="?")
    p = al_sub.add_parser("torus", parents=[fmt])
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p = al_sub.add_parser("cable-genus", parents=[fmt])
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("g", type=int)
    al.set_defaults(func=cmd_alex)

    dv = sub.add_parser("dinv", help="correction terms")
    dv_sub = dv.add_subparsers(dest="action", required=True)
    p = dv_sub.add_parser("unknot", parents=[fmt])
    p.add_argument("p", type=int)
    p.add_argument("i", type=int)
    p = dv_sub.add_parser("surgery", parents=[fmt])
    p.add_argument("p", type=int)
    p.add_argument("i", type=int)
    p.add_argument("coeffs")
    p = dv_sub.add_parser("lemma-c", parents=[fmt])
    p.add_argument("sigma")
    p.add_argument("coeffs")
    p.add_argument("--box", type=int, default=3)
    dv.set_defaults(func=cmd_dinv)

    p = sub.add_parser("bounds", parents=[fmt], help="genus bounds at slope p")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", parents=[fmt], help="extremal iterated cable")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("realize", parents=[fmt], help="changemaker complement test for L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("scan", parents=[fmt], help="realize every L(p,q) with p <= pmax")
    p.add_argument("pmax", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("gt", parents=[fmt], help="largest 2g-1 over changemakers of norm p")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_gt)
    return parser


def _flat(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(_flat(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render(payload: dict, args) -> str:
    if args.json:
        return json.dumps(payload, sort_keys=True) + "\n"
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(payload))
        writer.writerow([_flat(v) for v in payload.values()])
        return buf.getvalue()
    return "".join(f"{k}: {_flat(v)}\n" for k, v in payload.items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse would read "-1,1" as an option; a leading space keeps it positional
    argv = [" " + a if _NEGATIVE_LIST.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, status = args.func(args)
    except UsageError as exc:
        print(f"sharpgenus: error: {exc}", file=sys.stderr)
        return 2
    if payload is not None:
        sys.stdout.write(render(payload, args))
    return status


if __name__ == "__main__":
    sys.exit(main())
