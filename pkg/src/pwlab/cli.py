"""Command line entry point: ``pw-lab <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad arguments.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .linalg import format_rational

SCHEMA = "pw-lab/1"


class UsageError(Exception):
    pass


def _plain(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def _int_list(text):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}")


def cmd_ring(args):
    from .ring import build_ring, gl2_extend

    pres = build_ring(args.g, args.degD)
    dims = pres.dims()
    if args.gl2:
        dims = gl2_extend(dims, args.g)
    by_w = {}
    for (_, w), n in pres.dims().items():
        by_w[w] = by_w.get(w, 0) + n
    sym = all(by_w.get(w, 0) == by_w.get(2 * pres.w0 - w, 0) for w in by_w)
    table = [{"d": d, "w": w, "dim": n} for (d, w), n in sorted(dims.items()) if n]
    report = {"dims": table, "w0": pres.w0, "n": pres.n, "canonical": pres.canonical,
              "total": sum(r["dim"] for r in table), "weight_symmetry": sym}
    return report, sym, "dims"


def cmd_lefschetz(args):
    from .lefschetz import BiGradedModule, hard_lefschetz_verify, isobaric_pieces
    from .ring import build_ring

    module = BiGradedModule.from_ring(build_ring(args.g, args.degD))
    hl = hard_lefschetz_verify(module)
    pieces = [{"w": w, "j": j, "dim": n} for (w, j), n in sorted(isobaric_pieces(module).items())]
    ok = all(r["iso"] for r in hl) and sum(p["dim"] for p in pieces) == sum(module.dims.values())
    return {"isobaric": pieces, "hard_lefschetz": hl, "w0": module.w0, "pass": ok}, ok, "isobaric"


def cmd_pw_check(args):
    from .pw import pw_check

    rep = pw_check(args.g, args.degD, gl2=args.gl2)
    return rep.to_json(), rep.passed, "filtration"


def cmd_jacobian(args):
    from .jacobian import (SingularType, blowup_poset_sum, compactified_jacobian_betti,
                           format_polynomial, poincare_polynomial)

    t = SingularType(_int_list(args.odd), _int_list(args.even), args.gtilde)
    poly = poincare_polynomial(t, args.reading)
    betti = compactified_jacobian_betti(t)
    poset = blowup_poset_sum(t)
    report = {"betti_sum": betti, "poincare_poly": format_polynomial(poly),
              "poset_sum": poset, "e1_degenerate": poset == betti,
              "poincare_at_1": sum(poly), "poincare_matches_betti": sum(poly) == betti,
              "reading": args.reading}
    # the printed reading is reported for comparison only
    ok = poset == betti and (args.reading == "printed" or sum(poly) == betti)
    return report, ok, None


def cmd_braid(args):
    from .braid import Partition, build_rep, closed_form_invariants, invariant_dims_by_degree

    p = Partition(_int_list(args.partition))
    rep = build_rep(p, args.variant)
    per_degree = invariant_dims_by_degree(rep)
    scale = 2 ** (4 * args.g if args.variant == "disc" else 4 * args.g - 2)
    inv = sum(per_degree)
    closed = closed_form_invariants(p, args.variant)
    total = inv * scale
    closed_total = closed * scale
    report = {"partition": list(p.parts), "variant": args.variant, "dimension": rep.dimension,
              "per_degree_invariants": per_degree, "invariants": inv,
              "closed_form_invariants": closed, "total": total, "closed_form": closed_total,
              "match": total == closed_total}
    table = [{"degree": l, "invariants": n} for l, n in enumerate(per_degree)]
    report["_table"] = table
    return report, total == closed_total, "_table"


def cmd_sl2(args):
    from .sl2 import e_var, variant_consistency, variant_dims

    cons = variant_consistency(args.g)
    checks = {k: v for k, v in cons.items() if isinstance(v, bool)}
    report = {"e_var": e_var(args.g).to_json(), "variant_dims": variant_dims(args.g).to_json(),
              "consistency": checks}
    return report, all(checks.values()), "variant_dims"


def cmd_verify_all(args):
    from .suite import verify_all

    if min(args.max_g, args.max_degD, args.max_d) < 0:
        raise UsageError("bounds must be non-negative")
    summary = verify_all(args.max_g, args.max_degD, args.max_d)
    rows = [{"item": r["item"], "pass": r["pass"]} for r in summary["items"]]
    summary["_table"] = rows
    return summary, summary["pass"], "_table"


def _false_paths(obj, prefix=""):
    """Paths of every False leaf, used as the failure diff."""
    out = []
    if isinstance(obj, dict):
        for k, v in sorted(obj.items(), key=lambda kv: str(kv[0])):
            if not str(k).startswith("_"):
                out += _false_paths(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            out += _false_paths(v, f"{prefix}[{i}]")
    elif obj is False:
        out.append(prefix)
    return out


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="pw-lab", description="Exact checks for twisted Higgs cohomology")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_args(p):
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--degD", type=int, required=True)

    p = sub.add_parser("ring", parents=[common], help="graded dimensions of the ring")
    ring_args(p)
    p.add_argument("--gl2", action="store_true")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("lefschetz", parents=[common], help="isobaric pieces and hard Lefschetz")
    ring_args(p)
    p.set_defaults(func=cmd_lefschetz)

    p = sub.add_parser("pw-check", parents=[common], help="weight vs perverse filtration")
    ring_args(p)
    p.add_argument("--gl2", action="store_true")
    p.set_defaults(func=cmd_pw_check)

    p = sub.add_parser("jacobian", parents=[common], help="compactified Jacobian Betti counts")
    p.add_argument("--gtilde", type=int, required=True)
    p.add_argument("--odd", default="")
    p.add_argument("--even", default="")
    p.add_argument("--reading", choices=("consistent", "printed"), default="consistent")
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("braid", parents=[common], help="braid monodromy invariants")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--variant", choices=("conn", "disc"), default="conn")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("sl2", parents=[common], help="SL2 variant part")
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_sl2)

    p = sub.add_parser("verify-all", parents=[common], help="batch verification")
    p.add_argument("--max-g", dest="max_g", type=int, default=2)
    p.add_argument("--max-degD", dest="max_degD", type=int, default=4)
    p.add_argument("--max-d", dest="max_d", type=int, default=6)
    p.set_defaults(func=cmd_verify_all)
    return parser


def render(report, table_key, fmt):
    if fmt == "csv":
        rows = report.get(table_key) if table_key else [
            {k: v for k, v in report.items() if not isinstance(v, (list, dict))}]
        buf = io.StringIO()
        rows = _plain(rows or [])
        fields = sorted({k for r in rows for k in r})
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                             for k, v in r.items()})
        return buf.getvalue()
    body = {k: v for k, v in report.items() if not k.startswith("_")}
    body["schema"] = SCHEMA
    return json.dumps(_plain(body), sort_keys=True, indent=2) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, ok, table_key = args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"pw-lab: error: {exc}", file=sys.stderr)
        return 2
    if not ok:
        report["pass"] = False
        report["failures"] = [p for p in _false_paths(report) if p != "pass"]
    text = render(report, table_key, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not ok:
        print("pw-lab: checks failed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
