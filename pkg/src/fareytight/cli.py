"""Command line front end: single queries, batch sweeps, DOT export.

Exit codes: 0 success, 2 malformed input, 3 domain error, 4 when
--strict is set and some structure falls outside the encoded
classification (status NotCoveredByPaper).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .slopes import DomainError, ParseError, Slope, make_slope, parse_slope, slope_sort_key
from .slopes import cf_minus
from .paths import blocks, minimal_path
from .tori import count_tight, enumerate_tight, phi
from .cables import cable_surgery_slope, reglue_map
from .atlas import (
    Fillability,
    MixedTorus,
    enumerate_structures,
    exceptional_slopes,
    full_path,
    structure_record,
    verdict_summary,
)

_DOT_COLORS = {
    "Stein": "palegreen",
    "StrongNotExact": "lightcoral",
    "StrongSteinConditional": "khaki",
    "NotCoveredByPaper": "lightgray",
}


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _slope(text: str) -> Slope:
    try:
        return parse_slope(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _one_based_blocks(path) -> list[list[int]]:
    return [[e + 1 for e in run] for run in blocks(path).runs]


def emit_dot_path(path) -> str:
    lines = ["digraph farey_path {", "  rankdir=LR;", "  node [shape=ellipse];"]
    for u, v in path.edges:
        lines.append('  "%s" -> "%s";' % (u, v))
    lines.append("}")
    return "\n".join(lines)


def emit_dot_triangle(r: Slope) -> str:
    spots: dict[tuple[int, int], list] = {}
    for sid in enumerate_structures(r):
        spots.setdefault((sid.k, sid.l), []).append(structure_record(sid))
    lines = [
        "digraph classification_triangle {",
        '  label="surgery coefficient %s";' % r,
        "  node [shape=box, style=filled];",
    ]
    max_k = max(k for k, _ in spots)
    for (k, l), recs in sorted(spots.items()):
        statuses = sorted({rec["status"] for rec in recs})
        color = _DOT_COLORS[statuses[0]] if len(statuses) == 1 else "orange"
        tallies = "\\n".join(
            "%s %d" % (st, sum(1 for rec in recs if rec["status"] == st)) for st in statuses
        )
        lines.append(
            '  "k%d_l%d" [label="k=%d l=%d\\n%s", fillcolor="%s"];' % (k, l, k, l, tallies, color)
        )
    for k in sorted({k for k, _ in spots}):
        row = " ".join('"k%d_l%d";' % (k, l) for kk, l in sorted(spots) if kk == k)
        lines.append("  { rank=same; %s }" % row)
    for k in range(1, max_k):
        lines.append('  "k%d_l0" -> "k%d_l0" [style=invis];' % (k, k + 1))
    lines.append("}")
    return "\n".join(lines)


def _cmd_phi(args) -> int:
    value = phi(args.r)
    if args.format == "json":
        print(_json({"r": str(args.r), "phi": value}))
    else:
        print(value)
    return 0


def _cmd_cf(args) -> int:
    cf = cf_minus(args.x)
    if args.format == "json":
        print(_json({"x": str(args.x), "entries": list(cf.entries)}))
    else:
        print(cf)
    return 0


def _cmd_path(args) -> int:
    path = minimal_path(args.a, args.b)
    if args.format == "json":
        print(_json({"vertices": [str(v) for v in path.vertices], "blocks": _one_based_blocks(path)}))
    elif args.format == "dot":
        print(emit_dot_path(path))
    else:
        print(path)
    return 0


def _cmd_cable_slope(args) -> int:
    slope = cable_surgery_slope(args.p, args.q, args.sign)
    if args.format == "json":
        print(_json({"p": args.p, "q": args.q, "sign": args.sign, "slope": str(slope)}))
    else:
        print(slope)
    return 0


def _cmd_cable_map(args) -> int:
    m = reglue_map(args.p, args.q, args.sign) ** args.power
    if args.format == "json":
        obj = m.to_json()
        if args.apply is not None:
            obj["apply"] = str(args.apply)
            obj["image"] = str(m.apply(args.apply))
        print(_json(obj))
    else:
        if args.apply is not None:
            print(m.apply(args.apply))
        else:
            print(m)
    return 0


def _cmd_count(args) -> int:
    value = count_tight(args.r, args.s)
    if args.format == "json":
        print(_json({"r": str(args.r), "s": str(args.s), "count": value}))
    else:
        print(value)
    return 0


def _cmd_enumerate(args) -> int:
    if args.s is None:
        sids = enumerate_structures(args.r)
        if args.format == "json":
            print(
                _json(
                    [
                        {"r": str(sid.r), "k": sid.k, "l": sid.l, "P": sid.P.to_json()}
                        for sid in sids
                    ]
                )
            )
        elif args.format == "tsv":
            print("r\tk\tl\tP")
            for sid in sids:
                print("%s\t%d\t%d\t%s" % (sid.r, sid.k, sid.l, sid.P))
        else:
            for sid in sids:
                print("k=%d l=%d %s" % (sid.k, sid.l, full_path(sid)))
    else:
        structures = enumerate_tight(args.r, args.s)
        if args.format == "json":
            print(_json([st.iso_class.to_json() for st in structures]))
        elif args.format == "tsv":
            print("r\ts\tminus\tP")
            for st in structures:
                minus = ",".join(str(c) for c in st.iso_class.minus_counts)
                print("%s\t%s\t%s\t%s" % (st.meridian, st.dividing, minus, st.iso_class))
        else:
            for st in structures:
                print(st.iso_class)
    return 0


def _cmd_classify(args) -> int:
    records = [structure_record(sid) for sid in enumerate_structures(args.r)]
    if args.format == "json":
        print(_json(records))
    elif args.format == "tsv":
        print("r\tk\tl\tposition\tstatus\tcite\tnote")
        for rec in records:
            print(
                "%s\t%d\t%d\t%s\t%s\t%s\t%s"
                % (
                    rec["r"],
                    rec["k"],
                    rec["l"],
                    rec["position"],
                    rec["status"],
                    rec["cite"] or "",
                    rec.get("note", ""),
                )
            )
    else:
        for rec in records:
            line = "k=%d l=%d position=%s status=%s" % (
                rec["k"],
                rec["l"],
                rec["position"],
                rec["status"],
            )
            if rec["cite"]:
                line += " cite=%s" % rec["cite"]
            print(line)
    if args.strict and any(rec["status"] == Fillability.NOT_COVERED.value for rec in records):
        return 4
    return 0


def _summary_obj(r: Slope) -> dict:
    counts = verdict_summary(r)
    obj = {"total": sum(counts.values())}
    for status, cnt in counts.items():
        obj[status.json_key] = cnt
    return obj


def _cmd_summary(args) -> int:
    obj = _summary_obj(args.r)
    if args.format == "json":
        print(_json(obj))
    else:
        for key, value in obj.items():
            print("%s %d" % (key, value))
    if args.strict and obj.get(Fillability.NOT_COVERED.json_key):
        return 4
    return 0


def _rationals_in(a: Slope, b: Slope, bound: int) -> list[Slope]:
    """Reduced p/q with q <= bound in the interval [a, b) within (0,1)."""
    for end in (a, b):
        if end.is_infinite or not 0 < end.num <= end.den:
            raise DomainError("sweep interval must lie inside (0,1]")
    lo = Fraction(a.num, a.den)
    hi = Fraction(b.num, b.den)
    if not lo < hi:
        raise DomainError("empty sweep interval")
    out = []
    for q in range(2, bound + 1):
        p_min = math.ceil(lo * q)
        p_max = math.ceil(hi * q) - 1  # strictly below hi
        for p in range(max(p_min, 1), p_max + 1):
            if math.gcd(p, q) == 1:
                out.append(make_slope(p, q))
    out.sort(key=slope_sort_key)
    return out


_SWEEP_COLUMNS = [status.json_key for status in Fillability]


def _cmd_sweep(args) -> int:
    a, b = args.interval
    rows = [(r, _summary_obj(r)) for r in _rationals_in(a, b, args.bound)]
    if args.format == "json":
        print(_json([{"r": str(r), **obj} for r, obj in rows]))
    else:
        print("r\ttotal\t" + "\t".join(_SWEEP_COLUMNS))
        for r, obj in rows:
            cells = [str(r), str(obj["total"])] + [str(obj.get(c, 0)) for c in _SWEEP_COLUMNS]
            print("\t".join(cells))
    if args.strict and any(obj.get(Fillability.NOT_COVERED.json_key) for _, obj in rows):
        return 4
    return 0


def _cmd_exceptional(args) -> int:
    torus = MixedTorus(args.s0, args.s1, args.s_neg1)
    found = sorted(exceptional_slopes(torus, args.paper_mode), key=slope_sort_key)
    if args.format == "json":
        print(
            _json(
                {
                    "s0": str(args.s0),
                    "s1": str(args.s1),
                    "s_neg1": str(args.s_neg1),
                    "paper_mode": args.paper_mode,
                    "exceptional": [str(s) for s in found],
                }
            )
        )
    else:
        print(" ".join(str(s) for s in found))
    return 0


def _cmd_dot(args) -> int:
    if args.mode == "path":
        if len(args.slopes) != 2:
            print("error: dot path expects two slopes", file=sys.stderr)
            return 2
        print(emit_dot_path(minimal_path(parse_slope(args.slopes[0]), parse_slope(args.slopes[1]))))
    else:
        if len(args.slopes) != 1:
            print("error: dot triangle expects one slope", file=sys.stderr)
            return 2
        print(emit_dot_triangle(parse_slope(args.slopes[0])))
    return 0


def _add_format(sub, choices, default="text"):
    sub.add_argument("--format", choices=choices, default=default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareytight",
        description="Tight contact structures on trefoil surgeries, exactly.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("phi", help="solid-torus count phi(r) for r in (0,1)")
    p.add_argument("r", type=_slope)
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_phi)

    p = subs.add_parser("cf", help="minus continued fraction of a rational > 1")
    p.add_argument("x", type=_slope)
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_cf)

    p = subs.add_parser("path", help="minimal clockwise Farey path")
    p.add_argument("a", type=_slope)
    p.add_argument("b", type=_slope)
    _add_format(p, ["text", "json", "dot"])
    p.set_defaults(func=_cmd_path)

    p = subs.add_parser("cable-slope", help="surgery coefficient (pq+sign)/p^2")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--sign", type=int, choices=[1, -1], default=-1)
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_cable_slope)

    p = subs.add_parser("cable-map", help="re-gluing matrix of a cable surgery")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--sign", type=int, choices=[1, -1], default=-1)
    p.add_argument("--power", type=int, default=1, help="number of iterations")
    p.add_argument("--apply", type=_slope, default=None, help="slope to map")
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_cable_map)

    p = subs.add_parser("count", help="number of tight structures on the solid torus")
    p.add_argument("r", type=_slope)
    p.add_argument("s", type=_slope)
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_count)

    p = subs.add_parser(
        "enumerate",
        help="structures on the r-surgery, or on the solid torus when s is given",
    )
    p.add_argument("r", type=_slope)
    p.add_argument("s", type=_slope, nargs="?", default=None)
    _add_format(p, ["text", "json", "tsv"])
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("classify", help="verdict for every structure on the r-surgery")
    p.add_argument("r", type=_slope)
    p.add_argument("--strict", action="store_true")
    _add_format(p, ["text", "json", "tsv"])
    p.set_defaults(func=_cmd_classify)

    p = subs.add_parser("summary", help="verdict tallies for the r-surgery")
    p.add_argument("r", type=_slope)
    p.add_argument("--strict", action="store_true")
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_summary)

    p = subs.add_parser("sweep", help="verdict tallies over an interval of coefficients")
    p.add_argument("--interval", type=_slope, nargs=2, metavar=("A", "B"), required=True)
    p.add_argument("--bound", type=int, default=50, help="max denominator")
    p.add_argument("--strict", action="store_true")
    _add_format(p, ["tsv", "json"], default="tsv")
    p.set_defaults(func=_cmd_sweep)

    p = subs.add_parser("exceptional", help="exceptional slopes of a mixed torus")
    p.add_argument("s0", type=_slope)
    p.add_argument("s1", type=_slope)
    p.add_argument("s_neg1", type=_slope)
    p.add_argument("--paper-mode", action="store_true")
    _add_format(p, ["text", "json"])
    p.set_defaults(func=_cmd_exceptional)

    p = subs.add_parser("dot", help="DOT export: 'dot path A B' or 'dot triangle R'")
    p.add_argument("mode", choices=["path", "triangle"])
    p.add_argument("slopes", nargs="+")
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
