"""Command-line front end.

Subcommands: construct, verify, count, bound, search, report.  All output
is deterministic (sorted JSON keys, fixed CSV columns, no timestamps) and
exact (integers, or rationals rendered as num/den).  Exit codes: 0 success
or verdict true, 1 verdict false, 2 usage error, 3 budget or size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .constructions import (
    VARIANTS,
    center_spherical,
    circular_odd_power,
    circular_prime,
    circular_square,
    hypersphere_union,
    radius_spherical,
    witness_from_json_dict,
)
from .errors import BudgetExceededError, KakeyaError, SizeCapError
from .field import make_field, prime_power_decompose
from .geometry import DiagonalEq, PointSet, diagonal_count_bruteforce, diagonal_count_closed
from .search import greedy_circular, minimal_circular_exact
from .verification import (
    DEFAULT_BUDGET,
    circular_lower_bounds,
    diff_cover,
    exact_str,
    spherical_kakeya_lower_bound,
    sum_cover,
    verify_center_kakeya,
    verify_radius_kakeya,
    witness_valid,
)

SPHERICAL = ("radius-spherical", "center-spherical", "hypersphere-union")
CIRCULAR = ("circular-prime", "circular-square", "circular-odd-power")

CSV_COLUMNS = ["q", "p", "k", "n", "construction", "variant", "size",
               "mainTerm1", "mainTerm2", "mainTerm3",
               "bound", "boundMet", "witnessValid"]


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def _write(out_path, text: str) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _result_row(res) -> list[str]:
    terms = [exact_str(t) for t in res.main_terms][:3]
    terms += [""] * (3 - len(terms))
    return [str(res.field.q), str(res.field.p), str(res.field.k), str(res.n),
            res.name, res.variant or "", str(res.size),
            terms[0], terms[1], terms[2],
            exact_str(res.bound), _bool_str(res.bound_met),
            _bool_str(res.witness_valid)]


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def _build_construction(which, p, k, n, variant, r):
    if which in CIRCULAR:
        if n not in (None, 1):
            raise UsageError(f"{which} is one-dimensional; omit --n or pass 1")
        if which == "circular-prime":
            if k != 1:
                raise UsageError("circular-prime needs k = 1")
            return circular_prime(p, variant)
        field = make_field(p, k)
        if which == "circular-square":
            return circular_square(field, variant)
        return circular_odd_power(field, variant)
    if n is None:
        raise UsageError(f"{which} needs --n")
    field = make_field(p, k)
    if which == "radius-spherical":
        return radius_spherical(field, n)
    if which == "center-spherical":
        return center_spherical(field, n, r)
    return hypersphere_union(field, n)


def _cmd_construct(args) -> int:
    res = _build_construction(args.which, args.p, args.k, args.n,
                              args.variant, args.r)
    if args.format == "json":
        text = _dumps(res.to_json_dict())
    else:
        text = _csv_text([_result_row(res)])
    _write(args.out, text)
    return 0


def _load_set_file(path):
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "ranks" not in data:
        raise UsageError(f"{path} is not a point set file")
    field = make_field(int(data["p"]), int(data.get("k", 1)))
    if "q" in data and int(data["q"]) != field.q:
        raise UsageError("q in file does not match p^k")
    n = int(data["n"])
    points = PointSet.from_ranks(field, n, data["ranks"])
    witness = None
    if "witness" in data:
        witness = witness_from_json_dict(data["witness"])
    return field, points, witness


def _cmd_verify(args) -> int:
    field, points, witness = _load_set_file(args.file)
    prop = args.property
    if prop in ("radius", "center"):
        fn = verify_radius_kakeya if prop == "radius" else verify_center_kakeya
        if args.mode == "witness":
            if witness is None:
                raise UsageError("witness mode needs a witness in the file")
            verdict = fn(points, witness)
        else:
            verdict = fn(points, budget=args.budget)
    elif prop in ("diff-cover", "sum-cover"):
        if points.n != 1:
            raise UsageError(f"{prop} applies to one-dimensional sets")
        ranks = [int(x) for x in points.ranks()]
        verdict = (diff_cover if prop == "diff-cover" else sum_cover)(field, ranks)
    else:  # stored witness, whatever its kind
        if witness is None:
            raise UsageError("witness mode needs a witness in the file")
        verdict = witness_valid(field, points, witness)
    out = {
        "q": field.q, "p": field.p, "k": field.k, "n": points.n,
        "property": prop, "mode": args.mode,
        "size": points.size, "verdict": verdict,
    }
    if prop in ("radius", "center"):
        out["witnessValid" if args.mode == "witness" else "exhaustiveValid"] = verdict
    elif prop == "witness":
        out["witnessValid"] = verdict
    if points.n >= 2:
        report = spherical_kakeya_lower_bound(field.q, points.n)
        out["lowerBound"] = exact_str(report.value)
        out["meetsLowerBound"] = points.size >= report.value
    else:
        dmin, smin = circular_lower_bounds(field.q)
        out["diffCoverMin"] = dmin
        out["sumCoverMin"] = smin
    _write(args.out, _dumps(out))
    return 0 if verdict else 1


def _cmd_count(args) -> int:
    coeffs = tuple(int(x) for x in args.coeffs.split(",") if x.strip())
    if args.n is not None and args.n != len(coeffs):
        raise UsageError("--n does not match the number of coefficients")
    field = make_field(args.p, args.k)
    eq = DiagonalEq(coeffs, args.rhs)
    out = {
        "q": field.q, "p": field.p, "k": field.k, "n": len(coeffs),
        "coeffs": list(coeffs), "rhs": args.rhs,
    }
    if args.method in ("closed", "both"):
        out["closed"] = diagonal_count_closed(field, eq)
    if args.method in ("bruteforce", "both"):
        out["bruteforce"] = diagonal_count_bruteforce(field, eq)
    if args.method == "both":
        out["agree"] = out["closed"] == out["bruteforce"]
    _write(args.out, _dumps(out))
    if args.method == "both" and not out["agree"]:
        return 1
    return 0


def _cmd_bound(args) -> int:
    if args.n == 1:
        dmin, smin = circular_lower_bounds(args.q)
        out = {"q": args.q, "n": 1, "diffCoverMin": dmin, "sumCoverMin": smin}
    else:
        report = spherical_kakeya_lower_bound(args.q, args.n)
        out = {"q": args.q, "n": args.n, "branch": report.branch,
               "value": exact_str(report.value), "ceiling": report.ceiling}
    _write(args.out, _dumps(out))
    return 0


def _cmd_search(args) -> int:
    field = make_field(args.p, args.k)
    if args.method == "exact":
        outcome = minimal_circular_exact(field, args.kind, limit=args.limit,
                                         node_budget=args.node_budget)
    else:
        outcome = greedy_circular(field, args.kind)
    _write(args.out, _dumps(outcome.to_json_dict()))
    return 0


def _cmd_report(args) -> int:
    qs = sorted({int(x) for x in args.q_list.split(",") if x.strip()})
    ns = sorted({int(x) for x in args.n_list.split(",") if x.strip()})
    variants = list(VARIANTS) if args.variant == "both" else [args.variant]
    rows = []
    for q in qs:
        p, k = prime_power_decompose(q)
        if args.which in CIRCULAR:
            for variant in variants:
                res = _build_construction(args.which, p, k, None, variant, None)
                rows.append(_result_row(res))
        else:
            for n in ns:
                res = _build_construction(args.which, p, k, n, None, args.r)
                rows.append(_result_row(res))
    _write(args.out, _csv_text(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffkakeya",
        description="Spherical and circular Kakeya sets over odd finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a Kakeya set")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--which", required=True, choices=SPHERICAL + CIRCULAR)
    c.add_argument("--variant", choices=VARIANTS, default="radius")
    c.add_argument("--r", type=int, default=None,
                   help="nonsquare radius rank for center-spherical")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--out", default=None)
    c.set_defaults(handler=_cmd_construct)

    v = sub.add_parser("verify", help="verify a saved point set")
    v.add_argument("--file", required=True)
    v.add_argument("--property", required=True,
                   choices=("radius", "center", "diff-cover", "sum-cover", "witness"))
    v.add_argument("--mode", choices=("witness", "exhaustive"), default="exhaustive")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--out", default=None)
    v.set_defaults(handler=_cmd_verify)

    t = sub.add_parser("count", help="count diagonal equation solutions")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--k", type=int, default=1)
    t.add_argument("--n", type=int, default=None)
    t.add_argument("--coeffs", required=True,
                   help="comma-separated coefficient ranks")
    t.add_argument("--rhs", type=int, required=True)
    t.add_argument("--method", choices=("closed", "bruteforce", "both"),
                   default="both")
    t.add_argument("--out", default=None)
    t.set_defaults(handler=_cmd_count)

    b = sub.add_parser("bound", help="exact size bounds")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--out", default=None)
    b.set_defaults(handler=_cmd_bound)

    s = sub.add_parser("search", help="minimal circular covers")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--kind", required=True, choices=("radius", "center"))
    s.add_argument("--method", choices=("exact", "greedy"), default="exact")
    s.add_argument("--limit", type=int, default=13)
    s.add_argument("--node-budget", type=int, default=100_000_000)
    s.add_argument("--out", default=None)
    s.set_defaults(handler=_cmd_search)

    r = sub.add_parser("report", help="sweep constructions into a CSV table")
    r.add_argument("--which", required=True, choices=SPHERICAL + CIRCULAR)
    r.add_argument("--q-list", default="", help="comma-separated prime powers")
    r.add_argument("--n-list", default="", help="comma-separated dimensions")
    r.add_argument("--variant", choices=VARIANTS + ("both",), default="both")
    r.add_argument("--r", type=int, default=None)
    r.add_argument("--out", default=None)
    r.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (BudgetExceededError, SizeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KakeyaError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
