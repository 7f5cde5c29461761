"""Command-line workbench: verify, scan, eval, table, network, cache.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage
error.  Output is deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cache as cache_mod
from . import diagrams as dg
from . import immanants as im
from . import networks as nw
from . import pfaffinants as pfn
from . import schurq as sq
from . import uncross as ux
from . import verify as vf
from .pfaffian import SkewArray, pfaffian


def _common(parser):
    parser.add_argument("--n", type=int, default=None, help="size bound")
    parser.add_argument("--k", type=int, default=None, help="number of variables")
    parser.add_argument("--bound", type=int, default=None, help="size bound for scans")
    parser.add_argument("--seed", type=int, default=0, help="placement/scan seed")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--no-cache", action="store_true")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker pool size for independent verification targets")
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None)
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfaflab",
                                     description="Exact pfaffinant workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a registered identity check")
    p.add_argument("theorem", help="identity id (or 'all'); see 'verify list'")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--grids", type=int, default=None)
    _common(p)

    p = sub.add_parser("scan", help="run a conjecture scanner, emitting JSONL verdicts")
    p.add_argument("conjecture", choices=("con1", "con2", "con3"))
    _common(p)

    p = sub.add_parser("eval", help="evaluate an object and print the polynomial")
    p.add_argument("object", choices=("pfaffinant", "tl-pfaffinant", "pfaffian",
                                      "schur-q", "immanant"))
    p.add_argument("--diagram", default=None, help="diagram key, e.g. V[(2,3)] or T[(1,2)(3,4)]")
    p.add_argument("--subset", default=None, help="comma separated indices, e.g. 1,3")
    p.add_argument("--lam", default=None, help="comma separated outer parts")
    p.add_argument("--mu", default="", help="comma separated inner parts")
    _common(p)

    p = sub.add_parser("table", help="print a golden table as CSV")
    p.add_argument("table", choices=("ex-2.5", "ex-2.7", "ex-2.11", "transition-n2",
                                     "quadratic-n2"))
    _common(p)

    p = sub.add_parser("network", help="build or inspect separating networks")
    p.add_argument("action", choices=("build", "matrix", "check"))
    p.add_argument("--diagram", default=None)
    p.add_argument("--file", default=None, help="network JSON file")
    _common(p)

    p = sub.add_parser("cache", help="inspect or manage the uncrossing-table cache")
    p.add_argument("action", choices=("info", "clear", "warm"))
    _common(p)
    return parser


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verify_one(item):
    theorem, opts = item
    return vf.run(theorem, opts)


def cmd_verify(args) -> int:
    opts = {"n": args.n, "k": args.k, "seed": args.seed, "samples": args.samples,
            "max_size": args.max_size, "grids": args.grids, "bound": args.bound}
    opts = {k: v for k, v in opts.items() if v is not None}
    if args.theorem == "list":
        _emit("\n".join(sorted(vf.REGISTRY)) + "\n", args.out)
        return 0
    targets = sorted(vf.REGISTRY) if args.theorem == "all" else [args.theorem]
    unknown = [t for t in targets if t not in vf.REGISTRY]
    if unknown:
        sys.stderr.write(f"unknown identity id: {', '.join(unknown)}\n")
        return 2
    items = [(t, opts) for t in targets]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, items))
    else:
        reports = [_verify_one(it) for it in items]
    ok = all(not r["failures"] for r in reports)
    if (args.format or "text") == "json":
        _emit(json.dumps(reports if len(reports) > 1 else reports[0], indent=1) + "\n", args.out)
    else:
        lines = []
        for r in reports:
            status = "PASS" if not r["failures"] else "FAIL"
            lines.append(f"{status} {r['theorem']}: {r['cases']} cases, "
                         f"{len(r['failures'])} failures")
            for f in r["failures"][:10]:
                lines.append(f"  {f['case']}: {f['error']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_scan(args) -> int:
    bound = args.bound if args.bound is not None else 10
    k = args.k if args.k is not None else 5
    if args.conjecture == "con1":
        records = sq.scan_q_positivity(args.n or 2, bound, k=k, seed=args.seed)
    elif args.conjecture == "con2":
        records = sq.scan_cell_transfer(bound, k=k)
    else:
        records = sq.scan_sort(bound, k=k)
    buf = io.StringIO()
    for rec in records:
        buf.write(json.dumps(rec, sort_keys=True) + "\n")
    _emit(buf.getvalue(), args.out)
    return 0


def _parse_ints(text):
    return [int(t) for t in text.split(",") if t.strip()] if text else []


def cmd_eval(args) -> int:
    n = args.n or 2
    if args.object in ("pfaffinant", "tl-pfaffinant"):
        if not args.diagram:
            sys.stderr.write("--diagram is required\n")
            return 2
        D = dg.parse_diagram_key(args.diagram, n)
        A = SkewArray.symbolic(2 * n)
        fn = pfn.diagram_pfaffinant if args.object == "pfaffinant" else pfn.tl_pfaffinant
        _emit(fn(D, A, args.seed).render() + "\n", args.out)
        return 0
    if args.object == "pfaffian":
        A = SkewArray.symbolic(2 * n)
        I = _parse_ints(args.subset) if args.subset else None
        _emit(pfaffian(A, I).render() + "\n", args.out)
        return 0
    if args.object == "schur-q":
        lam = tuple(_parse_ints(args.lam))
        mu = tuple(_parse_ints(args.mu))
        k = args.k or max(1, sum(lam) - sum(mu))
        _emit(sq.schur_q(lam, mu, k).render() + "\n", args.out)
        return 0
    if not args.diagram:
        sys.stderr.write("--diagram is required\n")
        return 2
    d = _parse_tl_key(args.diagram, n)
    B = im.symbolic_square(n)
    _emit(im.tl_immanant(d, B).render() + "\n", args.out)
    return 0


def _parse_tl_key(key: str, n: int):
    body = key.strip()
    if not (body.startswith("T[") and body.endswith("]")):
        raise ValueError(f"bad TL diagram key {key!r}")
    edges = []
    for chunk in body[2:-1].replace(")(", ");(").split(";"):
        chunk = chunk.strip()
        if chunk:
            i, j = chunk[1:-1].split(",")
            edges.append((int(i), int(j)))
    return dg.tl_diagram(n, edges)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_table(args) -> int:
    if args.table == "ex-2.5":
        pi = dg.matching([(1, 4), (2, 3)])
        table = ux.f_coefficient(pi, 2, args.seed)
        rows = [("diagram", "weight")]
        for D in dg.enumerate_sym_tl(2):
            rows.append((D.key(), str(table.get(D, 0))))
    elif args.table == "ex-2.7":
        A = SkewArray.symbolic(4)
        rows = [("diagram", "pfaffinant")]
        for D in dg.enumerate_sym_tl(2):
            rows.append((D.key(), pfn.diagram_pfaffinant(D, A, args.seed).render()))
    elif args.table == "ex-2.11":
        A = SkewArray.symbolic(4)
        rows = [("diagram", "tl_pfaffinant")]
        for D in dg.enumerate_sym_tl_even(2):
            rows.append((D.key(), pfn.tl_pfaffinant(D, A, args.seed).render()))
    elif args.table == "transition-n2":
        parts, cols, mat = pfn.transition_matrix(2)
        rows = [("partition", *(D.key() for D in cols))]
        for (I, _), row in zip(parts, mat):
            rows.append(("{" + ",".join(map(str, I)) + "}", *map(str, row)))
    else:
        labels = ("L^2", "L*M", "L*N", "M^2", "M*N", "N^2")
        rows = [("diagram", "in_span", *labels)]
        for r in im.quadratic_relation_table(seed=args.seed):
            coeffs = r["coefficients"] or {}
            rows.append((r["diagram"], str(r["in_span"]),
                         *(str(coeffs.get(lbl, "")) for lbl in labels)))
    _emit(_csv(rows), args.out)
    return 0


def cmd_network(args) -> int:
    if args.action == "build":
        if not args.diagram or not args.n:
            sys.stderr.write("network build needs --diagram and --n\n")
            return 2
        D = dg.parse_diagram_key(args.diagram, args.n)
        N = nw.construct_network_of_diagram(D)
        _emit(nw.network_to_json(N) + "\n", args.out)
        return 0
    if not args.file:
        sys.stderr.write(f"network {args.action} needs --file\n")
        return 2
    with open(args.file) as fh:
        N = nw.network_from_json(fh.read())
    if args.action == "check":
        round_trip = nw.network_from_json(nw.network_to_json(N))
        ok = nw.network_to_json(round_trip) == nw.network_to_json(N)
        _emit(f"valid network; round-trip {'stable' if ok else 'UNSTABLE'}\n", args.out)
        return 0 if ok else 1
    A = nw.path_weight_matrix(N)
    rows = [("i", "j", "entry")]
    for i in range(1, A.size + 1):
        for j in range(i + 1, A.size + 1):
            rows.append((str(i), str(j), A.upper(i, j).render()))
    _emit(_csv(rows), args.out)
    return 0


def cmd_cache(args) -> int:
    cdir = cache_mod.default_cache_dir()
    if args.action == "info":
        files = sorted(cdir.glob("f_n*.json")) if cdir.exists() else []
        _emit(f"cache dir: {cdir}\ntables: {len(files)}\n", args.out)
        return 0
    if args.action == "clear":
        removed = 0
        if cdir.exists():
            for f in cdir.glob("f_n*.json"):
                f.unlink()
                removed += 1
        cache_mod.clear_memory()
        _emit(f"removed {removed} tables\n", args.out)
        return 0
    n = args.n or 3
    count = 0
    for m in range(1, n + 1):
        for pi in dg.enumerate_matchings(m):
            cache_mod.f_table(pi, m, args.seed)
            count += 1
    _emit(f"warmed {count} tables up to n={n}\n", args.out)
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "scan": cmd_scan,
    "eval": cmd_eval,
    "table": cmd_table,
    "network": cmd_network,
    "cache": cmd_cache,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_mod.configure(cache_dir=getattr(args, "cache_dir", None),
                        enabled=not getattr(args, "no_cache", False))
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
