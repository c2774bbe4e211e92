"""Command-line interface.

Exit codes: 0 everything holds, 1 usage or I/O error, 2 a check was
falsified.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Sequence

from . import checks, families
from .checks import GraphContext
from .eigen import eigenvalues_numeric, rational_spectrum
from .graph import Graph, GraphError, is_connected
from .graph6 import Graph6Error, decode, encode, read_stream
from .search import (
    builtin_range,
    iter_equality_cases,
    resolve_threads,
    verify_graphs,
)

log = logging.getLogger("dlspectra")

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


FAMILIES = {
    "complete": (1, lambda a: families.complete(a[0])),
    "star": (1, lambda a: families.star(a[0])),
    "path": (1, lambda a: families.path(a[0])),
    "cycle": (1, lambda a: families.cycle(a[0])),
    "split": (2, lambda a: families.complete_split(a[0], a[1])),
    "multipartite": (None, lambda a: families.complete_multipartite(a)),
    "balanced": (2, lambda a: _balanced(a[0], a[1])),
}


def _balanced(n: int, chi: int) -> Graph:
    if chi < 2 or n % chi:
        raise GraphError(f"balanced family needs chi >= 2 dividing n, got n={n}, chi={chi}")
    return families.complete_multipartite([n // chi] * chi)


def family_graph(spec: Sequence[str]) -> Graph:
    name, *raw = spec
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    arity, build = FAMILIES[name]
    try:
        args = [int(x) for x in raw]
    except ValueError as exc:
        raise UsageError(f"family arguments must be integers: {raw}") from exc
    if arity is not None and len(args) != arity:
        raise UsageError(f"family {name!r} takes {arity} integer argument(s)")
    return build(args)


def _num(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


def run_record(g: Graph) -> dict:
    """Self-contained record: graph6, parameters, spectra and all checks."""
    ctx = GraphContext(g)
    reports = checks.run_all(g, context=ctx)
    values = eigenvalues_numeric(ctx.dl)
    return {
        "graph6": encode(g),
        "params": ctx.params.as_dict(),
        "spectrum": [float(f"{v:.12g}") + 0.0 for v in values],
        "exact_eigenvalues": [
            {"value": _num(r), "multiplicity": k}
            for r, k in sorted(rational_spectrum(ctx.cp), reverse=True)
        ],
        "charpoly": list(ctx.cp.coeffs),
        "checks": [r.as_dict() for r in reports],
    }


@contextmanager
def _output(path: str | None, mode: str = "w") -> Iterator:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, mode, encoding="utf-8") as fh:
            yield fh


def _write_csv(fh, header: list[str], rows: list[list]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        g = decode(args.g6)
    elif args.family:
        g = family_graph(args.family)
    else:
        raise UsageError("give --g6 STRING or --family NAME ARGS")
    if not is_connected(g):
        raise UsageError("graph is disconnected; distance spectra need a connected graph")
    return g


def _graph_source(args) -> list[Graph]:
    if args.g6_stream:
        try:
            if args.g6_stream == "-":
                return list(read_stream(sys.stdin, skip=args.skip))
            with open(args.g6_stream, encoding="ascii") as fh:
                return list(read_stream(fh, skip=args.skip))
        except OSError as exc:
            raise UsageError(f"cannot read graph6 stream: {exc}") from exc
    if args.n_max is None:
        raise UsageError("give --n-max K or --g6-stream FILE")
    graphs = list(builtin_range(args.n_min, args.n_max))
    return graphs[args.skip :]


def cmd_spectrum(args) -> int:
    g = _load_graph(args)
    rec = run_record(g)
    with _output(args.out) as fh:
        if args.format == "csv":
            exact = {Fraction(e["value"]): e["multiplicity"] for e in rec["exact_eigenvalues"]}
            rows = []
            for i, v in enumerate(rec["spectrum"], 1):
                near = [r for r in exact if abs(float(r) - v) < 1e-6]
                rows.append([i, repr(v), _num(near[0]) if near else ""])
            _write_csv(fh, ["index", "eigenvalue", "exact"], rows)
        else:
            json.dump(rec, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_params(args) -> int:
    g = _load_graph(args)
    params = GraphContext(g).params.as_dict()
    params["graph6"] = encode(g)
    with _output(args.out) as fh:
        if args.format == "csv":
            _write_csv(fh, ["key", "value"], [[k, json.dumps(v)] for k, v in params.items()])
        else:
            json.dump(params, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = [c for c in args.checks.split(",") if c] if args.checks else None
    try:
        if ids:
            checks.select(ids)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    graphs = _graph_source(args)
    disconnected = [encode(g) for g in graphs if not is_connected(g)]
    if disconnected:
        raise UsageError(f"stream contains disconnected graphs, e.g. {disconnected[0]}")
    records = verify_graphs(graphs, ids, threads=resolve_threads(args.threads),
                            numeric=not args.no_numeric)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    falsified = [(r["graph6"], c) for r in records for c in r["falsified"]]
    mismatches = [(r["graph6"], m) for r in records for m in r.get("engine_mismatches", [])]
    per_check: dict[str, dict[str, int]] = {}
    for r in records:
        for cid, status in r["results"].items():
            bucket = per_check.setdefault(cid, {"ok": 0, "eq": 0, "na": 0, "FAIL": 0})
            bucket[status] += 1
    summary = {
        "graphs": len(records),
        "falsifications": [{"graph6": g6, "check": c} for g6, c in falsified],
        "engine_mismatches": [{"graph6": g6, **m} for g6, m in mismatches],
        "per_check": per_check,
    }
    json.dump(summary, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    for g6, c in falsified:
        log.error("falsified %s on %s", c, g6)
    return EXIT_FALSIFIED if falsified else EXIT_OK


def cmd_search(args) -> int:
    graphs = _graph_source(args)
    threads = resolve_threads(args.threads)
    mode = "a" if args.out else "w"
    count = 0
    with _output(args.out, mode) as fh:
        try:
            for f in iter_equality_cases(args.problem, graphs, args.diameter_min, threads):
                fh.write(json.dumps(f.as_json(), sort_keys=True) + "\n")
                fh.flush()
                count += 1
        except KeyboardInterrupt:
            fh.flush()
            log.warning("interrupted after %d findings", count)
            return 130
    log.info("%d findings", count)
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = checks.catalog()
    with _output(args.out) as fh:
        if args.format == "csv":
            keys = ["id", "title", "hypothesis", "interval", "bound"]
            _write_csv(fh, keys, [[e[k] for k in keys] for e in cat])
        else:
            json.dump(cat, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dlspectra",
        description="Exact distance Laplacian eigenvalue distribution checks.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out", metavar="FILE")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $DLSPECTRA_THREADS or CPU count)")

    for name, func in (("spectrum", cmd_spectrum), ("params", cmd_params)):
        sp = sub.add_parser(name)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--g6", metavar="STRING")
        src.add_argument("--family", nargs="+", metavar="ARG",
                         help=f"NAME ARGS; names: {', '.join(FAMILIES)}")
        common(sp)
        sp.set_defaults(func=func)

    def source(sp):
        sp.add_argument("--n-max", type=int)
        sp.add_argument("--n-min", type=int, default=1)
        sp.add_argument("--g6-stream", metavar="FILE", help="graph6 lines ('-' for stdin)")
        sp.add_argument("--skip", type=int, default=0,
                        help="skip the first K input graphs (resume a scan)")

    sp = sub.add_parser("verify")
    source(sp)
    sp.add_argument("--checks", metavar="LIST", help="comma-separated check ids")
    sp.add_argument("--no-numeric", action="store_true",
                    help="skip the floating-point cross-check")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search")
    sp.add_argument("--problem", choices=["P1", "P2", "P3"], required=True)
    source(sp)
    sp.add_argument("--diameter-min", type=int, default=None)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("catalog")
    common(sp)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, GraphError, Graph6Error, ValueError, OSError) as exc:
        print(f"dlspectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
