"""Small connected graph enumeration, exhaustive verification sweeps and
equality-case mining for the open characterisation problems."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from . import checks
from .checks import GraphContext
from .graph import Graph, GraphError, canonical_code
from .graph6 import decode, encode

MAX_BUILTIN_ORDER = 8
PROBLEMS = ("P1", "P2", "P3")


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[bytes, Graph] = {}
    # every connected graph has a non-cut vertex, so each class arises by
    # attaching a new vertex to a connected graph of order n-1
    for base in _connected_classes(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for v in range(n - 1):
                if nbrs >> v & 1:
                    adj[v] |= 1 << (n - 1)
            g = Graph(n, tuple(adj))
            code = canonical_code(g)
            if code not in found:
                found[code] = g
    return tuple(found[c] for c in sorted(found))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Each connected isomorphism class of order n once (builtin, n <= 8)."""
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise GraphError(
            f"builtin enumeration covers 1 <= n <= {MAX_BUILTIN_ORDER}; "
            "pipe larger orders in as graph6"
        )
    yield from _connected_classes(n)


@dataclass
class EnumerationCursor:
    """Counts what a graph source has emitted (builtin or external stream)."""

    n: int | None
    mode: str = "builtin"
    emitted: int = 0
    source: Iterable[Graph] | None = field(default=None, repr=False)

    def __iter__(self) -> Iterator[Graph]:
        if self.mode == "builtin":
            stream = enumerate_connected(self.n)
        elif self.source is not None:
            stream = self.source
        else:
            raise ValueError("external-stream mode needs a source")
        for g in stream:
            self.emitted += 1
            yield g


def builtin_range(n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)


# --- equality mining ----------------------------------------------------------


@dataclass
class EqualityFinding:
    problem_id: str
    graph6: str
    params: dict
    certificate: dict

    def as_json(self) -> dict:
        return {
            "problem": self.problem_id,
            "graph6": self.graph6,
            "n": self.params["n"],
            "alpha": self.params["alpha"],
            "chi": self.params["chi"],
            "gamma": self.params["gamma"],
            "diameter": self.params["diameter"],
            "counts": self.certificate,
        }


def problem_equality(problem_id: str, ctx: GraphContext) -> tuple[bool, dict]:
    """Whether ctx's graph attains the problem's equality, with the counts."""
    n = ctx.n
    prm = ctx.params
    if problem_id == "P1":
        count = ctx.count(n, n + prm.alpha, True, False)
        target = n - prm.alpha
        return count == target, {"interval": f"[{n},{n + prm.alpha})", "count": count, "target": target}
    if problem_id == "P2":
        count = ctx.count(n, n + 2, True, False)
        target = prm.chi - 1
        return count == target, {"interval": f"[{n},{n + 2})", "count": count, "target": target}
    if problem_id == "P3":
        count = ctx.count(2 * n - 1, 2 * n, False, False)
        target = prm.alpha - 1
        ok = count == target and 2 * prm.alpha == n
        return ok, {"interval": f"({2 * n - 1},{2 * n})", "count": count, "target": target}
    raise ValueError(f"unknown problem {problem_id!r}")


def _mine_one(args: tuple[str, str, int | None]) -> dict | None:
    problem_id, g6, diameter_min = args
    ctx = GraphContext(decode(g6))
    if diameter_min is not None and ctx.dist.diameter < diameter_min:
        return None
    ok, cert = problem_equality(problem_id, ctx)
    if not ok:
        return None
    return EqualityFinding(problem_id, g6, ctx.params.as_dict(), cert).as_json()


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("DLSPECTRA_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    return max(1, threads)


def _imap(func, items: list, threads: int) -> Iterator:
    """Ordered map, in-process or over a worker pool."""
    if threads <= 1 or len(items) < 2:
        for x in items:
            yield func(x)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(func, items, chunksize=max(1, len(items) // (threads * 8)))


def _finding_from_row(r: dict) -> EqualityFinding:
    return EqualityFinding(
        r["problem"], r["graph6"],
        {k: r[k] for k in ("n", "alpha", "chi", "gamma", "diameter")},
        r["counts"],
    )


def iter_equality_cases(
    problem_id: str,
    graphs: Iterable[Graph],
    diameter_min: int | None = None,
    threads: int | None = 1,
) -> Iterator[EqualityFinding]:
    """Stream findings in input order as they are found."""
    if problem_id not in PROBLEMS:
        raise ValueError(f"unknown problem {problem_id!r}")
    if diameter_min is None and problem_id == "P3":
        diameter_min = 3
    items = [(problem_id, encode(g), diameter_min) for g in graphs]
    for row in _imap(_mine_one, items, resolve_threads(threads)):
        if row:
            yield _finding_from_row(row)


def find_equality_cases(
    problem_id: str,
    graphs: Iterable[Graph] | None = None,
    n_range: tuple[int, int] | None = None,
    diameter_min: int | None = None,
    threads: int | None = 1,
) -> list[EqualityFinding]:
    """All graphs (from ``graphs`` or the builtin ``n_range``) attaining equality.

    Problem P3 defaults to diameter >= 3, the case the characterisation for
    diameter <= 2 leaves open.
    """
    if graphs is None:
        lo, hi = n_range or (1, 6)
        graphs = builtin_range(lo, hi)
    found = list(iter_equality_cases(problem_id, graphs, diameter_min, threads))
    found.sort(key=lambda f: (f.params["n"], f.graph6))
    return found


def reverify(finding: EqualityFinding) -> bool:
    ctx = GraphContext(decode(finding.graph6))
    ok, cert = problem_equality(finding.problem_id, ctx)
    return ok and cert == finding.certificate


# --- verification sweep ---------------------------------------------------------


def _verify_one(args: tuple[str, tuple[str, ...] | None, bool]) -> dict:
    g6, ids, numeric = args
    ctx = GraphContext(decode(g6))
    selected = checks.select(list(ids) if ids else None)
    reports = checks.run_all(ctx.g, selected, ctx)
    record = {
        "graph6": g6,
        "n": ctx.n,
        "results": {
            r.check_id: ("FAIL" if r.falsified else "eq" if r.applicable and r.equality
                         else "ok" if r.applicable else "na")
            for r in reports
        },
        "falsified": [r.check_id for r in reports if r.falsified],
    }
    if numeric:
        bad = checks.numeric_disagreements(ctx)
        record["engine_mismatches"] = [
            {"matrix": q.matrix, "interval": str(q.interval), "exact": q.count, "numeric": got}
            for q, got in bad
        ]
    return record


def verify_graphs(
    graphs: Iterable[Graph],
    check_ids: list[str] | None = None,
    threads: int | None = 1,
    numeric: bool = True,
) -> list[dict]:
    """Run the check registry over many graphs; records sorted by (n, graph6)."""
    ids = tuple(check_ids) if check_ids else None
    if ids:
        checks.select(list(ids))  # fail fast on unknown ids
    items = [(encode(g), ids, numeric) for g in graphs]
    records = list(_imap(_verify_one, items, resolve_threads(threads)))
    records.sort(key=lambda r: (r["n"], r["graph6"]))
    return records
