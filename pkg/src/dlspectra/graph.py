"""Bitset graphs, distances and exact small-graph invariants.

A :class:`Graph` stores one integer per vertex whose bit ``j`` marks the
edge ``{i, j}``. Everything here is exact; the NP-hard invariants use
branch and bound and are meant for graphs of a few dozen vertices at most.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 64
MAX_CANON_ORDER = 10


class GraphError(ValueError):
    """Raised for malformed graphs or operations outside their domain."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in [1, {MAX_ORDER}], got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row >> i & 1:
                raise GraphError(f"row {i} has out-of-range bits or a self-loop")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @property
    def m(self) -> int:
        return sum(_popcount(r) for r in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of the vertices")
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertices renumbered in the order given."""
        index = {v: k for k, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return from_edges(len(vertices), edges)

    def without_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))


@dataclass(frozen=True)
class DistanceData:
    dist: tuple[tuple[int, ...], ...]
    tr: tuple[int, ...]
    diameter: int
    tr_max: int


@dataclass(frozen=True)
class GraphParams:
    n: int
    m: int
    alpha: int
    chi: int
    gamma: int
    pendants: tuple[int, ...]
    complement_components: int
    diameter: int
    is_bipartite: bool

    @property
    def p(self) -> int:
        return len(self.pendants)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "chi": self.chi,
            "gamma": self.gamma,
            "pendants": list(self.pendants),
            "p": self.p,
            "complement_components": self.complement_components,
            "diameter": self.diameter,
            "is_bipartite": self.is_bipartite,
        }


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in [1, {MAX_ORDER}], got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _component_masks(n: int, adj: Sequence[int]) -> list[int]:
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(_component_masks(g.n, g.adj)) == 1


def components(g: Graph) -> list[list[int]]:
    return [list(_bits(c)) for c in _component_masks(g.n, g.adj)]


def apsp(g: Graph) -> DistanceData:
    """Hop distances by one BFS per vertex."""
    n = g.n
    rows = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in _bits(g.adj[u]):
                if d[w] < 0:
                    d[w] = d[u] + 1
                    queue.append(w)
        if min(d) < 0:
            raise GraphError("graph is disconnected; distances undefined")
        rows.append(tuple(d))
    tr = tuple(sum(r) for r in rows)
    return DistanceData(
        dist=tuple(rows),
        tr=tr,
        diameter=max(max(r) for r in rows),
        tr_max=max(tr),
    )


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def complement_components(g: Graph) -> int:
    return len(_component_masks(g.n, complement(g).adj))


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in _bits(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


# --- independence / clique -------------------------------------------------


def _clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    # Each clique of G holds at most one vertex of an independent set.
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique_cand = cand & adj[v]
        cand &= ~(1 << v)
        while clique_cand:
            w = (clique_cand & -clique_cand).bit_length() - 1
            cand &= ~(1 << w)
            clique_cand &= adj[w]
        count += 1
    return count


def _max_independent_set(n: int, adj: Sequence[int]) -> int:
    """Bitmask of one maximum independent set."""
    closed = [adj[v] | 1 << v for v in range(n)]

    # greedy start: repeatedly take a minimum-degree vertex
    best = 0
    cand = (1 << n) - 1
    while cand:
        v = min(_bits(cand), key=lambda u: _popcount(adj[u] & cand))
        best |= 1 << v
        cand &= ~closed[v]
    best_size = _popcount(best)

    def expand(chosen: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + _popcount(cand) <= best_size:
            return
        if size + _clique_cover_bound(adj, cand) <= best_size:
            return
        v = max(_bits(cand), key=lambda u: _popcount(adj[u] & cand))
        expand(chosen | 1 << v, size + 1, cand & ~closed[v])
        expand(chosen, size, cand & ~(1 << v))

    expand(0, 0, (1 << n) - 1)
    return best


def independence_number(g: Graph) -> int:
    return _popcount(_max_independent_set(g.n, g.adj))


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


# --- colouring --------------------------------------------------------------


def _dsatur(g: Graph) -> list[int]:
    n = g.n
    colour = [-1] * n
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = {colour[w] for w in _bits(g.adj[v]) if colour[w] >= 0}
            key = (len(sat), g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        used = {colour[w] for w in _bits(g.adj[best_v]) if colour[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colour[best_v] = c
    return colour


def _colourings(g: Graph, k: int, cap: int | None = None):
    """Yield proper colourings with at most ``k`` colours.

    Colours are introduced in order (vertex order fixes symmetry). With
    ``cap`` every class holds at most ``cap`` vertices.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    colour = [-1] * n
    class_mask = [0] * k
    class_size = [0] * k

    def place(i: int, used: int):
        if i == n:
            yield list(colour)
            return
        v = order[i]
        for c in range(min(used + 1, k)):
            if class_mask[c] & g.adj[v]:
                continue
            if cap is not None and class_size[c] >= cap:
                continue
            colour[v] = c
            class_mask[c] |= 1 << v
            class_size[c] += 1
            yield from place(i + 1, max(used, c + 1))
            class_mask[c] &= ~(1 << v)
            class_size[c] -= 1
            colour[v] = -1

    yield from place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.m == 0:
        return 1
    lower = clique_number(g)
    upper = max(_dsatur(g)) + 1
    for k in range(lower, upper):
        if next(_colourings(g, k), None) is not None:
            return k
    return upper


def optimal_colouring(g: Graph) -> list[int]:
    k = chromatic_number(g)
    return next(_colourings(g, k))


def has_balanced_optimal_colouring(g: Graph, chi: int | None = None) -> bool:
    """True iff some proper ``chi(g)``-colouring has all classes of size n/chi."""
    if chi is None:
        chi = chromatic_number(g)
    if g.n % chi:
        return False
    return next(_colourings(g, chi, cap=g.n // chi), None) is not None


# --- domination -------------------------------------------------------------


def domination_number(g: Graph) -> int:
    n = g.n
    full = g.full_mask
    closed = [g.adj[v] | 1 << v for v in range(n)]
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            cover = 0
            for v in subset:
                cover |= closed[v]
            if cover == full:
                return k
    return n


# --- pendants and twins -----------------------------------------------------


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def twin_pendant_classes(g: Graph) -> list[tuple[list[int], int]]:
    """Groups (size >= 2) of vertices with identical open neighbourhoods.

    Equal open neighbourhoods force independence, so each group is an
    independent set; all members share one transmission.
    """
    dd = apsp(g)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    out = []
    for members in groups.values():
        if len(members) >= 2:
            out.append((members, dd.tr[members[0]]))
    out.sort(key=lambda item: item[0][0])
    return out


def graph_params(g: Graph) -> GraphParams:
    dd = apsp(g)
    return GraphParams(
        n=g.n,
        m=g.m,
        alpha=independence_number(g),
        chi=chromatic_number(g),
        gamma=domination_number(g),
        pendants=tuple(pendant_vertices(g)),
        complement_components=complement_components(g),
        diameter=dd.diameter,
        is_bipartite=is_bipartite(g),
    )


# --- canonical form ---------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells are bitmasks)."""
    while True:
        new_cells = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], int] = {}
            for v in _bits(cell):
                sig = tuple(_popcount(adj[v] & c) for c in cells)
                buckets[sig] = buckets.get(sig, 0) | 1 << v
            new_cells.extend(buckets[s] for s in sorted(buckets))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code_for_order(n: int, adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant byte encoding.

    Ordered partitions are refined from the trivial one (vertices end up
    sorted by degree first) and then individualised cell by cell; the
    result is the lexicographically smallest upper-triangle bit string over
    every labelling that the refinement tree admits.
    """
    n = g.n
    if n > MAX_CANON_ORDER:
        raise GraphError(f"canonical_code supports n <= {MAX_CANON_ORDER}")
    adj = g.adj
    best: int | None = None

    def search(cells: list[int]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c.bit_length() - 1 for c in cells]
            code = _code_for_order(n, adj, order)
            if best is None or code < best:
                best = code
            return
        idx = min(
            (i for i, c in enumerate(cells) if c & (c - 1)),
            key=lambda i: (_popcount(cells[i]), i),
        )
        target = cells[idx]
        for v in _bits(target):
            bit = 1 << v
            search(cells[:idx] + [bit, target & ~bit] + cells[idx + 1 :])

    search([g.full_mask])
    nbits = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((nbits + 7) // 8 or 1, "big")
