from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from hypothesis import strategies as st

from dlspectra.graph import Graph, from_edges, is_connected
from dlspectra.search import enumerate_connected


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_connected(n))


def all_connected(n_max: int, n_min: int = 1) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(connected_graphs(n))
    return out


# criterion number -> "criterion N: PASS|FAIL ..." line, printed at session end
ACCEPTANCE: dict[int, str] = {}


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
    if connected:
        # join components along a path of representatives
        if not is_connected(g):
            from dlspectra.graph import components

            reps = [c[0] for c in components(g)]
            g = from_edges(n, g.edges() + list(zip(reps, reps[1:])))
    return g


# --- numeric oracles shared with the acceptance suite ----------------------

import numpy as np

from dlspectra.eigen import Interval, count_in_interval
from dlspectra.graph import apsp
from dlspectra.matrices import char_poly, distance_laplacian, laplacian, principal_submatrix

TOL = 1e-8


def eig(m) -> np.ndarray:
    """Descending eigenvalues of an IntSymMatrix via LAPACK."""
    return np.linalg.eigvalsh(np.array(m.tolist(), dtype=float))[::-1]


def interlacing_holds(g, rows, tol: float = TOL) -> bool:
    m = distance_laplacian(g)
    full = eig(m)
    sub = eig(principal_submatrix(m, rows))
    n, s = g.n, len(rows)
    return all(
        full[i] + tol >= sub[i] >= full[i + n - s] - tol for i in range(s)
    )


def edge_deletion_dominates(g, u, v, tol: float = TOL) -> bool:
    """Deleting uv (keeping g connected) raises every eigenvalue weakly."""
    h = g.without_edge(u, v)
    before, after = eig(distance_laplacian(g)), eig(distance_laplacian(h))
    if not np.all(after >= before - tol):
        return False
    # exact form: at each integer t at least as many eigenvalues sit in [t, inf)
    cg, ch = char_poly(distance_laplacian(g)), char_poly(distance_laplacian(h))
    top = 2 * apsp(h).tr_max + 1
    return all(
        count_in_interval(ch, Interval(t, None)) >= count_in_interval(cg, Interval(t, None))
        for t in range(top + 1)
    )


def diameter2_transform_error(g) -> float:
    """Max deviation between {2n - mu_i} u {0} and the D^L spectrum."""
    n = g.n
    mu = eig(laplacian(g))[: n - 1]
    predicted = np.sort(np.concatenate([2 * n - mu, [0.0]]))[::-1]
    return float(np.max(np.abs(predicted - eig(distance_laplacian(g)))))
