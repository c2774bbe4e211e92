from itertools import combinations
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from dlspectra import families
from dlspectra.graph import (
    Graph,
    GraphError,
    apsp,
    canonical_code,
    chromatic_number,
    complement,
    complement_components,
    domination_number,
    from_edges,
    graph_params,
    has_balanced_optimal_colouring,
    independence_number,
    is_bipartite,
    is_connected,
    optimal_colouring,
    pendant_vertices,
    twin_pendant_classes,
)

from helpers import all_connected, graphs


# --- brute-force oracles --------------------------------------------------


def brute_alpha(g):
    for k in range(g.n, 0, -1):
        for s in combinations(range(g.n), k):
            if not any(g.has_edge(u, v) for u, v in combinations(s, 2)):
                return k
    return 0


def brute_chi(g):
    for k in range(1, g.n + 1):
        for col in _assignments(g.n, k):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    return 0


def _assignments(n, k):
    if n == 0:
        yield ()
        return
    for rest in _assignments(n - 1, k):
        for c in range(k):
            yield rest + (c,)


def brute_gamma(g):
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            covered = set(s)
            for v in s:
                covered.update(g.neighbors(v))
            if len(covered) == g.n:
                return k
    return 0


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# --- construction ---------------------------------------------------------


def test_from_edges_basic():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        from_edges(4, edges)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_order_limit():
    with pytest.raises(GraphError):
        from_edges(65, [])


def test_connectivity_examples():
    assert is_connected(families.path(5))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, (0,)))
    # C_5 is self-complementary
    c5 = families.cycle(5)
    assert is_connected(complement(c5))
    assert canonical_code(complement(c5)) == canonical_code(c5)


# --- distances ------------------------------------------------------------


def test_apsp_path():
    d = apsp(families.path(4))
    assert d.dist[0] == (0, 1, 2, 3)
    assert d.tr == (6, 4, 4, 6)
    assert d.diameter == 3
    assert d.tr_max == 6


def test_apsp_complete_and_star():
    assert apsp(families.complete(5)).tr == (4,) * 5
    d = apsp(families.star(5))
    assert d.tr == (4, 7, 7, 7, 7)
    assert d.diameter == 2


def test_apsp_disconnected_raises():
    with pytest.raises(GraphError):
        apsp(from_edges(3, [(0, 1)]))


def test_apsp_matches_networkx_and_triangle_inequality():
    for g in all_connected(6):
        d = apsp(g)
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.n):
            for v in range(g.n):
                assert d.dist[u][v] == ref[u][v] == d.dist[v][u]
                for w in range(g.n):
                    assert d.dist[u][v] <= d.dist[u][w] + d.dist[w][v]


# --- complement -----------------------------------------------------------


def test_complement_components_examples():
    assert complement_components(families.complete_multipartite([2, 2])) == 2
    for n in range(3, 9):
        g = families.complete_multipartite([2] + [1] * (n - 2))
        assert complement_components(g) == n - 1
    assert complement_components(families.path(4)) == 1


def test_complete_split_complement_is_clique_plus_isolated():
    comp = complement(families.complete_split(5, 2))
    assert comp.m == 1
    assert complement_components(families.complete_split(5, 2)) == 4


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


# --- invariants -----------------------------------------------------------


def test_invariant_examples():
    pet = nx.petersen_graph()
    g = from_edges(10, pet.edges())
    assert (independence_number(g), chromatic_number(g), domination_number(g)) == (4, 3, 3)
    c5 = families.cycle(5)
    assert (independence_number(c5), chromatic_number(c5), domination_number(c5)) == (2, 3, 2)
    s = families.star(6)
    assert (independence_number(s), chromatic_number(s), domination_number(s)) == (5, 2, 1)
    k = families.complete(4)
    assert (independence_number(k), chromatic_number(k), domination_number(k)) == (1, 4, 1)
    assert domination_number(families.path(6)) == 2


def test_invariants_match_brute_force_exhaustively():
    for g in all_connected(6):
        assert independence_number(g) == brute_alpha(g)
        assert chromatic_number(g) == brute_chi(g)
        assert domination_number(g) == brute_gamma(g)


@given(graphs(min_n=1, max_n=10))
@settings(max_examples=80, deadline=None)
def test_invariant_relations(g):
    a, chi, gam = independence_number(g), chromatic_number(g), domination_number(g)
    assert a * chi >= g.n
    col = optimal_colouring(g)
    assert len(set(col)) == chi
    assert all(col[u] != col[v] for u, v in g.edges())
    if is_connected(g) and g.n >= 2:
        assert gam <= a
        assert gam <= g.n // 2


@given(graphs(min_n=3, max_n=9, connected=True))
@settings(max_examples=80, deadline=None)
def test_p_equals_n_minus_one_iff_star(g):
    star_like = g.m == g.n - 1 and max(g.degrees()) == g.n - 1
    assert (len(pendant_vertices(g)) == g.n - 1) == star_like


def test_bipartite():
    assert is_bipartite(families.cycle(6))
    assert not is_bipartite(families.cycle(5))
    for g in all_connected(6):
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_balanced_colouring():
    assert has_balanced_optimal_colouring(families.cycle(6))
    assert has_balanced_optimal_colouring(families.complete(4))
    assert not has_balanced_optimal_colouring(families.cycle(5))
    assert not has_balanced_optimal_colouring(families.star(4))
    assert has_balanced_optimal_colouring(families.complete_multipartite([3, 3, 3]))


def test_twin_pendant_classes():
    g = families.star(5)
    assert twin_pendant_classes(g) == [([1, 2, 3, 4], 7)]
    assert twin_pendant_classes(families.path(5)) == []


def test_graph_params_star():
    prm = graph_params(families.star(5))
    assert (prm.n, prm.m, prm.alpha, prm.chi, prm.gamma, prm.p) == (5, 4, 4, 2, 1, 4)
    assert prm.complement_components == 2
    assert prm.diameter == 2 and prm.is_bipartite


# --- canonical form -------------------------------------------------------


def test_canonical_code_examples():
    p4 = families.path(4)
    assert canonical_code(p4.relabel([2, 0, 3, 1])) == canonical_code(p4)
    assert canonical_code(families.star(4)) != canonical_code(p4)


def test_canonical_code_exhaustive_small_orders():
    # code equality must coincide with isomorphism on every labelled graph
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        seen: dict[bytes, nx.Graph] = {}
        for mask in range(1 << len(pairs)):
            g = from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
            code = canonical_code(g)
            if code in seen:
                assert nx.is_isomorphic(seen[code], to_nx(g))
            else:
                for other in seen.values():
                    assert not nx.is_isomorphic(other, to_nx(g))
                seen[code] = to_nx(g)


def test_canonical_code_relabel_invariance_random():
    rng = random.Random(7)
    for g in all_connected(7)[::25] + [families.cycle(9), families.complete_split(9, 4)]:
        base = canonical_code(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_code(g.relabel(perm)) == base


@given(graphs(min_n=1, max_n=8), graphs(min_n=1, max_n=8))
@settings(max_examples=150, deadline=None)
def test_canonical_code_iff_isomorphic(g, h):
    same = canonical_code(g) == canonical_code(h)
    assert same == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_relabel_is_permutation_only():
    g = families.path(3)
    assert g.relabel([0, 1, 2]) == g
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1])
