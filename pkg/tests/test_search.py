from itertools import combinations

import networkx as nx
import pytest

from dlspectra import families
from dlspectra.checks import GraphContext
from dlspectra.graph import (
    GraphError,
    canonical_code,
    complement,
    components,
    from_edges,
    is_connected,
)
from dlspectra.graph6 import decode, encode
from dlspectra.search import (
    EnumerationCursor,
    EqualityFinding,
    builtin_range,
    enumerate_connected,
    find_equality_cases,
    problem_equality,
    resolve_threads,
    reverify,
    verify_graphs,
)

from helpers import connected_graphs


def labelled_oracle_count(n):
    """Connected classes by brute force over all labelled graphs and networkx."""
    pairs = list(combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for mask in range(1 << len(pairs)):
        g = from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
        if not is_connected(g):
            continue
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(n))
        if not any(nx.faster_could_be_isomorphic(h, r) and nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return len(reps)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_class_counts(n, count):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == count
    assert len({canonical_code(g) for g in graphs}) == count
    assert all(is_connected(g) and g.n == n for g in graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_counts_against_labelled_oracle(n):
    assert labelled_oracle_count(n) == len(connected_graphs(n))


def test_enumeration_bounds():
    with pytest.raises(GraphError):
        list(enumerate_connected(0))
    with pytest.raises(GraphError):
        list(enumerate_connected(9))


def test_enumeration_is_deterministic():
    first = [encode(g) for g in builtin_range(1, 6)]
    assert first == [encode(g) for g in builtin_range(1, 6)]
    assert len(first) == 143


def test_cursor_counts_emitted():
    cur = EnumerationCursor(4)
    assert len(list(cur)) == 6 and cur.emitted == 6
    ext = EnumerationCursor(None, mode="external", source=[families.path(3)])
    assert list(ext) == [families.path(3)] and ext.emitted == 1
    with pytest.raises(ValueError):
        list(EnumerationCursor(None, mode="external"))


def test_problem_equality_p1_p2_examples():
    ok, cert = problem_equality("P2", GraphContext(families.cycle(4)))
    assert ok and cert["count"] == 1 and cert["target"] == 1
    ok, _ = problem_equality("P1", GraphContext(families.complete_split(6, 3)))
    assert ok
    with pytest.raises(ValueError):
        problem_equality("P9", GraphContext(families.path(2)))


def test_p2_contains_every_complete_multipartite_class():
    found = {f.graph6 for f in find_equality_cases("P2", n_range=(1, 6))}
    codes = {canonical_code(decode(g6)) for g6 in found}
    for n in range(2, 7):
        for g in connected_graphs(n):
            # complete multipartite iff the complement is a disjoint union of cliques
            comp = complement(g)
            if all(comp.induced(c).m == len(c) * (len(c) - 1) // 2 for c in components(comp)):
                assert canonical_code(g) in codes, encode(g)


def test_p3_defaults_to_diameter_three():
    found = find_equality_cases("P3", n_range=(1, 7))
    assert all(f.params["diameter"] >= 3 for f in found)
    assert all(f.params["n"] == 2 * f.params["alpha"] for f in found)
    everything = find_equality_cases("P3", n_range=(1, 5), diameter_min=0)
    assert any(f.graph6 == encode(families.complete(2)) for f in everything)


def test_findings_reverify_and_are_sorted():
    found = find_equality_cases("P1", n_range=(1, 6))
    assert found
    assert [(f.params["n"], f.graph6) for f in found] == sorted((f.params["n"], f.graph6) for f in found)
    assert all(reverify(f) for f in found)
    forged = EqualityFinding("P1", encode(families.path(5)), found[0].params, found[0].certificate)
    assert not reverify(forged)


def test_find_equality_cases_threads_agree():
    a = [f.as_json() for f in find_equality_cases("P2", n_range=(1, 6), threads=1)]
    b = [f.as_json() for f in find_equality_cases("P2", n_range=(1, 6), threads=2)]
    assert a == b


def test_verify_graphs_records():
    recs = verify_graphs(builtin_range(1, 5), threads=1)
    assert len(recs) == 1 + 1 + 2 + 6 + 21
    assert all(not r["falsified"] and not r["engine_mismatches"] for r in recs)
    assert [(r["n"], r["graph6"]) for r in recs] == sorted((r["n"], r["graph6"]) for r in recs)
    sub = verify_graphs([families.star(5)], ["C12", "C13"], numeric=False)
    assert set(sub[0]["results"]) == {"C12_pendant_window", "C13_pendant_tail"}
    assert "engine_mismatches" not in sub[0]
    with pytest.raises(KeyError):
        verify_graphs([families.star(5)], ["nope"])


def test_resolve_threads(monkeypatch):
    monkeypatch.setenv("DLSPECTRA_THREADS", "3")
    assert resolve_threads(None) == 3
    assert resolve_threads(2) == 2
    assert resolve_threads(0) == 1
    monkeypatch.delenv("DLSPECTRA_THREADS")
    assert resolve_threads(None) >= 1
