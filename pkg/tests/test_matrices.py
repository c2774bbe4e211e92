import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from dlspectra import families
from dlspectra.matrices import (
    CharPoly,
    IntSymMatrix,
    adjacency,
    bareiss_det,
    berkowitz,
    char_poly,
    distance_laplacian,
    distance_matrix,
    laplacian,
    principal_submatrix,
)

from helpers import all_connected, graphs


def random_sym(rng, n, lo=-9, hi=9):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return a


def test_distance_laplacian_p4():
    assert distance_laplacian(families.path(4)).tolist() == [
        [6, -1, -2, -3],
        [-1, 4, -1, -2],
        [-2, -1, 4, -1],
        [-3, -2, -1, 6],
    ]


def test_distance_laplacian_complete():
    m = distance_laplacian(families.complete(3)).tolist()
    assert m == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


def test_matrix_invariants_exhaustive():
    for g in all_connected(6):
        dl = distance_laplacian(g)
        assert all(s == 0 for s in dl.row_sums())
        lap = laplacian(g)
        assert all(s == 0 for s in lap.row_sums())
        d = distance_matrix(g).tolist()
        assert all(d[i][i] == 0 for i in range(g.n))
        a = adjacency(g).tolist()
        assert sum(map(sum, a)) == 2 * g.m


def test_symmetry_validation():
    with pytest.raises(ValueError):
        IntSymMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        IntSymMatrix.from_rows([[1, 2]])


@pytest.mark.parametrize("chi,s", [(3, 2), (3, 3), (4, 2)])
def test_principal_submatrix_deleted_edge(chi, s):
    # balanced multipartite minus an edge: rows of the two endpoints
    n = chi * s
    g = families.complete_multipartite([s] * chi).without_edge(0, s)
    sub = principal_submatrix(distance_laplacian(g), [s, 0])
    assert sub.tolist() == [[n + s - 1, -2], [-2, n + s - 1]]
    # eigenvalues n+s+1 and n+s-3
    assert list(char_poly(sub).coeffs) == [1, -2 * (n + s - 1), (n + s + 1) * (n + s - 3)]


def test_principal_submatrix_bipartite_deleted_edge():
    # with two parts the endpoints drift to distance 3
    g = families.complete_multipartite([3, 3]).without_edge(0, 3)
    assert principal_submatrix(distance_laplacian(g), [0, 3]).tolist() == [[9, -3], [-3, 9]]


@pytest.mark.parametrize("rows", [[], [0, 0], [5]])
def test_principal_submatrix_errors(rows):
    m = distance_laplacian(families.path(3))
    with pytest.raises(ValueError):
        principal_submatrix(m, rows)


def test_char_poly_examples():
    assert list(char_poly(distance_laplacian(families.complete(4))).coeffs) == [1, -12, 48, -64, 0]
    cp = char_poly(distance_laplacian(families.star(4)))
    # spectrum {0, 4, 7, 7}
    assert cp.reconstruct() == list(cp.coeffs)
    assert cp(7) == 0 and cp(4) == 0 and cp(0) == 0


def test_berkowitz_matches_sympy_random():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 7)
        a = random_sym(rng, n)
        ours = berkowitz(a)
        ref = sympy.Matrix(a).charpoly().all_coeffs()
        assert ours == [int(c) for c in ref]
        det = bareiss_det(a)
        assert det == int(sympy.Matrix(a).det())
        # det(-A) is the constant term of det(xI - A)
        assert ours[-1] == (-1) ** n * det


def test_bareiss_handles_zero_pivots():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [0, 0]]) == 0
    assert bareiss_det([[0, 2, 1], [2, 0, 3], [1, 3, 0]]) == 12


@given(graphs(min_n=1, max_n=9, connected=True))
@settings(max_examples=60, deadline=None)
def test_char_poly_roots_match_numpy(g):
    m = distance_laplacian(g)
    cp = char_poly(m)
    assert cp.degree == g.n
    assert cp.reconstruct() == list(cp.coeffs)
    vals = np.linalg.eigvalsh(np.array(m.tolist(), dtype=float))
    scale = max(1.0, float(np.max(np.abs(vals))))
    for v in vals:
        # each eigenvalue is a root, up to float error in evaluation
        assert abs(float(np.polyval([float(c) for c in cp.coeffs], v))) <= 1e-6 * scale ** g.n


def test_charpoly_from_coeffs_yun():
    cp = CharPoly.from_coeffs([1, -12, 48, -64, 0])  # x (x - 4)^3
    parts = {k: list(f) for f, k in cp.squarefree_parts}
    assert parts == {1: [1, 0], 3: [1, -4]}
