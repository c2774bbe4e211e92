"""Integer matrices of a graph and their exact characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import poly
from .graph import Graph, apsp


@dataclass(frozen=True)
class IntSymMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntSymMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]


@dataclass(frozen=True)
class CharPoly:
    """Monic det(xI - M) with its Yun squarefree decomposition.

    ``coeffs`` runs from the leading 1 down to the constant term.
    """

    coeffs: tuple[int, ...]
    squarefree_parts: tuple[tuple[tuple[int, ...], int], ...] = field(default=())

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> CharPoly:
        coeffs = poly.strip(coeffs)
        parts = tuple((tuple(f), k) for f, k in poly.yun(coeffs))
        return cls(tuple(coeffs), parts)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reconstruct(self) -> list[int]:
        out = [1]
        for f, k in self.squarefree_parts:
            out = poly.mul(out, poly.power(f, k))
        return out

    def __call__(self, x):
        return poly.evaluate(self.coeffs, x)


def distance_matrix(g: Graph) -> IntSymMatrix:
    return IntSymMatrix(apsp(g).dist)


def distance_laplacian(g: Graph) -> IntSymMatrix:
    """Diag(Tr) - D for a connected graph."""
    dd = apsp(g)
    n = g.n
    rows = []
    for i in range(n):
        rows.append(tuple(dd.tr[i] if i == j else -dd.dist[i][j] for j in range(n)))
    return IntSymMatrix(tuple(rows))


def laplacian(g: Graph) -> IntSymMatrix:
    n = g.n
    rows = []
    for i in range(n):
        rows.append(
            tuple(g.degree(i) if i == j else -int(g.has_edge(i, j)) for j in range(n))
        )
    return IntSymMatrix(tuple(rows))


def adjacency(g: Graph) -> IntSymMatrix:
    return IntSymMatrix(
        tuple(tuple(int(g.has_edge(i, j)) for j in range(g.n)) for i in range(g.n))
    )


def principal_submatrix(m: IntSymMatrix, rows: Sequence[int]) -> IntSymMatrix:
    rows = list(rows)
    if not rows:
        raise ValueError("principal submatrix needs at least one index")
    if len(set(rows)) != len(rows):
        raise ValueError("duplicate indices in principal submatrix")
    for r in rows:
        if not 0 <= r < m.order:
            raise ValueError(f"index {r} out of range for order {m.order}")
    rows = sorted(rows)
    return IntSymMatrix(tuple(tuple(m.entries[i][j] for j in rows) for i in rows))


def berkowitz(a: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(xI - A), highest first, without division.

    Each step multiplies the running vector by the lower-triangular
    Toeplitz matrix built from the next leading principal block.
    """
    n = len(a)
    vect = [1]
    for k in range(n):
        akk = a[k][k]
        row = [a[k][j] for j in range(k)]
        col = [a[i][k] for i in range(k)]
        # toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^(k-1) C
        t = [1, -akk]
        w = col
        for _ in range(k):
            t.append(-sum(r * x for r, x in zip(row, w)))
            w = [sum(a[i][j] * w[j] for j in range(k)) for i in range(k)]
        new = []
        for i in range(k + 2):
            new.append(sum(t[i - j] * vect[j] for j in range(min(i, k) + 1)))
        vect = new
    return vect


def char_poly(m: IntSymMatrix) -> CharPoly:
    if m.order > 64:
        raise ValueError("char_poly supports order <= 64")
    return CharPoly.from_coeffs(berkowitz(m.entries))


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]

