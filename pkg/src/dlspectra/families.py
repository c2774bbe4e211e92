"""Named graph families and their closed-form distance Laplacian spectra."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .eigen import Surd
from .graph import Graph, GraphError, from_edges, is_connected


@dataclass(frozen=True)
class PartiteSpec:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted((int(t) for t in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise ValueError("part sizes must be positive and nonempty")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Eigenvalue/multiplicity pairs, ascending, zero multiplicities dropped."""

    pairs: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> ClosedFormSpectrum:
        acc: Counter = Counter()
        for value, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                acc[Fraction(value)] += mult
        return cls(tuple(sorted(acc.items())))

    @property
    def order(self) -> int:
        return sum(k for _, k in self.pairs)

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.pairs)

    def values_descending(self) -> list[Fraction]:
        out = []
        for v, k in self.pairs:
            out.extend([v] * k)
        return sorted(out, reverse=True)


def _spec(parts) -> PartiteSpec:
    return parts if isinstance(parts, PartiteSpec) else PartiteSpec(tuple(parts))


# --- constructors -----------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """S_n on n vertices, centre 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return from_edges(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_multipartite(spec: PartiteSpec | Sequence[int]) -> Graph:
    spec = _spec(spec)
    if spec.k < 2:
        raise GraphError("complete multipartite graph needs at least two parts")
    label = []
    for idx, t in enumerate(spec.parts):
        label.extend([idx] * t)
    edges = [(u, v) for u, v in combinations(range(spec.n), 2) if label[u] != label[v]]
    return from_edges(spec.n, edges)


def complete_split(n: int, alpha: int) -> Graph:
    """SK_{n,alpha}: vertices 0..alpha-1 independent, the rest a clique, fully joined."""
    if not 1 <= alpha <= n - 1:
        raise GraphError(f"complete split graph needs 1 <= alpha <= n-1, got {alpha}")
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if not (u < alpha and v < alpha)
    ]
    return from_edges(n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """G o H; copy i of H occupies vertices n1 + i*n2 .. n1 + (i+1)*n2 - 1."""
    n1, n2 = g.n, h.n
    edges = list(g.edges())
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + u, base + v) for u, v in h.edges())
        edges.extend((i, base + u) for u in range(n2))
    return from_edges(n1 * (1 + n2), edges)


def is_corona_with_k1(g: Graph) -> bool:
    """True iff g is H o K_1 for some connected H.

    Searches perfect matchings between n/2 pendant vertices and their
    (distinct) neighbours, requiring the neighbour side to induce a
    connected graph.
    """
    n = g.n
    if n % 2 or not is_connected(g):
        return False
    half = n // 2
    pendants = [v for v in range(n) if g.degree(v) == 1]
    for chosen in combinations(pendants, half):
        anchors = [g.neighbors(v)[0] for v in chosen]
        if len(set(anchors)) != half or set(anchors) & set(chosen):
            continue
        if is_connected(g.induced(sorted(anchors))):
            return True
    return False


# --- closed-form spectra ----------------------------------------------------


def multipartite_spectrum(spec: PartiteSpec | Sequence[int]) -> ClosedFormSpectrum:
    spec = _spec(spec)
    if spec.k < 2:
        raise ValueError("multipartite spectrum needs at least two parts")
    n = spec.n
    pairs = [(n + t, t - 1) for t in spec.parts if t >= 2]
    pairs += [(n, spec.k - 1), (0, 1)]
    return ClosedFormSpectrum.from_pairs(pairs)


def complete_spectrum(n: int) -> ClosedFormSpectrum:
    return ClosedFormSpectrum.from_pairs([(0, 1), (n, n - 1)])


def star_spectrum(n: int) -> ClosedFormSpectrum:
    if n < 2:
        raise ValueError("star spectrum needs n >= 2")
    return ClosedFormSpectrum.from_pairs([(0, 1), (n, 1), (2 * n - 1, n - 2)])


def complete_split_spectrum(n: int, alpha: int) -> ClosedFormSpectrum:
    if not 1 <= alpha <= n - 1:
        raise ValueError("need 1 <= alpha <= n-1")
    return ClosedFormSpectrum.from_pairs([(0, 1), (n, n - alpha), (n + alpha, alpha - 1)])


def balanced_multipartite_spectrum(n: int, chi: int) -> ClosedFormSpectrum:
    if chi < 2 or n % chi:
        raise ValueError(f"need chi >= 2 dividing n, got n={n}, chi={chi}")
    return ClosedFormSpectrum.from_pairs([(0, 1), (n, chi - 1), (n + n // chi, n - chi)])


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def corona_laplacian_spectrum(mu: Sequence, n2: int, lam: Sequence) -> list:
    """Laplacian eigenvalues of G o H from those of G (``mu``) and H (``lam``).

    ``lam`` is H's full ascending spectrum; its first entry (the zero) is
    skipped. Rational inputs give :class:`Surd` values, anything else floats.
    """
    if len(lam) != n2:
        raise ValueError(f"H has {n2} vertices but {len(lam)} eigenvalues were given")
    if not mu:
        raise ValueError("G needs at least one eigenvalue")
    lam = sorted(lam)
    n1 = len(mu)
    exact = all(_exact(x) for x in list(mu) + list(lam))
    out: list = []
    for value in lam[1:]:
        item = Surd.rational(Fraction(value) + 1) if exact else float(value) + 1.0
        out.extend([item] * n1)
    for m in mu:
        if exact:
            m = Fraction(m)
            p, q = m.numerator, m.denominator
            a = p + (n2 + 1) * q
            disc = a * a - 4 * p * q
            out.append(Surd(a, 1, disc, 2 * q))
            out.append(Surd(a, -1, disc, 2 * q))
        else:
            s = float(m) + n2 + 1
            root = (s * s - 4 * float(m)) ** 0.5
            out.extend([(s + root) / 2, (s - root) / 2])
    return out
