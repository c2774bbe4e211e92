"""Eigenvalues two ways: Jacobi rotations in floating point, and exact
interval counts from Sturm sequences of the squarefree parts.

The exact counts are authoritative. Floating spectra are for display and
for cross-checking the exact path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import poly
from .graph import Graph, apsp
from .matrices import CharPoly, IntSymMatrix, char_poly, distance_laplacian

SNAP_TOL = 1e-6


class ConvergenceError(RuntimeError):
    pass


Number = Fraction | int


def _frac(x) -> Fraction | None:
    return None if x is None else Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Real interval with exact endpoints; ``None`` is an infinite end."""

    lo: Fraction | None
    hi: Fraction | None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo is None:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"malformed interval: {self.lo} > {self.hi}")

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi) -> Interval:
        return cls(lo, hi, False, False)

    @classmethod
    def closed_open(cls, lo, hi) -> Interval:
        return cls(lo, hi, True, False)

    @classmethod
    def open_closed(cls, lo, hi) -> Interval:
        return cls(lo, hi, False, True)

    @classmethod
    def parse(cls, text: str) -> Interval:
        """Parse notation such as ``[4,6)``, ``(9,10)`` or ``[8,inf)``."""
        text = text.strip()
        if len(text) < 5 or text[0] not in "[(" or text[-1] not in "])":
            raise ValueError(f"cannot parse interval {text!r}")
        lo_s, sep, hi_s = text[1:-1].partition(",")
        if not sep:
            raise ValueError(f"cannot parse interval {text!r}")

        def end(s: str):
            s = s.strip()
            if s.lstrip("+-") in ("inf", "oo"):
                return None
            return Fraction(s)

        return cls(end(lo_s), end(hi_s), text[0] == "[", text[-1] == "]")

    def contains(self, x) -> bool:
        if self.lo is not None:
            if x < self.lo or (x == self.lo and not self.lo_closed):
                return False
        if self.hi is not None:
            if x > self.hi or (x == self.hi and not self.hi_closed):
                return False
        return True

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{'[' if self.lo_closed else '('}{lo},{hi}{']' if self.hi_closed else ')'}"


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    exact_rational_roots: tuple[tuple[Fraction, int], ...]


# --- numeric engine ---------------------------------------------------------


def jacobi_eigenvalues(
    a: Sequence[Sequence[float]], tol: float = 1e-10, max_sweeps: int = 60
) -> list[float]:
    """Cyclic Jacobi on a symmetric matrix, eigenvalues sorted descending."""
    m = np.array(a, dtype=float)
    n = m.shape[0]
    scale = np.linalg.norm(m) or 1.0
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(m - np.diag(np.diag(m))))
        if off <= tol * scale:
            return sorted(np.diag(m).tolist(), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = m[:, p].copy()
                col_q = m[:, q].copy()
                m[:, p] = c * col_p - s * col_q
                m[:, q] = s * col_p + c * col_q
                row_p = m[p, :].copy()
                row_q = m[q, :].copy()
                m[p, :] = c * row_p - s * row_q
                m[q, :] = s * row_p + c * row_q
                m[p, q] = m[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def eigenvalues_numeric(m: IntSymMatrix) -> tuple[float, ...]:
    if m.order > 64:
        raise ValueError("numeric eigensolver supports order <= 64")
    return tuple(jacobi_eigenvalues(m.entries))


def numeric_count(values: Iterable[float], q: Interval, snap: float = SNAP_TOL) -> int:
    """Count values in q; a value within ``snap`` of an endpoint sits on it."""
    total = 0
    for v in values:
        near_lo = q.lo is not None and abs(v - float(q.lo)) <= snap
        near_hi = q.hi is not None and abs(v - float(q.hi)) <= snap
        if near_lo and near_hi:
            total += q.lo_closed and q.hi_closed
        elif near_lo:
            total += q.lo_closed
        elif near_hi:
            total += q.hi_closed
        elif (q.lo is None or v > q.lo) and (q.hi is None or v < q.hi):
            total += 1
    return total


# --- exact engine -----------------------------------------------------------


@lru_cache(maxsize=8192)
def _chain(f: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(p) for p in poly.sturm_chain(f))


def count_in_interval(p: CharPoly, q: Interval) -> int:
    """Roots of p in q, counted with multiplicity."""
    if q.lo is not None and q.lo == q.hi and not (q.lo_closed and q.hi_closed):
        return 0
    total = 0
    for f, k in p.squarefree_parts:
        inside = poly.count_open(_chain(f), q.lo, q.hi)
        if q.lo_closed and poly.eval_sign(f, q.lo) == 0:
            inside += 1
        if q.hi_closed and q.hi != q.lo and poly.eval_sign(f, q.hi) == 0:
            inside += 1
        total += k * inside
    return total


def multiplicity_at(p: CharPoly, r: Number) -> int:
    for f, k in p.squarefree_parts:
        if poly.eval_sign(f, r) == 0:
            return k
    return 0


def rational_spectrum(p: CharPoly) -> list[tuple[Fraction, int]]:
    """Rational roots with exact multiplicities, ascending."""
    out = []
    for f, k in p.squarefree_parts:
        out.extend((r, k) for r in poly.rational_roots(f))
    out.sort()
    return out


def spectrum(m: IntSymMatrix, cp: CharPoly | None = None) -> Spectrum:
    cp = cp or char_poly(m)
    return Spectrum(eigenvalues_numeric(m), tuple(rational_spectrum(cp)))


def spectral_radius_bound(g: Graph, cp: CharPoly | None = None) -> tuple[int, bool]:
    """(2 Tr_max, whether no distance Laplacian eigenvalue exceeds it)."""
    bound = 2 * apsp(g).tr_max
    cp = cp or char_poly(distance_laplacian(g))
    return bound, count_in_interval(cp, Interval(bound, None, False, False)) == 0


# --- quadratic surds --------------------------------------------------------


def _isqrt_exact(c: int) -> int | None:
    r = math.isqrt(c)
    return r if r * r == c else None


@dataclass(frozen=True)
class Surd:
    """The real number (a + b*sqrt(c)) / d with integers, c >= 0, d > 0."""

    a: int
    b: int
    c: int
    d: int = 1

    def __post_init__(self) -> None:
        if self.c < 0 or self.d <= 0:
            raise ValueError("need c >= 0 and d > 0")

    @classmethod
    def rational(cls, x: Number) -> Surd:
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    def is_rational(self) -> bool:
        return self.b == 0 or self.c == 0 or _isqrt_exact(self.c) is not None

    def as_fraction(self) -> Fraction:
        root = 0 if self.b == 0 else _isqrt_exact(self.c)
        if root is None:
            raise ValueError("irrational surd")
        return Fraction(self.a + self.b * root, self.d)

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.c)) / self.d

    def sign_minus(self, q: Number) -> int:
        """Exact sign of self - q."""
        q = Fraction(q)
        # (a - d q) + b sqrt(c), scaled by q's denominator to stay integral
        lhs = (self.a * q.denominator - self.d * q.numerator)
        b = self.b * q.denominator
        s1 = (lhs > 0) - (lhs < 0)
        s2 = ((b > 0) - (b < 0)) if self.c else 0
        if s2 == 0:
            return s1
        if s1 == 0 or s1 == s2:
            return s2
        diff = lhs * lhs - b * b * self.c
        if diff == 0:
            return 0
        return s1 if diff > 0 else s2

    def in_interval(self, q: Interval) -> bool:
        if q.lo is not None:
            s = self.sign_minus(q.lo)
            if s < 0 or (s == 0 and not q.lo_closed):
                return False
        if q.hi is not None:
            s = self.sign_minus(q.hi)
            if s > 0 or (s == 0 and not q.hi_closed):
                return False
        return True

    def __str__(self) -> str:
        if self.b == 0 or self.c == 0:
            return str(Fraction(self.a, self.d))
        sign = "+" if self.b > 0 else "-"
        return f"({self.a} {sign} {abs(self.b)}*sqrt({self.c}))/{self.d}"


def count_surds(values: Iterable[Surd], q: Interval) -> int:
    return sum(1 for v in values if v.in_interval(q))
