"""Exact integer polynomials: gcd, Yun decomposition, Sturm counting.

Polynomials are lists of Python ints, highest degree first, with no
leading zeros (the zero polynomial is ``[]``). Rational points are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd
from typing import Sequence


def strip(p: Sequence[int]) -> list[int]:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return list(p[i:])


def degree(p: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(strip(p)) - 1


def derivative(p: Sequence[int]) -> list[int]:
    d = len(p) - 1
    return strip([c * (d - i) for i, c in enumerate(p[:-1])])


def sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    n = max(len(p), len(q))
    p = [0] * (n - len(p)) + list(p)
    q = [0] * (n - len(q)) + list(q)
    return strip([a - b for a, b in zip(p, q)])


def mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def power(p: Sequence[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = mul(out, p)
    return out


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    p = strip(p)
    if not p:
        return []
    c = content(p)
    if p[0] < 0:
        c = -c
    return [x // c for x in p]


def pseudo_rem(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """lc(g)**(deg f - deg g + 1) * f mod g, all in integers."""
    r = list(f)
    dg = degree(g)
    lc = g[0]
    steps = len(r) - dg
    for _ in range(max(steps, 0)):
        if len(r) - 1 < dg:
            r = [c * lc for c in r]
            continue
        lead = r[0]
        r = [c * lc for c in r]
        for j in range(len(g)):
            r[j] -= lead * g[j]
        r = r[1:]
    return strip(r)


def divexact(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Exact quotient f / g; g must divide f over the integers."""
    f = list(f)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = degree(g)
    if len(f) - 1 < dg:
        if strip(f):
            raise ArithmeticError("inexact polynomial division")
        return []
    q = []
    lc = g[0]
    while len(f) - 1 >= dg:
        lead, rem = divmod(f[0], lc)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q.append(lead)
        for j in range(len(g)):
            f[j] -= lead * g[j]
        f = f[1:]
    if strip(f):
        raise ArithmeticError("inexact polynomial division")
    return q


def poly_gcd(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    a, b = primitive(f), primitive(g)
    if not a:
        return b
    if not b:
        return a
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        a, b = b, primitive(pseudo_rem(a, b))
    return a


def monic(p: Sequence[int]) -> list[int]:
    # Monic factors of a monic integer polynomial have integer coefficients.
    p = primitive(p)
    if p and p[0] != 1:
        raise ArithmeticError("polynomial is not monic up to content")
    return p


def yun(f: Sequence[int]) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic polynomial: [(f_k, k)], deg f_k >= 1."""
    f = strip(f)
    if not f or f[0] != 1:
        raise ValueError("yun expects a monic polynomial")
    if degree(f) == 0:
        return []
    fp = derivative(f)
    a = monic(poly_gcd(f, fp))
    b = divexact(f, a)
    c = divexact(fp, a)
    d = sub(c, derivative(b))
    parts = []
    k = 1
    while degree(b) > 0:
        a = monic(poly_gcd(b, d)) if d else list(b)
        if degree(a) > 0:
            parts.append((a, k))
        b = divexact(b, a)
        c = divexact(d, a) if d else []
        d = sub(c, derivative(b))
        k += 1
    return parts


def eval_sign(p: Sequence[int], x: Fraction | int) -> int:
    """Sign of p(x) using integer arithmetic only."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # den > 0, so sign(p(x)) = sign(sum c_i num^(d-i) den^i)
    acc = 0
    for i, c in enumerate(p):
        acc = acc * num + c * den**i
    return (acc > 0) - (acc < 0)


def evaluate(p: Sequence[int], x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def sturm_chain(f: Sequence[int]) -> list[list[int]]:
    """Sturm sequence of f with positive rescalings only (signs preserved)."""
    f = strip(f)
    chain = [f]
    if degree(f) < 1:
        return chain
    chain.append(derivative(f))
    while True:
        a, b = chain[-2], chain[-1]
        if degree(b) < 1:
            break
        delta = degree(a) - degree(b) + 1
        r = pseudo_rem(a, b)
        if b[0] < 0 and delta % 2:
            r = [-c for c in r]
        if not r:
            break
        c = content(r)
        chain.append([-x // c for x in r])
    return chain


def _sign_at_inf(p: Sequence[int], positive: bool) -> int:
    s = (p[0] > 0) - (p[0] < 0)
    if not positive and degree(p) % 2:
        s = -s
    return s


def variations(chain: Sequence[Sequence[int]], x: Fraction | int | None, positive: bool = True) -> int:
    """Sign changes of the chain at x (x=None means +inf or -inf)."""
    if x is None:
        signs = [_sign_at_inf(p, positive) for p in chain if p]
    else:
        signs = [eval_sign(p, x) for p in chain if p]
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_open(chain: Sequence[Sequence[int]], lo, hi) -> int:
    """Distinct roots of a squarefree chain[0] strictly inside (lo, hi).

    ``lo``/``hi`` of ``None`` mean -inf/+inf.
    """
    f = chain[0]
    if lo is not None and hi is not None and lo >= hi:
        return 0
    v_lo = variations(chain, lo, positive=False)
    v_hi = variations(chain, hi, positive=True)
    n = v_lo - v_hi  # roots in (lo, hi]
    if hi is not None and eval_sign(f, hi) == 0:
        n -= 1
    return n


def cauchy_bound(p: Sequence[int]) -> int:
    """Integer B with every real root of p in (-B, B)."""
    p = strip(p)
    lc = abs(p[0])
    return 1 + max((abs(c) + lc - 1) // lc for c in p[1:]) if len(p) > 1 else 1


def isolate_real_roots(f: Sequence[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], one per distinct real root of f."""
    f = strip(f)
    if degree(f) > 1:
        # bisection needs a squarefree input
        f = divexact(f, poly_gcd(f, derivative(f)))
    chain = sturm_chain(f)
    if degree(f) < 1:
        return []
    b = cauchy_bound(f)
    out = []
    stack = [(Fraction(-b), Fraction(b))]
    while stack:
        a, c = stack.pop()
        k = variations(chain, a) - variations(chain, c)
        if k == 0:
            continue
        if k == 1 and c - a <= 1:
            out.append((a, c))
            continue
        mid = (a + c) / 2
        stack.append((mid, c))
        stack.append((a, mid))
    out.sort()
    return out


def rational_roots(f: Sequence[int]) -> list[Fraction]:
    """Rational roots of a monic squarefree f (all integers, by Gauss)."""
    if not f or f[0] != 1:
        raise ValueError("rational_roots expects a monic polynomial")
    roots = []
    for a, b in isolate_real_roots(f):
        for t in range(floor(a) + 1, floor(b) + 1):
            if eval_sign(f, t) == 0:
                roots.append(Fraction(t))
    return roots
