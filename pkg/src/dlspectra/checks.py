"""Machine-checkable eigenvalue-distribution bounds.

Every check takes a :class:`GraphContext` and returns a :class:`CheckReport`.
Checks whose hypotheses fail report ``applicable=False`` instead of passing
vacuously. All interval endpoints are exact integers or rationals and all
counts come from the Sturm engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

from . import eigen
from .eigen import Interval, count_in_interval, multiplicity_at
from .families import is_corona_with_k1
from .graph import (
    Graph,
    apsp,
    complement,
    components,
    graph_params,
    has_balanced_optimal_colouring,
    is_connected,
    twin_pendant_classes,
)
from .matrices import char_poly, distance_laplacian, laplacian


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class CheckReport:
    check_id: str
    applicable: bool
    bound: Fraction | int | None = None
    attained: Fraction | int | None = None
    holds: bool = True
    equality: bool = False
    witness: str | None = None

    def as_dict(self) -> dict:
        def num(x):
            if x is None:
                return None
            x = Fraction(x)
            return int(x) if x.denominator == 1 else str(x)

        return {
            "check": self.check_id,
            "applicable": self.applicable,
            "bound": num(self.bound),
            "attained": num(self.attained),
            "holds": self.holds,
            "equality": self.equality,
            "witness": self.witness,
        }

    @property
    def falsified(self) -> bool:
        return self.applicable and not self.holds


@dataclass
class Query:
    matrix: str
    interval: Interval
    count: int


class GraphContext:
    """Lazily computed data about one connected graph, shared by all checks."""

    def __init__(self, g: Graph):
        if not is_connected(g):
            raise ValueError("checks need a connected graph")
        self.g = g
        self.n = g.n
        self.queries: list[Query] = []

    @cached_property
    def dist(self):
        return apsp(self.g)

    @cached_property
    def params(self):
        return graph_params(self.g)

    @cached_property
    def dl(self):
        return distance_laplacian(self.g)

    @cached_property
    def cp(self):
        return char_poly(self.dl)

    @cached_property
    def lap(self):
        return laplacian(self.g)

    @cached_property
    def lap_cp(self):
        return char_poly(self.lap)

    @cached_property
    def is_complete(self) -> bool:
        return self.g.m == self.n * (self.n - 1) // 2

    @cached_property
    def is_star(self) -> bool:
        n = self.n
        return n >= 2 and self.g.m == n - 1 and max(self.g.degrees()) == n - 1

    @cached_property
    def is_corona(self) -> bool:
        return is_corona_with_k1(self.g)

    @cached_property
    def balanced(self) -> bool:
        return has_balanced_optimal_colouring(self.g, self.params.chi)

    def count(self, lo, hi, lo_closed: bool, hi_closed: bool, matrix: str = "DL") -> int:
        """Exact eigenvalue count; an interval with lo > hi is empty."""
        if lo is not None and hi is not None and Fraction(lo) > Fraction(hi):
            return 0
        q = Interval(lo, hi, lo_closed, hi_closed)
        cp = self.cp if matrix == "DL" else self.lap_cp
        c = count_in_interval(cp, q)
        self.queries.append(Query(matrix, q, c))
        return c

    def mult(self, r, matrix: str = "DL") -> int:
        cp = self.cp if matrix == "DL" else self.lap_cp
        c = multiplicity_at(cp, r)
        self.queries.append(Query(matrix, Interval.closed(r, r), c))
        return c

    def shared_pendant_neighbour(self) -> int | None:
        """The common neighbour of all pendant vertices, if there is one."""
        pend = self.params.pendants
        if not pend:
            return None
        anchors = {self.g.neighbors(v)[0] for v in pend}
        if len(anchors) != 1:
            return None
        (w,) = anchors
        return None if w in pend else w


@dataclass(frozen=True)
class Check:
    check_id: str
    title: str
    hypothesis: str
    interval: str
    bound: str
    func: Callable[[GraphContext], CheckReport] = field(repr=False, compare=False)

    def catalog_entry(self) -> dict:
        return {
            "id": self.check_id,
            "title": self.title,
            "hypothesis": self.hypothesis,
            "interval": self.interval,
            "bound": self.bound,
        }


REGISTRY: list[Check] = []


def check(check_id: str, title: str, hypothesis: str, interval: str, bound: str):
    def deco(func):
        REGISTRY.append(Check(check_id, title, hypothesis, interval, bound, func))
        return func

    return deco


def _na(cid: str, why: str | None = None) -> CheckReport:
    return CheckReport(cid, applicable=False, holds=True, witness=why)


def _upper(cid: str, count: int, bound, witness: str | None = None) -> CheckReport:
    return CheckReport(cid, True, bound, count, count <= bound, count == bound, witness)


def _lower(cid: str, count: int, bound, witness: str | None = None) -> CheckReport:
    return CheckReport(cid, True, bound, count, count >= bound, count == bound, witness)


# --- chromatic number, pendants, complement components -------------------


@check("C1_gershgorin", "spectral radius at most twice the maximum transmission",
       "connected", "(2Tr_max, inf)", "count = 0")
def c1(ctx: GraphContext) -> CheckReport:
    bound = 2 * ctx.dist.tr_max
    above = ctx.count(bound, None, False, False)
    at = ctx.mult(bound)
    return CheckReport("C1_gershgorin", True, bound, above, above == 0, at > 0,
                       f"eigenvalues above {bound}: {above}")


@check("C2_fact1", "zero is simple and every other eigenvalue is at least n",
       "connected", "(-inf, n)", "only the simple eigenvalue 0")
def c2(ctx: GraphContext) -> CheckReport:
    n = ctx.n
    zero = ctx.mult(0)
    below = ctx.count(None, n, False, False)
    holds = zero == 1 and below == 1
    return CheckReport("C2_fact1", True, 1, below, holds, n >= 2 and ctx.mult(n) > 0)


@check("C3_complement_components", "multiplicity of n is one less than the complement's component count",
       "connected", "{n}", "C_comp - 1")
def c3(ctx: GraphContext) -> CheckReport:
    n = ctx.n
    k = ctx.params.complement_components
    mult = ctx.mult(n)
    holds = mult == k - 1
    if n >= 2:
        second_smallest_is_n = ctx.count(None, n, False, True) >= 2
        holds = holds and second_smallest_is_n == (k >= 2)
    return CheckReport("C3_complement_components", True, k - 1, mult, holds, holds)


@check("C6_chromatic_window", "few eigenvalues in [n, n+2)",
       "connected", "[n, n+2)", "chi - 1")
def c6(ctx: GraphContext) -> CheckReport:
    n, chi = ctx.n, ctx.params.chi
    return _upper("C6_chromatic_window", ctx.count(n, n + 2, True, False), chi - 1)


@check("C7_chromatic_tail", "many eigenvalues in [n+2, 2Tr_max]",
       "connected", "[n+2, 2Tr_max]", "n - chi")
def c7(ctx: GraphContext) -> CheckReport:
    n, chi = ctx.n, ctx.params.chi
    count = ctx.count(n + 2, 2 * ctx.dist.tr_max, True, True)
    return _lower("C7_chromatic_tail", count, n - chi)


def _is_balanced_complete_multipartite(ctx: GraphContext, chi: int) -> bool:
    comp = complement(ctx.g)
    parts = components(comp)
    if len(parts) != chi or len({len(p) for p in parts}) != 1:
        return False
    for part in parts:
        h = comp.induced(part)
        if h.m != h.n * (h.n - 1) // 2:
            return False
    return True


@check("C8_balanced_classes", "balanced colour classes: at most n-1 eigenvalues in [n, n+n/chi], equality only for the balanced complete multipartite graph",
       "some optimal colouring has all classes of size n/chi", "[n, n+n/chi]", "n - 1")
def c8(ctx: GraphContext) -> CheckReport:
    cid = "C8_balanced_classes"
    if not ctx.balanced:
        return _na(cid)
    n, chi = ctx.n, ctx.params.chi
    s = n // chi
    count = ctx.count(n, n + s, True, True)
    target = _is_balanced_complete_multipartite(ctx, chi)
    eq = count == n - 1
    holds = count <= n - 1 and eq == target
    witness = f"K_{{{','.join([str(s)] * chi)}}}" if target else None
    return CheckReport(cid, True, n - 1, count, holds, eq, witness)


@check("C9_ceil_window", "open window (n, n+ceil(n/chi)) bounded using complement components",
       "not complete", "(n, n+ceil(n/chi))", "n - ceil(n/chi) - C_comp + 1")
def c9(ctx: GraphContext) -> CheckReport:
    cid = "C9_ceil_window"
    if ctx.is_complete:
        return _na(cid, "complete graph")
    n, chi = ctx.n, ctx.params.chi
    c = _ceil_div(n, chi)
    bound = n - c - ctx.params.complement_components + 1
    return _upper(cid, ctx.count(n, n + c, False, False), bound)


@check("C10_ceil_tail", "at least ceil(n/chi)-1 eigenvalues from n+ceil(n/chi) up to the spectral radius",
       "not complete", "[n+ceil(n/chi), spectral radius]", "ceil(n/chi) - 1")
def c10(ctx: GraphContext) -> CheckReport:
    cid = "C10_ceil_tail"
    if ctx.is_complete:
        return _na(cid, "complete graph")
    n, chi = ctx.n, ctx.params.chi
    c = _ceil_div(n, chi)
    # nothing lies above the spectral radius, so the upper end may be +inf
    return _lower(cid, ctx.count(n + c, None, True, False), c - 1)


@check("C11_ceil_connected_complement", "open window bound when the complement is connected",
       "not complete, complement connected", "(n, n+ceil(n/chi))", "n - ceil(n/chi)")
def c11(ctx: GraphContext) -> CheckReport:
    cid = "C11_ceil_connected_complement"
    if ctx.is_complete or ctx.params.complement_components != 1:
        return _na(cid)
    n, chi = ctx.n, ctx.params.chi
    c = _ceil_div(n, chi)
    return _upper(cid, ctx.count(n, n + c, False, False), n - c)


@check("C12_pendant_window", "at most n-p eigenvalues in [n, n+p); equality at p=n-1 exactly for stars",
       "p >= 1, not complete", "[n, n+p)", "n - p")
def c12(ctx: GraphContext) -> CheckReport:
    cid = "C12_pendant_window"
    n, p = ctx.n, ctx.params.p
    if p < 1 or ctx.is_complete:
        return _na(cid)
    rep = _upper(cid, ctx.count(n, n + p, True, False), n - p)
    if p == n - 1:
        rep.holds = rep.holds and rep.equality and ctx.is_star
        rep.witness = "star"
    return rep


@check("C13_pendant_tail", "at least p-1 eigenvalues from n+p up to the spectral radius",
       "p >= 1, not complete", "[n+p, spectral radius]", "p - 1")
def c13(ctx: GraphContext) -> CheckReport:
    cid = "C13_pendant_tail"
    n, p = ctx.n, ctx.params.p
    if p < 1 or ctx.is_complete:
        return _na(cid)
    rep = _lower(cid, ctx.count(n + p, None, True, False), p - 1)
    if p == n - 1:
        rep.holds = rep.holds and rep.equality and ctx.is_star
        rep.witness = "star"
    return rep


@check("C14_twin_pendant_eigen", "a class of p twins forces Tr+2 with multiplicity at least p-1",
       "some vertices share an open neighbourhood", "{Tr(v)+2}", "class size - 1")
def c14(ctx: GraphContext) -> CheckReport:
    cid = "C14_twin_pendant_eigen"
    classes = twin_pendant_classes(ctx.g)
    if not classes:
        return _na(cid)
    worst = None
    notes = []
    for members, tr in classes:
        need = len(members) - 1
        got = ctx.mult(tr + 2)
        notes.append(f"{members}:Tr={tr},mult({tr + 2})={got}")
        if worst is None or got - need < worst[0] - worst[1]:
            worst = (got, need)
    got, need = worst
    return CheckReport(cid, True, need, got, got >= need, got == need, "; ".join(notes))


def _same_neighbour_hypothesis(ctx: GraphContext) -> bool:
    return ctx.shared_pendant_neighbour() is not None


@check("C15_same_neighbor_pendants", "pendants on one common neighbour, p >= n/2: at most n-chi eigenvalues in [n, 2n-1)",
       "n >= 4, p >= n/2, all pendants share one neighbour", "[n, 2n-1)", "n - chi")
def c15(ctx: GraphContext) -> CheckReport:
    cid = "C15_same_neighbor_pendants"
    n, p = ctx.n, ctx.params.p
    if n < 4 or 2 * p < n or not _same_neighbour_hypothesis(ctx):
        return _na(cid)
    return _upper(cid, ctx.count(n, 2 * n - 1, True, False), n - ctx.params.chi)


@check("C15b_same_neighbor_pendants_narrow", "variant of C15 on the narrower window [n, 2n-3)",
       "n >= 4, p >= n/2, all pendants share one neighbour", "[n, 2n-3)", "n - chi")
def c15b(ctx: GraphContext) -> CheckReport:
    cid = "C15b_same_neighbor_pendants_narrow"
    n, p = ctx.n, ctx.params.p
    if n < 4 or 2 * p < n or not _same_neighbour_hypothesis(ctx):
        return _na(cid)
    return _upper(cid, ctx.count(n, 2 * n - 3, True, False), n - ctx.params.chi)


@check("C16_same_neighbor_relaxed", "pendants on one common neighbour: at most n-p eigenvalues in [n, 2n-1)",
       "p >= 1, all pendants share one neighbour", "[n, 2n-1)", "n - p")
def c16(ctx: GraphContext) -> CheckReport:
    cid = "C16_same_neighbor_relaxed"
    if not _same_neighbour_hypothesis(ctx):
        return _na(cid)
    n, p = ctx.n, ctx.params.p
    return _upper(cid, ctx.count(n, 2 * n - 1, True, False), n - p)


# --- independence number, domination, diameter ---------------------------


@check("C17_independence_window", "at most n-alpha eigenvalues in [n, n+alpha)",
       "connected", "[n, n+alpha)", "n - alpha")
def c17(ctx: GraphContext) -> CheckReport:
    cid = "C17_independence_window"
    n, a = ctx.n, ctx.params.alpha
    rep = _upper(cid, ctx.count(n, n + a, True, False), n - a)
    if a == 1:
        rep.holds = rep.holds and rep.equality and ctx.is_complete
        rep.witness = "complete"
    elif a == n - 1:
        rep.holds = rep.holds and rep.equality and ctx.is_star
        rep.witness = "star"
    return rep


@check("C18_independence_tail", "alpha at most 1 plus the count in [n+alpha, 2Tr_max]",
       "connected", "[n+alpha, 2Tr_max]", "alpha - 1")
def c18(ctx: GraphContext) -> CheckReport:
    cid = "C18_independence_tail"
    n, a = ctx.n, ctx.params.alpha
    rep = _lower(cid, ctx.count(n + a, 2 * ctx.dist.tr_max, True, True), a - 1)
    if a == 1 or a == n - 1:
        rep.holds = rep.holds and rep.equality
    return rep


@check("C19_independence_open_window", "open window (n, n+alpha) bounded using complement components",
       "connected", "(n, n+alpha)", "n - alpha + 1 - C_comp")
def c19(ctx: GraphContext) -> CheckReport:
    cid = "C19_independence_open_window"
    n, a = ctx.n, ctx.params.alpha
    k = ctx.params.complement_components
    rep = _upper(cid, ctx.count(n, n + a, False, False), n - a + 1 - k)
    if a == 1 or a == n - 1:
        rep.holds = rep.holds and rep.equality
    return rep


@check("C20_diam2_window", "diameter at most 2: at most alpha-1 eigenvalues in (2n-1, 2n)",
       "diameter <= 2", "(2n-1, 2n)", "alpha - 1")
def c20(ctx: GraphContext) -> CheckReport:
    cid = "C20_diam2_window"
    if ctx.dist.diameter > 2:
        return _na(cid)
    n = ctx.n
    return _upper(cid, ctx.count(2 * n - 1, 2 * n, False, False), ctx.params.alpha - 1)


@check("C21_diam2_large_alpha", "diameter at most 2 and alpha > n/2: at most alpha-2 eigenvalues in (2n-1, 2n)",
       "n >= 2, diameter <= 2, alpha > n/2", "(2n-1, 2n)", "alpha - 2")
def c21(ctx: GraphContext) -> CheckReport:
    cid = "C21_diam2_large_alpha"
    n, a = ctx.n, ctx.params.alpha
    # K_1 would violate the bound (0 > -1); the domination fact it rests on needs n >= 2
    if n < 2 or ctx.dist.diameter > 2 or 2 * a <= n:
        return _na(cid)
    return _upper(cid, ctx.count(2 * n - 1, 2 * n, False, False), a - 2)


@check("C22_laplacian_domination", "Laplacian eigenvalues in [0, 1) at most the domination number",
       "any graph", "[0, 1) of L", "gamma")
def c22(ctx: GraphContext) -> CheckReport:
    return _upper("C22_laplacian_domination", ctx.count(0, 1, True, False, matrix="L"),
                  ctx.params.gamma)


def _corona_window(ctx: GraphContext) -> int:
    n = ctx.n
    return ctx.count(2 * n - 1, 2 * n, False, False)


@check("C23_corona_characterization", "diameter <= 2: count in (2n-1, 2n) equals alpha-1 = n/2-1 iff G = H o K_1",
       "diameter <= 2", "(2n-1, 2n)", "alpha - 1 = n/2 - 1")
def c23(ctx: GraphContext) -> CheckReport:
    cid = "C23_corona_characterization"
    if ctx.dist.diameter > 2:
        return _na(cid)
    n, a = ctx.n, ctx.params.alpha
    count = _corona_window(ctx)
    lhs = count == a - 1 and 2 * a == n
    rhs = ctx.is_corona
    return CheckReport(cid, True, a - 1, count, lhs == rhs, lhs,
                       "corona" if rhs else "not a corona")


@check("C24_corona_bipartite", "bipartite, diameter <= 2: count in (2n-1, 2n) equals alpha-1 iff G = H o K_1",
       "n >= 2, bipartite, diameter <= 2", "(2n-1, 2n)", "alpha - 1")
def c24(ctx: GraphContext) -> CheckReport:
    cid = "C24_corona_bipartite"
    # K_1 satisfies the count identity but is not a corona
    if ctx.n < 2 or ctx.dist.diameter > 2 or not ctx.params.is_bipartite:
        return _na(cid)
    a = ctx.params.alpha
    count = _corona_window(ctx)
    lhs = count == a - 1
    rhs = ctx.is_corona
    return CheckReport(cid, True, a - 1, count, lhs == rhs, lhs,
                       "corona" if rhs else "not a corona")


@check("C25_corona_remark", "bipartite, diameter <= 2, corona or count = alpha-1: alpha = n/2 with n even",
       "n >= 2, bipartite, diameter <= 2", "(2n-1, 2n)", "alpha = n/2")
def c25(ctx: GraphContext) -> CheckReport:
    cid = "C25_corona_remark"
    if ctx.n < 2 or ctx.dist.diameter > 2 or not ctx.params.is_bipartite:
        return _na(cid)
    n, a = ctx.n, ctx.params.alpha
    count = _corona_window(ctx)
    if not (ctx.is_corona or count == a - 1):
        return _na(cid, "neither condition met")
    ok = 2 * a == n
    return CheckReport(cid, True, Fraction(n, 2), a, ok, ok)


@check("C26_diameter_floor", "at least d+1 eigenvalues in [0, dn]",
       "connected", "[0, dn]", "d + 1")
def c26(ctx: GraphContext) -> CheckReport:
    d = ctx.dist.diameter
    return _lower("C26_diameter_floor", ctx.count(0, d * ctx.n, True, True), d + 1)


@check("C27_diameter_tail", "if dn < 2Tr_max, at most n-d-1 eigenvalues in (dn, 2Tr_max]",
       "dn < 2Tr_max", "(dn, 2Tr_max]", "n - d - 1")
def c27(ctx: GraphContext) -> CheckReport:
    cid = "C27_diameter_tail"
    d, n = ctx.dist.diameter, ctx.n
    top = 2 * ctx.dist.tr_max
    if d * n >= top:
        return _na(cid)
    return _upper(cid, ctx.count(d * n, top, False, True), n - d - 1)


CHECK_IDS = [c.check_id for c in REGISTRY]


def select(ids: list[str] | None = None) -> list[Check]:
    if not ids:
        return list(REGISTRY)
    by_id = {c.check_id: c for c in REGISTRY}
    out = []
    for raw in ids:
        matches = [c for cid, c in by_id.items() if cid == raw or cid.split("_")[0] == raw]
        if not matches:
            raise KeyError(f"unknown check {raw!r}")
        out.extend(m for m in matches if m not in out)
    return out


def run_all(g: Graph, checks: list[Check] | None = None,
            context: GraphContext | None = None) -> list[CheckReport]:
    ctx = context or GraphContext(g)
    return [c.func(ctx) for c in (checks or REGISTRY)]


def catalog() -> list[dict]:
    return [c.catalog_entry() for c in REGISTRY]


def numeric_disagreements(ctx: GraphContext) -> list[tuple[Query, int]]:
    """Logged exact queries whose snapped floating count differs."""
    dl_vals = eigen.eigenvalues_numeric(ctx.dl)
    lap_vals = None
    bad = []
    for q in ctx.queries:
        if q.matrix == "DL":
            vals = dl_vals
        else:
            if lap_vals is None:
                lap_vals = eigen.eigenvalues_numeric(ctx.lap)
            vals = lap_vals
        got = eigen.numeric_count(vals, q.interval)
        if got != q.count:
            bad.append((q, got))
    return bad
