"""Exact solvers for independence, total domination, coloring and total dominator coloring.

Every result carries a witness that is re-checked before it is returned.
Mixed/total variants run the plain solver on the total graph and translate
the witness back to vertex and edge objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from ..graph import Graph, GraphError, TotalGraph, induced_subgraph, total_graph
from ..verify import Coloring, check_coloring
from .cliques import max_independent_set
from .coloring import exact_coloring
from .dominator import min_tdc
from .domination import all_min_total_dominating_sets, min_total_dominating_set
from .effort import Effort, SearchBudgetExceeded

__all__ = [
    "DominationUndefined",
    "MixedSet",
    "SearchBudgetExceeded",
    "SolveResult",
    "chromatic_number",
    "independence_number",
    "mixed_independence_number",
    "tdc_number",
    "tdtc_number",
    "tds_layered_coloring",
    "total_chromatic_number",
    "total_domination_number",
    "total_mixed_domination_number",
]


class DominationUndefined(GraphError):
    """Total domination needs every vertex to have a neighbour."""


@dataclass(frozen=True)
class MixedSet:
    base: Graph
    objects: frozenset

    def __post_init__(self) -> None:
        tg = total_graph(self.base)
        for obj in self.objects:
            if obj not in tg:
                raise GraphError(f"{obj!r} is not an object of the base graph")

    def __len__(self) -> int:
        return len(self.objects)


Witness = Union[frozenset, MixedSet, Coloring]


@dataclass(frozen=True)
class SolveResult:
    invariant: str
    value: int
    witness: Witness
    nodes: int
    verified: bool
    seconds: float = 0.0


def _require_no_isolated(g: Graph, invariant: str) -> None:
    if g.n == 0 or g.min_degree == 0:
        isolated = [g.label(v) for v in g.vertices() if g.degree(v) == 0]
        raise DominationUndefined(
            f"{invariant}: total domination undefined, isolated vertex {', '.join(isolated) or '(empty graph)'}"
        )


def _classes(colors: list[int]) -> list[list[int]]:
    k = max(colors, default=-1) + 1
    out: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(colors):
        out[c].append(v)
    return out


def _lift(tg: TotalGraph, coloring: Coloring) -> Coloring:
    return Coloring([tg.object_at(k) for k in cls] for cls in coloring.classes)


def _check(ok: bool, invariant: str) -> None:
    if not ok:
        raise RuntimeError(f"{invariant}: witness failed re-verification (solver bug)")


# ------------------------------------------------------------------ alpha


def independence_number(g: Graph, budget: int | None = None) -> SolveResult:
    effort = Effort("alpha", budget)
    best = max_independent_set(g.adj, g.n, effort)
    _check(g.is_independent(best), "alpha")
    return SolveResult("alpha", len(best), frozenset(best), effort.nodes, True, effort.seconds)


def mixed_independence_number(g: Graph, budget: int | None = None) -> SolveResult:
    tg = total_graph(g)
    res = independence_number(tg.graph, budget)
    objects = frozenset(tg.object_at(k) for k in res.witness)
    return SolveResult("alpha-mix", res.value, MixedSet(g, objects), res.nodes, res.verified, res.seconds)


# ----------------------------------------------------------------- gamma


def total_domination_number(g: Graph, budget: int | None = None) -> SolveResult:
    _require_no_isolated(g, "gamma-t")
    effort = Effort("gamma-t", budget)
    best = min_total_dominating_set(g.adj, g.n, effort)
    _check(g.is_total_dominating(best), "gamma-t")
    return SolveResult("gamma-t", len(best), frozenset(best), effort.nodes, True, effort.seconds)


def total_mixed_domination_number(g: Graph, budget: int | None = None) -> SolveResult:
    _require_no_isolated(g, "gamma-tm")
    tg = total_graph(g)
    res = total_domination_number(tg.graph, budget)
    objects = frozenset(tg.object_at(k) for k in res.witness)
    return SolveResult("gamma-tm", res.value, MixedSet(g, objects), res.nodes, res.verified, res.seconds)


# ------------------------------------------------------------------- chi


def chromatic_number(g: Graph, budget: int | None = None) -> SolveResult:
    effort = Effort("chi", budget)
    coloring = Coloring(_classes(exact_coloring(g.adj, g.n, effort)))
    _check(check_coloring(g, coloring, "proper").valid, "chi")
    return SolveResult("chi", coloring.size, coloring, effort.nodes, True, effort.seconds)


def total_chromatic_number(g: Graph, budget: int | None = None) -> SolveResult:
    tg = total_graph(g)
    res = chromatic_number(tg.graph, budget)
    coloring = _lift(tg, res.witness)
    _check(check_coloring(tg, coloring, "total").valid, "chi-t")
    return SolveResult("chi-t", res.value, coloring, res.nodes, True, res.seconds)


# ------------------------------------------------------- dominator colorings


def tdc_number(g: Graph, budget: int | None = None) -> SolveResult:
    _require_no_isolated(g, "chi-dt")
    effort = Effort("chi-dt", budget)
    coloring = Coloring(_classes(min_tdc(g.adj, g.n, effort)))
    _check(check_coloring(g, coloring, "tdc").valid, "chi-dt")
    return SolveResult("chi-dt", coloring.size, coloring, effort.nodes, True, effort.seconds)


def tdtc_number(g: Graph, budget: int | None = None) -> SolveResult:
    _require_no_isolated(g, "chi-dtt")
    tg = total_graph(g)
    res = tdc_number(tg.graph, budget)
    coloring = _lift(tg, res.witness)
    _check(check_coloring(tg, coloring, "tdtc").valid, "chi-dtt")
    return SolveResult("chi-dtt", res.value, coloring, res.nodes, True, res.seconds)


def _layer(g: Graph, s: list[int], effort: Effort) -> Coloring:
    rest, old = induced_subgraph(g, set(g.vertices()) - set(s))
    rest_classes = _classes(exact_coloring(rest.adj, rest.n, effort))
    return Coloring([[v] for v in s] + [[old[k] for k in cls] for cls in rest_classes])


def tds_layered_coloring(
    g: Graph, tds: Iterable[int] | None = None, minimize: bool = False, budget: int | None = None
) -> Coloring:
    """Singletons for a minimum total dominating set S, then an optimal coloring of G - S.

    ``tds`` names a particular minimum set (its minimality is checked against
    the exact solver).  Otherwise the solver's own minimum set is used, or,
    with ``minimize=True``, every minimum set is tried and the one whose
    remainder needs the fewest colors wins.  The result is always a total
    dominator coloring.
    """
    _require_no_isolated(g, "layered")
    gamma = total_domination_number(g, budget)
    effort = Effort("layered", budget)
    if tds is not None:
        s = sorted(set(tds))
        if not g.is_total_dominating(s):
            raise GraphError("given set is not a total dominating set")
        if len(s) != gamma.value:
            raise GraphError(f"given set has size {len(s)}, minimum is {gamma.value}")
        coloring = _layer(g, s, effort)
    elif minimize:
        coloring = None
        for s in all_min_total_dominating_sets(g.adj, g.n, gamma.value, effort):
            candidate = _layer(g, s, effort)
            if coloring is None or candidate.size < coloring.size:
                coloring = candidate
        assert coloring is not None
    else:
        coloring = _layer(g, sorted(gamma.witness), effort)
    _check(check_coloring(g, coloring, "tdc").valid, "layered")
    return coloring
