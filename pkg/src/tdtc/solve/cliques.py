"""Maximum clique by branch and bound with a greedy-coloring bound.

Maximum independent sets are maximum cliques of the complement.
"""

from __future__ import annotations

from typing import Sequence

from ..graph import iter_bits
from .effort import Effort


def _color_order(adj: Sequence[int], p: int) -> list[tuple[int, int]]:
    """Greedy sequential coloring of the vertices in ``p``, as (vertex, color) in color order."""
    out = []
    color = 0
    rest = p
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            rest &= ~low
            out.append((v, color))
    return out


def max_clique(adj: Sequence[int], n: int, effort: Effort) -> list[int]:
    best: list[int] = []

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        effort.tick()
        for v, bound in reversed(_color_order(adj, p)):
            if len(r) + bound <= len(best):
                return
            r.append(v)
            q = p & adj[v]
            if q:
                expand(r, q)
            elif len(r) > len(best):
                best = sorted(r)
            r.pop()
            p &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return best


def complement(adj: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return [full & ~a & ~(1 << v) for v, a in enumerate(adj)]


def max_independent_set(adj: Sequence[int], n: int, effort: Effort) -> list[int]:
    return max_clique(complement(adj, n), n, effort)


def greedy_clique(adj: Sequence[int], n: int) -> list[int]:
    """Best clique over greedy runs from every start vertex (highest degree first)."""
    deg = [a.bit_count() for a in adj]
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: (-deg[v], v)):
        clique = [start]
        cand = adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), deg[x], -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best
