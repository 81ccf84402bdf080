"""Minimum total dominating set by branch and bound.

Branching picks the undominated vertex with the fewest remaining candidate
dominators and tries each candidate in turn, excluding the ones already
tried.  The bound packs the largest coverages until everything left is hit.
"""

from __future__ import annotations

from typing import Sequence

from ..graph import iter_bits
from .effort import Effort


def _greedy(adj: Sequence[int], n: int) -> list[int]:
    undominated = (1 << n) - 1
    chosen: list[int] = []
    while undominated:
        w = max(range(n), key=lambda x: ((adj[x] & undominated).bit_count(), -x))
        chosen.append(w)
        undominated &= ~adj[w]
    return chosen


def _cover_bound(adj: Sequence[int], undominated: int, allowed: int) -> int:
    need = undominated.bit_count()
    covers = sorted(((adj[w] & undominated).bit_count() for w in iter_bits(allowed)), reverse=True)
    for k, c in enumerate(covers, start=1):
        if c == 0:
            break
        need -= c
        if need <= 0:
            return k
    return 1 << 30


def min_total_dominating_set(adj: Sequence[int], n: int, effort: Effort) -> list[int]:
    """Requires every vertex to have a neighbour."""
    full = (1 << n) - 1
    best = sorted(_greedy(adj, n))

    def search(chosen: list[int], chosen_mask: int, undominated: int, excluded: int) -> None:
        nonlocal best
        effort.tick()
        if not undominated:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        allowed = full & ~excluded & ~chosen_mask
        if len(chosen) + _cover_bound(adj, undominated, allowed) >= len(best):
            return
        u = min(iter_bits(undominated), key=lambda x: ((adj[x] & allowed).bit_count(), x))
        cands = adj[u] & allowed
        order = sorted(iter_bits(cands), key=lambda w: (-(adj[w] & undominated).bit_count(), w))
        for w in order:
            chosen.append(w)
            search(chosen, chosen_mask | 1 << w, undominated & ~adj[w], excluded)
            chosen.pop()
            excluded |= 1 << w

    search([], 0, full, 0)
    return best


def all_min_total_dominating_sets(adj: Sequence[int], n: int, size: int, effort: Effort) -> list[list[int]]:
    """Every total dominating set of exactly ``size`` vertices, where ``size`` is the minimum."""
    full = (1 << n) - 1
    found: list[list[int]] = []

    def search(chosen: list[int], chosen_mask: int, undominated: int, excluded: int) -> None:
        effort.tick()
        if not undominated:
            found.append(sorted(chosen))
            return
        allowed = full & ~excluded & ~chosen_mask
        if len(chosen) + _cover_bound(adj, undominated, allowed) > size:
            return
        u = min(iter_bits(undominated), key=lambda x: ((adj[x] & allowed).bit_count(), x))
        for w in iter_bits(adj[u] & allowed):
            chosen.append(w)
            search(chosen, chosen_mask | 1 << w, undominated & ~adj[w], excluded)
            chosen.pop()
            excluded |= 1 << w

    search([], 0, full, 0)
    return sorted(found)
