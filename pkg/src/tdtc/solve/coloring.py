"""Exact vertex coloring: DSATUR branch and bound seeded with a maximum clique."""

from __future__ import annotations

from typing import Sequence

from ..graph import iter_bits
from .cliques import max_clique
from .effort import Effort


class _Done(Exception):
    pass


def _pick(adj: Sequence[int], deg: Sequence[int], masks: Sequence[int], uncolored: int) -> tuple[int, int]:
    """DSATUR choice: max saturation, then max degree, then lowest id. Returns (vertex, forbidden)."""
    best_key = None
    choice = (-1, 0)
    for v in iter_bits(uncolored):
        forb = 0
        for c, mask in enumerate(masks):
            if mask & adj[v]:
                forb |= 1 << c
        key = (forb.bit_count(), deg[v], -v)
        if best_key is None or key > best_key:
            best_key = key
            choice = (v, forb)
    return choice


def dsatur(adj: Sequence[int], n: int) -> list[int]:
    deg = [a.bit_count() for a in adj]
    color = [-1] * n
    masks: list[int] = []
    uncolored = (1 << n) - 1
    while uncolored:
        v, forb = _pick(adj, deg, masks, uncolored)
        c = next(c for c in range(len(masks) + 1) if not forb >> c & 1)
        if c == len(masks):
            masks.append(0)
        masks[c] |= 1 << v
        color[v] = c
        uncolored &= ~(1 << v)
    return color


def exact_coloring(adj: Sequence[int], n: int, effort: Effort) -> list[int]:
    """Color list (0-based colors) using the minimum number of colors."""
    if n == 0:
        return []
    clique = max_clique(adj, n, effort)
    lower = len(clique)
    best = dsatur(adj, n)
    best_k = max(best) + 1
    if best_k == lower:
        return best

    deg = [a.bit_count() for a in adj]
    color = [-1] * n
    masks = [0] * n
    for c, v in enumerate(clique):
        color[v] = c
        masks[c] = 1 << v
    start_uncolored = ((1 << n) - 1) & ~sum(1 << v for v in clique)

    def search(used: int, uncolored: int) -> None:
        nonlocal best, best_k
        effort.tick()
        if not uncolored:
            best, best_k = color.copy(), used
            if best_k == lower:
                raise _Done
            return
        v, forb = _pick(adj, deg, masks[:used], uncolored)
        bit = 1 << v
        for c in range(used + 1):
            if c >= best_k - 1:
                break
            if forb >> c & 1:
                continue
            color[v] = c
            masks[c] |= bit
            search(max(used, c + 1), uncolored & ~bit)
            masks[c] &= ~bit
            color[v] = -1

    try:
        search(lower, start_uncolored)
    except _Done:
        pass
    return best
