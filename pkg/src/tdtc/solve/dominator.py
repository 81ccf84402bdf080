"""Exact total dominator coloring.

For ``k`` rising from a greedy clique size, an exhaustive DSATUR-ordered
backtracking asks for a proper ``k``-coloring in which every vertex is
adjacent to every member of some class.  Colors are opened in order (class
``c`` is nonempty for every ``c < used``) and the greedy clique is
precolored, which removes color permutations.

Pruning after each assignment, for every vertex ``x``:

* a nonempty class that already has a member outside ``N(x)`` can never be
  dominated by ``x``;
* if no current class fits inside ``N(x)``, ``x`` needs a fresh class drawn
  from its uncolored neighbours.  Vertices whose uncolored neighbourhoods
  are pairwise disjoint need distinct fresh classes, so a disjoint packing
  of those sets bounds the number of colors still required.
"""

from __future__ import annotations

from typing import Sequence

from ..graph import iter_bits
from .cliques import greedy_clique
from .effort import Effort


class _Search:
    def __init__(self, adj: Sequence[int], n: int, k: int, effort: Effort):
        self.adj = adj
        self.n = n
        self.k = k
        self.effort = effort
        self.deg = [a.bit_count() for a in adj]
        self.color = [-1] * n
        self.masks = [0] * k

    def feasible(self, used: int, uncolored: int) -> bool:
        adj, masks = self.adj, self.masks
        fresh: list[int] = []
        for x in range(self.n):
            nx = adj[x]
            for c in range(used):
                if not masks[c] & ~nx:
                    break
            else:
                pool = nx & uncolored
                if not pool or used == self.k:
                    return False
                fresh.append(pool)
        if len(fresh) > 1:
            fresh.sort(key=lambda p: (p.bit_count(), p))
            taken = 0
            need = 0
            for pool in fresh:
                if not pool & taken:
                    taken |= pool
                    need += 1
                    if used + need > self.k:
                        return False
        return True

    def pick(self, used: int, uncolored: int) -> tuple[int, int]:
        adj, masks, deg = self.adj, self.masks, self.deg
        best_key = None
        choice = (-1, 0)
        for v in iter_bits(uncolored):
            forb = 0
            for c in range(used):
                if masks[c] & adj[v]:
                    forb |= 1 << c
            sat = forb.bit_count()
            if sat == used and used == self.k:
                return v, forb
            key = (sat, deg[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                choice = (v, forb)
        return choice

    def run(self, used: int, uncolored: int) -> bool:
        self.effort.tick()
        if not uncolored:
            return True
        v, forb = self.pick(used, uncolored)
        bit = 1 << v
        rest = uncolored & ~bit
        top = min(used + 1, self.k)
        for c in range(top):
            if forb >> c & 1:
                continue
            self.color[v] = c
            self.masks[c] |= bit
            nxt = max(used, c + 1)
            if self.feasible(nxt, rest) and self.run(nxt, rest):
                return True
            self.masks[c] &= ~bit
            self.color[v] = -1
        return False


def k_tdc(adj: Sequence[int], n: int, k: int, clique: Sequence[int], effort: Effort) -> list[int] | None:
    """A total dominator coloring with at most ``k`` colors, or None if none exists."""
    if len(clique) > k:
        return None
    s = _Search(adj, n, k, effort)
    uncolored = (1 << n) - 1
    for c, v in enumerate(clique):
        s.color[v] = c
        s.masks[c] |= 1 << v
        uncolored &= ~(1 << v)
    used = len(clique)
    if not s.feasible(used, uncolored):
        return None
    if s.run(used, uncolored):
        return s.color
    return None


def min_tdc(adj: Sequence[int], n: int, effort: Effort) -> list[int]:
    """Color list of a minimum total dominator coloring (graph must have no isolated vertex)."""
    clique = greedy_clique(adj, n)
    for k in range(max(len(clique), 1), n + 1):
        found = k_tdc(adj, n, k, clique, effort)
        if found is not None:
            return found
    raise AssertionError("the all-singletons coloring is always a total dominator coloring")
