"""Exact isomorphism test for small graphs by backtracking."""

from __future__ import annotations

from .graph import Graph, GraphError, iter_bits

MAX_ORDER = 64


def _signature(g: Graph, v: int) -> tuple[int, tuple[int, ...]]:
    return g.degree(v), tuple(sorted(g.degree(u) for u in iter_bits(g.adj[v])))


def _search_order(g: Graph) -> list[int]:
    # Connected-first order: each next vertex maximises links to already placed ones.
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = max(remaining, key=lambda x: ((g.adj[x] & placed).bit_count(), g.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def are_isomorphic(g: Graph, h: Graph) -> tuple[bool, dict[int, int] | None]:
    """Return ``(True, mapping)`` with ``mapping[v_g] = v_h`` or ``(False, None)``."""
    for x in (g, h):
        if x.n > MAX_ORDER:
            raise GraphError(f"isomorphism test is capped at order {MAX_ORDER} (got {x.n})")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False, None
    sig_g = [_signature(g, v) for v in range(g.n)]
    sig_h = [_signature(h, v) for v in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return False, None

    order = _search_order(g)
    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if used >> w & 1 or sig_h[w] != sig_g[v]:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, mapping[u]) for u in order[:k]):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    if extend(0):
        return True, dict(mapping)
    return False, None
