"""Paths, cycles, wheels, complete and complete bipartite graphs.

Labels follow the usual notation: wheels have hub ``v0`` and rim ``v1..vn``;
``K_{m,n}`` has parts ``v1..vm`` and ``u1..un``; every other family uses
``v1..vn``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

FAMILIES = ("path", "cycle", "wheel", "complete", "complete-bipartite")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    m: int | None = None

    def build(self) -> Graph:
        return generate(self)

    def as_dict(self) -> dict:
        out: dict = {"family": self.family, "n": self.n}
        if self.m is not None:
            out["m"] = self.m
        return out

    def __str__(self) -> str:
        if self.family == "complete-bipartite":
            return f"K_{{{self.m},{self.n}}}"
        letter = {"path": "P", "cycle": "C", "wheel": "W", "complete": "K"}[self.family]
        return f"{letter}_{self.n}"


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1 (got n={n})")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), tuple(f"v{i + 1}" for i in range(n)))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3 (got n={n})")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), tuple(f"v{i + 1}" for i in range(n)))


def wheel(n: int) -> Graph:
    """Wheel with rim size ``n``: hub 0 joined to the cycle 1..n."""
    _need(n >= 3, f"wheel needs rim size n >= 3 (got n={n})")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, tuple(edges), tuple(f"v{i}" for i in range(n + 1)))


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1 (got n={n})")
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Graph(n, edges, tuple(f"v{i + 1}" for i in range(n)))


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1, f"complete bipartite graph needs m >= 1 (got m={m})")
    _need(n >= 1, f"complete bipartite graph needs n >= 1 (got n={n})")
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    labels = tuple(f"v{i + 1}" for i in range(m)) + tuple(f"u{j + 1}" for j in range(n))
    return Graph(m + n, edges, labels)


def generate(spec: FamilySpec) -> Graph:
    if spec.family == "complete-bipartite":
        if spec.m is None:
            raise GraphError("complete-bipartite needs both m and n")
        return complete_bipartite(spec.m, spec.n)
    builders = {"path": path, "cycle": cycle, "wheel": wheel, "complete": complete}
    if spec.family not in builders:
        raise GraphError(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
    return builders[spec.family](spec.n)
