"""Undirected simple graphs over dense 0-based ids, and the operators built on them.

Adjacency is stored as one Python int per vertex (a bitmask of neighbours);
every search in the package works on those masks directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union


class GraphError(ValueError):
    """Raised for malformed graphs and out-of-range operator arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        canon = set()
        adj = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "adj", tuple(adj))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("label count must equal vertex count")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def label(self, v: int) -> str:
        if self.labels is None:
            return f"v{v + 1}"
        return self.labels[v]

    def relabeled(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.edges, tuple(labels))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        return all(not (self.adj[v] & s) for v in iter_bits(s))

    def is_total_dominating(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        return all(a & s for a in self.adj)


# ---------------------------------------------------------------- objects


@dataclass(frozen=True)
class VertexObj:
    i: int


@dataclass(frozen=True)
class EdgeObj:
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise GraphError("an edge object needs two distinct endpoints")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)


ObjectId = Union[VertexObj, EdgeObj]

_NUMBER = re.compile(r"^[A-Za-z_]*(\d+)$")


def label_number(label: str) -> str:
    """Index part of a display label: 'v12' -> '12', 'u3' -> '3'."""
    match = _NUMBER.match(label)
    return match.group(1) if match else label


def edge_label(a: str, b: str) -> str:
    x, y = label_number(a), label_number(b)
    if len(x) == 1 and len(y) == 1:
        return f"e_{x}{y}"
    return f"e_{x},{y}"


@dataclass(frozen=True)
class TotalGraph:
    graph: Graph
    objects: tuple[ObjectId, ...]
    base: Graph
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {o: k for k, o in enumerate(self.objects)})

    @property
    def order(self) -> int:
        return self.graph.n

    def index_of(self, obj: ObjectId) -> int:
        try:
            return self._index[obj]
        except KeyError:
            raise GraphError(f"{obj!r} is not an object of the base graph") from None

    def __contains__(self, obj: object) -> bool:
        return obj in self._index

    def object_at(self, k: int) -> ObjectId:
        return self.objects[k]

    def label(self, obj: ObjectId) -> str:
        if isinstance(obj, VertexObj):
            return self.base.label(obj.i)
        return edge_label(self.base.label(obj.i), self.base.label(obj.j))

    def by_label(self, text: str) -> ObjectId:
        """Resolve a display label such as 'v0' or 'e_12'."""
        for obj in self.objects:
            if self.label(obj) == text:
                return obj
        raise GraphError(f"no object labelled {text!r}")

    def vertex_objects(self) -> list[VertexObj]:
        return [o for o in self.objects if isinstance(o, VertexObj)]

    def edge_objects(self) -> list[EdgeObj]:
        return [o for o in self.objects if isinstance(o, EdgeObj)]


def total_graph(g: Graph) -> TotalGraph:
    """Vertices and edges of ``g`` as objects, joined when adjacent or incident."""
    n = g.n
    objects: list[ObjectId] = [VertexObj(i) for i in range(n)]
    objects += [EdgeObj(i, j) for i, j in g.edges]
    incident: list[list[int]] = [[] for _ in range(n)]
    edges = list(g.edges)
    for k, (i, j) in enumerate(g.edges):
        edges.append((i, n + k))
        edges.append((j, n + k))
        incident[i].append(n + k)
        incident[j].append(n + k)
    for group in incident:
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                edges.append((group[a], group[b]))
    labels = [g.label(i) for i in range(n)]
    labels += [edge_label(g.label(i), g.label(j)) for i, j in g.edges]
    return TotalGraph(Graph(n + g.m, tuple(edges), tuple(labels)), tuple(objects), g)


def line_graph(g: Graph) -> Graph:
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for k, (i, j) in enumerate(g.edges):
        incident[i].append(k)
        incident[j].append(k)
    edges = set()
    for group in incident:
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                edges.add((group[a], group[b]))
    labels = tuple(edge_label(g.label(i), g.label(j)) for i, j in g.edges)
    return Graph(g.m, tuple(edges), labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) gets id ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for x, y in h.edges:
            edges.append((a * h.n + x, a * h.n + y))
    for b in range(h.n):
        for x, y in g.edges:
            edges.append((x * h.n + b, y * h.n + b))
    labels = tuple(f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(h.n))
    return Graph(g.n * h.n, tuple(edges), labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[S], old_ids)`` where ``old_ids[new] = old``."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex id {v}")
    new_id = {v: k for k, v in enumerate(keep)}
    edges = tuple((new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id)
    labels = tuple(g.label(v) for v in keep)
    return Graph(len(keep), edges, labels), tuple(keep)
