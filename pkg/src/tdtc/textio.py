"""Edge-list text format: header ``n m`` then ``m`` lines ``i j`` (1-based).

Lines starting with ``#`` are comments; blank lines are ignored.
"""

from __future__ import annotations

import hashlib

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {line.strip()!r}") from None


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if header is None:
            n, m = _ints(stripped, lineno, 2)
            if n < 0 or m < 0:
                raise ParseError(lineno, "n and m must be nonnegative")
            header = (n, m)
            continue
        i, j = _ints(stripped, lineno, 2)
        n = header[0]
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(lineno, f"vertex index out of range 1..{n}: {i} {j}")
        if i == j:
            raise ParseError(lineno, f"self-loop at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]} {key[1]} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((i - 1, j - 1))
    if header is None:
        raise ParseError(0, "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(0, f"header announces {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def emit_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{i + 1} {j + 1}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(emit_graph(g).encode()).hexdigest()
