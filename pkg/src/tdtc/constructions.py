"""Explicit total dominator total colorings and the structure of T(K_n).

Every coloring returned here has been checked in ``tdtc`` mode; a failing
check raises :class:`ConstructionError` with the violations spelled out.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import complete, complete_bipartite, wheel
from .graph import EdgeObj, Graph, GraphError, ObjectId, TotalGraph, VertexObj, total_graph
from .verify import Coloring, check_coloring

CONSTRUCTIONS = (
    "wheel-tdtc",
    "bipartite-tdtc",
    "complete-tdtc-fixture",
    "extremal-order-n",
    "tkn-parts",
    "tkn-automorphism",
)

COMPLETE_FIXTURES = (2, 3, 4, 5, 6, 7, 8, 11)


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstructionId:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.name not in CONSTRUCTIONS:
            raise GraphError(f"unknown construction {self.name!r}; expected one of {', '.join(CONSTRUCTIONS)}")


def _checked(g: Graph, classes, expected: int | None = None) -> Coloring:
    tg = total_graph(g)
    coloring = Coloring(classes)
    report = check_coloring(tg, coloring, "tdtc")
    if not report.valid:
        detail = "; ".join(report.describe(tg)[:10])
        raise ConstructionError(f"construction failed verification: {detail}")
    if expected is not None and coloring.size != expected:
        raise ConstructionError(f"construction has {coloring.size} classes, expected {expected}")
    return coloring


def parse_token(token: str, vertex_id) -> ObjectId:
    """``v3`` -> VertexObj, ``e03``/``e1,10`` -> EdgeObj, through ``vertex_id(number)``."""
    kind, body = token[0], token[1:]
    if kind == "v":
        return VertexObj(vertex_id(int(body)))
    if kind == "e":
        a, b = body.split(",") if "," in body else (body[0], body[1:])
        return EdgeObj(vertex_id(int(a)), vertex_id(int(b)))
    raise ValueError(f"bad object token {token!r}")


def _parse_classes(text: str, vertex_id) -> list[list[ObjectId]]:
    return [[parse_token(t, vertex_id) for t in block.split()] for block in text.split("|")]


# ------------------------------------------------------------------- wheels

# rim wrap-around written out: W_4's rim edge v4v1 is e14.
_WHEEL_FIXTURES = {
    3: "e12 e03 | v1 e23 | v0 e13 | v2 e01 | v3 e02",
    4: "e01 v2 | e02 v3 | e03 v4 | e04 v1 | e12 e34 v0 | e23 e14",
    5: "v1 v3 e02 e45 | v2 e34 e05 | v0 e15 | v4 e03 | v5 e04 | e01 e23 | e12",
    6: "e12 e34 e56 v0 | e23 e45 e16 | e01 v2 | e02 v3 | e03 v4 | e04 v5 | e05 v6 | e06 v1",
    7: "e01 e34 e56 v2 v7 | e02 | e12 e45 e67 e03 | e04 | e23 e05 v1 v4 v6 | e06 | e17 v3 v5 | v0 | e07",
}


def wheel_min_tds(n: int) -> list[ObjectId]:
    """Spokes to even rim vertices plus the hub, and the last spoke when ``n`` is odd."""
    if n < 3:
        raise GraphError(f"wheel needs rim size n >= 3 (got n={n})")
    s: list[ObjectId] = [EdgeObj(0, 2 * i) for i in range(1, n // 2 + 1)]
    s.append(VertexObj(0))
    if n % 2:
        s.append(EdgeObj(0, n))
    return s


def wheel_rest_coloring(n: int) -> dict[ObjectId, int]:
    """Proper coloring of T(W_n) minus :func:`wheel_min_tds` with colors 0..n//2-1 (n >= 8)."""
    k = n // 2

    def rim(x: int) -> int:
        return (x - 1) % n + 1

    f: dict[ObjectId, int] = {}
    for i in range(k):
        f[EdgeObj(0, rim(2 * i + 1))] = i % k
        f[EdgeObj(rim(2 * i + 1), rim(2 * i + 2))] = (i + 1) % k
        f[VertexObj(rim(2 * i + 3))] = i % k
        f[VertexObj(rim(2 * i + 2))] = (i + 2) % k
        f[EdgeObj(rim(2 * i + 2), rim(2 * i + 3))] = (i + 3) % k
    if n % 2:
        # seam where the rim closes on an odd cycle
        f[EdgeObj(n - 1, n)] = 3
        f[VertexObj(n)] = 0
        f[VertexObj(1)] = 3
        f[EdgeObj(1, n)] = 2
    return f


def wheel_tdtc(n: int) -> Coloring:
    if n < 3:
        raise GraphError(f"wheel needs rim size n >= 3 (got n={n})")
    g = wheel(n)
    expected = n + 2 if n <= 7 else n + 1
    if n in _WHEEL_FIXTURES:
        return _checked(g, _parse_classes(_WHEEL_FIXTURES[n], lambda i: i), expected)
    rest = wheel_rest_coloring(n)
    classes = [[s] for s in wheel_min_tds(n)]
    tg = total_graph(g)
    by_color: list[list[ObjectId]] = [[] for _ in range(n // 2)]
    for obj in tg.objects:
        if obj in rest:
            by_color[rest[obj]].append(obj)
    return _checked(g, classes + by_color, expected)


# --------------------------------------------------------- complete bipartite


def bipartite_tdtc(m: int, n: int) -> Coloring:
    """TDTC of K_{m,n} (n >= m >= 1); V = v1..vm are ids 0..m-1, U = u1..un follow."""
    if not n >= m >= 1:
        raise GraphError(f"bipartite construction needs n >= m >= 1 (got m={m}, n={n})")
    g = complete_bipartite(m, n)

    def v(i: int) -> VertexObj:
        return VertexObj(i - 1)

    def u(j: int) -> VertexObj:
        return VertexObj(m + j - 1)

    def e(i: int, j: int) -> EdgeObj:
        return EdgeObj(i - 1, m + j - 1)

    if (m, n) == (1, 1):
        return _checked(g, [[v(1)], [u(1)], [e(1, 1)]], 3)
    if m == 1:
        classes = [[e(1, 1), u(n)]] + [[e(1, i), u(i - 1)] for i in range(2, n + 1)] + [[v(1)]]
        return _checked(g, classes, n + 1)
    if m == 2:
        classes = [[e(1, 1), e(2, n)]] + [[e(1, i), e(2, i - 1)] for i in range(2, n + 1)]
        classes += [[v(1), v(2)], [u(j) for j in range(1, n + 1)]]
        return _checked(g, classes, n + 2)
    # g(e_ij) = j - i + 1 (mod n) with colors 1..n, g(v_i) = n + i, g(U) = n + m + 1
    colors: dict[ObjectId, int] = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            colors[e(i, j)] = (j - i) % n + 1
        colors[v(i)] = n + i
    for j in range(1, n + 1):
        colors[u(j)] = n + m + 1
    classes = [[o for o, c in colors.items() if c == k] for k in range(1, n + m + 2)]
    return _checked(g, classes, m + n + 1)


# ---------------------------------------------------------------- complete

_COMPLETE_FIXTURES = {
    5: "v3 e12 e45 | v4 e23 e15 | v5 e13 e24 | e25 e34 | e35 e14 | v1 | v2",
    6: "v3 e12 e45 | v4 e13 e26 | v5 e16 e23 | v6 e14 e25 | e36 e15 e24 | e34 e56 | e35 e46 | v1 | v2",
    7: (
        "v4 e16 e25 e37 | v5 e67 e13 e24 | v6 e15 e23 e47 | v7 e35 e26 e14 | v3 e46 e57 | v1 e27 e36"
        " | v2 e34 | e12 | e45 | e56 | e17"
    ),
    8: (
        "v8 e13 e24 e56 | v7 e25 e36 e48 | v6 e18 e27 e34 | v5 e16 e28 e37 | v4 e17 e26 e35"
        " | v2 e15 e47 e38 | e57 e68 | e46 e58 | e45 e67 | e14 e78 | v3 e12 | e23 | v1"
    ),
    11: (
        "v11 e1,10 e2,6 e3,7 e4,8 e5,9 | v10 e1,9 e2,8 e3,5 e4,6 e7,11"
        " | v9 e1,11 e2,7 e3,4 e8,10 e5,6 | v8 e1,4 e2,11 e3,9 e6,10 e5,7"
        " | v7 e1,8 e2,9 e3,6 e4,10 e5,11 | v4 e1,5 e2,10 e3,11 e6,8 e7,9"
        " | v5 e1,6 e2,4 e3,10 e9,11 | v6 e1,7 e2,5 e3,8 e4,9 | v3 e1,2 e4,11 e5,8 e7,10"
        " | e6,11 e9,10 | e4,7 e5,10 | e8,9 e10,11 | v2 e1,3 | e6,7 e8,11 | e6,9 e7,8"
        " | v1 | e2,3 | e4,5"
    ),
}


def complete_tdtc_fixture(n: int) -> Coloring:
    if n not in COMPLETE_FIXTURES:
        raise GraphError(
            f"no explicit coloring of K_{n}; fixtures exist for n in {COMPLETE_FIXTURES}, "
            "use the exact solver (tdtc_number) for other n"
        )
    g = complete(n)

    def k(i: int) -> int:
        return i - 1

    if n == 2:
        classes = [[VertexObj(0)], [VertexObj(1)], [EdgeObj(0, 1)]]
        return _checked(g, classes, 3)
    if n == 3:
        # antipodal pairs of the octahedron T(K_3) = T(C_3)
        return _checked(g, _parse_classes("v1 e23 | v2 e13 | v3 e12", k), 3)
    if n == 4:
        # K_4 = W_3 with the hub v0 placed on v4
        relabel = {0: 3, 1: 0, 2: 1, 3: 2}
        classes = _parse_classes(_WHEEL_FIXTURES[3], lambda i: relabel[i])
        return _checked(g, classes, 5)
    return _checked(g, _parse_classes(_COMPLETE_FIXTURES[n], k), {5: 7, 6: 9, 7: 11, 8: 13, 11: 18}[n])


# ---------------------------------------------------------------- extremal


def extremal_order_n(order: int) -> tuple[Graph, Coloring]:
    """A graph of the given order whose TDTC number equals its order: the star K_{1,order-1}."""
    if order < 3:
        raise GraphError(f"extremal construction needs order >= 3 (got {order})")
    g = complete_bipartite(1, order - 1)
    coloring = bipartite_tdtc(1, order - 1)
    if coloring.size != order:
        raise ConstructionError(f"star of order {order} gave {coloring.size} classes")
    return g, coloring


# ------------------------------------------------------------------- T(K_n)


def tkn_parts(n: int) -> list[list[ObjectId]]:
    """Vertex sets of the n+1 edge-disjoint copies of K_n covering T(K_n).

    Part 0 is the base vertex set; part ``i`` is ``v_i`` with its incident edges.
    """
    if n < 2:
        raise GraphError(f"T(K_n) decomposition needs n >= 2 (got n={n})")
    parts: list[list[ObjectId]] = [[VertexObj(i) for i in range(n)]]
    for i in range(n):
        parts.append([VertexObj(i)] + [EdgeObj(i, j) for j in range(n) if j != i])
    return parts


def tkn_automorphism(n: int, i: int) -> dict[ObjectId, ObjectId]:
    """The involution swapping ``v_j`` with ``e_ij`` for all ``j != i`` (``i`` is 1-based)."""
    if n < 2:
        raise GraphError(f"T(K_n) automorphism needs n >= 2 (got n={n})")
    if not 1 <= i <= n:
        raise GraphError(f"vertex index i must be in 1..{n} (got {i})")
    tg = total_graph(complete(n))
    c = i - 1
    phi: dict[ObjectId, ObjectId] = {o: o for o in tg.objects}
    for j in range(n):
        if j != c:
            phi[VertexObj(j)] = EdgeObj(c, j)
            phi[EdgeObj(c, j)] = VertexObj(j)
    return phi


def total_graph_for(name: str, **params) -> TotalGraph:
    """Total graph of the base graph a coloring construction refers to."""
    if name == "wheel-tdtc":
        return total_graph(wheel(params["n"]))
    if name == "bipartite-tdtc":
        return total_graph(complete_bipartite(params["m"], params["n"]))
    if name in ("complete-tdtc-fixture", "tkn-parts", "tkn-automorphism"):
        return total_graph(complete(params["n"]))
    if name == "extremal-order-n":
        return total_graph(complete_bipartite(1, params["n"] - 1))
    raise GraphError(f"unknown construction {name!r}")
