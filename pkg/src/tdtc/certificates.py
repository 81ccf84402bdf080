"""JSON wire formats: colorings, object sets and certificates.

Objects are written ``{"v": i}`` or ``{"e": [i, j]}`` with ``i < j``.  When
every vertex carries a distinct label ``v<k>`` the numbers are those ``k``
(so a wheel hub is ``{"v": 0}``); otherwise they are the 1-based positions of
the edge-list format.  Readers also accept a display label such as ``"e_02"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .families import FamilySpec
from .graph import EdgeObj, Graph, GraphError, TotalGraph, VertexObj, total_graph
from .textio import digest
from .verify import Coloring, ColoringError, check_coloring

VERDICTS = ("match", "mismatch", "verified-only", "inconclusive")

# invariant -> (works on the total graph, witness kind, coloring mode)
INVARIANTS = {
    "alpha": (False, "independent-set", None),
    "alpha-mix": (True, "independent-set", None),
    "gamma-t": (False, "total-dominating-set", None),
    "gamma-tm": (True, "total-dominating-set", None),
    "chi": (False, "coloring", "proper"),
    "chi-t": (True, "coloring", "total"),
    "chi-dt": (False, "coloring", "tdc"),
    "chi-dtt": (True, "coloring", "tdtc"),
}


_V_LABEL = re.compile(r"v(\d+)$")


def vertex_numbers(g: Graph) -> list[int]:
    """JSON number of each vertex id."""
    found = [_V_LABEL.match(g.label(v)) for v in g.vertices()]
    if all(found):
        nums = [int(m.group(1)) for m in found]
        if len(set(nums)) == len(nums):
            return nums
    return [v + 1 for v in g.vertices()]


def object_to_json(obj, g: Graph | None = None) -> dict:
    num = vertex_numbers(g) if g is not None else None

    def f(v: int) -> int:
        return num[v] if num is not None else v + 1

    if isinstance(obj, VertexObj):
        return {"v": f(obj.i)}
    if isinstance(obj, EdgeObj):
        return {"e": sorted([f(obj.i), f(obj.j)])}
    return {"v": f(int(obj))}


def _vertex(x: Any, lookup: dict[int, int]) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ColoringError(f"vertex number must be an integer, got {x!r}")
    if x not in lookup:
        raise ColoringError(f"no vertex numbered {x}")
    return lookup[x]


def object_from_json(data: Any, tg: TotalGraph):
    if isinstance(data, str):
        try:
            return tg.by_label(data)
        except GraphError as exc:
            raise ColoringError(str(exc)) from None
    lookup = {num: v for v, num in enumerate(vertex_numbers(tg.base))}
    if isinstance(data, dict) and set(data) == {"v"}:
        obj = VertexObj(_vertex(data["v"], lookup))
    elif isinstance(data, dict) and set(data) == {"e"}:
        pair = data["e"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise ColoringError(f"edge object needs two vertex numbers, got {pair!r}")
        if pair[0] == pair[1] or not all(isinstance(x, int) for x in pair) or pair[0] > pair[1]:
            raise ColoringError(f"edge object needs i < j, got {pair!r}")
        obj = EdgeObj(_vertex(pair[0], lookup), _vertex(pair[1], lookup))
    else:
        raise ColoringError(f"object must be {{'v': i}} or {{'e': [i, j]}}, got {data!r}")
    if obj not in tg:
        raise ColoringError(f"{data!r} is not an object of the graph")
    return obj


def coloring_to_json(coloring: Coloring, mode: str, tg: TotalGraph) -> dict:
    labels = [[_label(tg, o) for o in cls] for cls in coloring.classes]
    return {
        "mode": mode,
        "classes": [[object_to_json(o, tg.base) for o in cls] for cls in coloring.classes],
        "labels": labels,
    }


def _label(tg: TotalGraph, obj) -> str:
    if isinstance(obj, (VertexObj, EdgeObj)):
        return tg.label(obj)
    return tg.base.label(obj)


def coloring_from_json(data: Any, g: Graph, mode: str | None = None) -> tuple[Coloring, str]:
    """Decode a coloring of ``g``; returns the coloring and its mode.

    In ``proper``/``tdc`` mode the classes hold base vertex ids; otherwise objects.
    """
    if not isinstance(data, dict) or "classes" not in data:
        raise ColoringError("coloring JSON needs a 'classes' list")
    mode = mode or data.get("mode")
    if mode not in ("proper", "total", "tdc", "tdtc"):
        raise ColoringError(f"unknown or missing mode {mode!r}")
    tg = total_graph(g)
    classes = []
    for cls in data["classes"]:
        if not isinstance(cls, list):
            raise ColoringError("each class must be a list of objects")
        objs = [object_from_json(x, tg) for x in cls]
        if mode in ("proper", "tdc"):
            if any(isinstance(o, EdgeObj) for o in objs):
                raise ColoringError(f"mode {mode} colors vertices only; found an edge object")
            classes.append([o.i for o in objs])
        else:
            classes.append(objs)
    return Coloring(classes), mode


def set_to_json(objects, tg: TotalGraph) -> dict:
    ordered = sorted(objects, key=lambda o: tg.index_of(o) if isinstance(o, (VertexObj, EdgeObj)) else o)
    return {
        "objects": [object_to_json(o, tg.base) for o in ordered],
        "labels": [_label(tg, o) for o in ordered],
    }


def set_from_json(data: Any, g: Graph, on_total: bool) -> list:
    if not isinstance(data, dict) or "objects" not in data:
        raise ColoringError("set JSON needs an 'objects' list")
    tg = total_graph(g)
    objs = [object_from_json(x, tg) for x in data["objects"]]
    if on_total:
        return objs
    if any(isinstance(o, EdgeObj) for o in objs):
        raise ColoringError("vertex invariant witness contains an edge object")
    return [o.i for o in objs]


# -------------------------------------------------------------- certificates


def instance_json(g: Graph, spec: FamilySpec | None) -> dict:
    if spec is not None:
        return spec.as_dict()
    return {"edge_list": digest(g), "n": g.n, "m": g.m}


@dataclass
class Certificate:
    instance: dict
    invariant: str
    claimed: int | None
    computed: int | None
    witness: dict | None
    verdict: str
    effort: dict = field(default_factory=dict)
    note: str | None = None

    def to_dict(self) -> dict:
        out = {
            "instance": self.instance,
            "invariant": self.invariant,
            "claimed": self.claimed,
            "computed": self.computed,
            "witness": self.witness,
            "verdict": self.verdict,
            "effort": self.effort,
        }
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        missing = {"instance", "invariant", "witness", "verdict"} - set(data)
        if missing:
            raise ColoringError(f"certificate lacks {', '.join(sorted(missing))}")
        return cls(
            data["instance"],
            data["invariant"],
            data.get("claimed"),
            data.get("computed"),
            data["witness"],
            data["verdict"],
            data.get("effort", {}),
            data.get("note"),
        )


def witness_value(g: Graph, invariant: str, witness: dict) -> tuple[bool, int, list[str]]:
    """Re-check a witness for ``invariant`` on ``g``: (valid, size, problems)."""
    if invariant not in INVARIANTS:
        raise ColoringError(f"unknown invariant {invariant!r}")
    on_total, kind, mode = INVARIANTS[invariant]
    tg = total_graph(g)
    if kind == "coloring":
        coloring, mode = coloring_from_json(witness, g, mode)
        target = tg if on_total else g
        report = check_coloring(target, coloring, mode)
        return report.valid, coloring.size, report.describe(target)
    objs = set_from_json(witness, g, on_total)
    substrate = tg.graph if on_total else g
    ids = sorted({tg.index_of(o) for o in objs} if on_total else set(objs))
    if len(ids) != len(objs):
        return False, len(ids), ["duplicate objects in witness"]
    if kind == "independent-set":
        ok = substrate.is_independent(ids)
        return ok, len(ids), [] if ok else ["witness is not independent"]
    ok = substrate.is_total_dominating(ids)
    return ok, len(ids), [] if ok else ["witness is not a total dominating set"]


def recheck(cert: Certificate, g: Graph) -> tuple[str, list[str]]:
    """Verdict reproduced from the certificate's own witness, without solving."""
    if cert.witness is None:
        return "inconclusive", ["certificate carries no witness"]
    ok, size, problems = witness_value(g, cert.invariant, cert.witness)
    if not ok:
        return "mismatch", problems
    if cert.computed is not None and size != cert.computed:
        return "mismatch", [f"witness has size {size}, certificate says computed={cert.computed}"]
    if cert.claimed is None:
        return "verified-only", []
    reference = cert.computed if cert.computed is not None else size
    if reference != cert.claimed:
        return "mismatch", [f"claimed {cert.claimed}, witness gives {reference}"]
    return "match", []
