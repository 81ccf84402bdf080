"""Coloring checks in four modes and common-neighbourhood queries.

A target is either a plain :class:`Graph` (objects are vertex ids) or a
:class:`TotalGraph` (objects are :class:`VertexObj`/:class:`EdgeObj`).  The
``total`` and ``tdtc`` modes always work on the total graph; passing a plain
graph in those modes verifies against ``total_graph(graph)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence, Union

from .graph import Graph, GraphError, TotalGraph, iter_bits, total_graph

MODES = ("proper", "total", "tdc", "tdtc")

Target = Union[Graph, TotalGraph]


class ColoringError(ValueError):
    """A coloring refers to objects the target does not have."""


@dataclass(frozen=True)
class Coloring:
    classes: tuple[tuple[Hashable, ...], ...]

    def __init__(self, classes: Iterable[Iterable[Hashable]]):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def size(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict:
        return {x: k for k, cls in enumerate(self.classes) for x in cls}

    def sorted(self, key=None) -> Coloring:
        """Members sorted inside classes; classes sorted by their first member."""
        inner = [tuple(sorted(c, key=key)) for c in self.classes]
        first = (lambda c: key(c[0]) if c else ()) if key else (lambda c: c[0] if c else ())
        return Coloring(sorted(inner, key=first))


@dataclass(frozen=True)
class Violation:
    kind: str
    objects: tuple


@dataclass
class VerifyReport:
    mode: str
    valid: bool
    violations: list[Violation] = field(default_factory=list)
    domination: dict = field(default_factory=dict)

    def describe(self, target: Target) -> list[str]:
        return [describe_violation(target, v) for v in self.violations]


# ------------------------------------------------------------------ helpers


def _substrate(target: Target, mode: str | None = None) -> Target:
    if mode in ("total", "tdtc") and isinstance(target, Graph):
        return total_graph(target)
    return target


def _graph(target: Target) -> Graph:
    return target.graph if isinstance(target, TotalGraph) else target


def _index(target: Target, obj: Hashable) -> int:
    if isinstance(target, TotalGraph):
        try:
            return target.index_of(obj)  # type: ignore[arg-type]
        except GraphError as exc:
            raise ColoringError(str(exc)) from None
    if isinstance(obj, bool) or not isinstance(obj, int) or not 0 <= obj < target.n:
        raise ColoringError(f"{obj!r} is not a vertex of the target graph")
    return obj


def _key(target: Target, k: int) -> Hashable:
    return target.object_at(k) if isinstance(target, TotalGraph) else k


def object_label(target: Target, obj: Hashable) -> str:
    if isinstance(target, TotalGraph):
        return target.label(obj)  # type: ignore[arg-type]
    return target.label(obj)  # type: ignore[arg-type]


def describe_violation(target: Target, v: Violation) -> str:
    if v.kind == "empty-class":
        return f"empty-class: class {v.objects[0] + 1} has no members"
    names = ", ".join(object_label(target, o) for o in v.objects)
    return f"{v.kind}: {names}"


def _class_mask(target: Target, cls: Iterable[Hashable]) -> int:
    mask = 0
    for obj in cls:
        mask |= 1 << _index(target, obj)
    return mask


def _cn_mask(g: Graph, cls_mask: int) -> int:
    out = (1 << g.n) - 1
    for k in iter_bits(cls_mask):
        out &= g.adj[k]
    return out


# -------------------------------------------------------------- operations


def common_neighborhood(target: Target, cls: Iterable[Hashable]) -> frozenset:
    """All objects adjacent (or incident) to every member of ``cls``."""
    cls = list(cls)
    if not cls:
        raise ColoringError("common neighbourhood of an empty class is undefined")
    mask = _cn_mask(_graph(target), _class_mask(target, cls))
    return frozenset(_key(target, k) for k in iter_bits(mask))


def totally_dominates(target: Target, x: Hashable, cls: Iterable[Hashable]) -> bool:
    k = _index(target, x)
    cls_mask = _class_mask(target, cls)
    if not cls_mask:
        raise ColoringError("common neighbourhood of an empty class is undefined")
    return bool(_cn_mask(_graph(target), cls_mask) >> k & 1)


def check_coloring(target: Target, coloring: Coloring | Sequence[Iterable[Hashable]], mode: str) -> VerifyReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if not isinstance(coloring, Coloring):
        coloring = Coloring(coloring)
    target = _substrate(target, mode)
    g = _graph(target)
    violations: list[Violation] = []

    masks = []
    owner: dict[int, int] = {}
    for c, cls in enumerate(coloring.classes):
        mask = 0
        for obj in cls:
            k = _index(target, obj)
            if k in owner or mask >> k & 1:
                violations.append(Violation("duplicate", (obj,)))
            owner.setdefault(k, c)
            mask |= 1 << k
        if not mask:
            violations.append(Violation("empty-class", (c,)))
        masks.append(mask)

    for k in range(g.n):
        if k not in owner:
            violations.append(Violation("uncovered", (_key(target, k),)))

    for c, mask in enumerate(masks):
        for k in iter_bits(mask):
            for j in iter_bits(g.adj[k] & mask):
                if j > k:
                    violations.append(Violation("conflict", (_key(target, k), _key(target, j))))

    cns = [_cn_mask(g, mask) if mask else 0 for mask in masks]
    domination = {
        _key(target, k): tuple(c for c, cn in enumerate(cns) if cn >> k & 1) for k in range(g.n)
    }
    if mode in ("tdc", "tdtc"):
        for obj, dominated in domination.items():
            if not dominated:
                violations.append(Violation("undominated", (obj,)))

    return VerifyReport(mode, not violations, violations, domination)
