from __future__ import annotations

import time


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could finish; no answer is claimed."""

    def __init__(self, invariant: str, nodes: int):
        super().__init__(f"{invariant}: node budget exhausted after {nodes} nodes (inconclusive)")
        self.invariant = invariant
        self.nodes = nodes


class Effort:
    """Node counter shared by the nested searches of one solve call."""

    def __init__(self, invariant: str, budget: int | None = None):
        self.invariant = invariant
        self.budget = budget
        self.nodes = 0
        self.started = time.perf_counter()

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.invariant, self.nodes)

    @property
    def seconds(self) -> float:
        return time.perf_counter() - self.started
