"""Pareto label fronts used by the multi-criteria distance searches.

Both fronts keep their entries sorted so that membership tests and best-label
queries are binary searches.  Insertion discards a new label that is weakly
dominated by a stored one and evicts stored labels the new one dominates, so
a label equal to an existing one is never stored twice; that keeps the
chronological fixpoint passes and the walk searches terminating even when
zero-transition edges form same-time cycles.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right


class StartArrivalFront:
    """Labels (start, arrival): larger start and smaller arrival are better.

    Invariant: starts strictly ascending, arrivals strictly ascending.
    """

    __slots__ = ("starts", "arrivals", "chains")

    def __init__(self):
        self.starts: list[int] = []
        self.arrivals: list[int] = []
        self.chains: list = []

    def insert(self, start: int, arrival: int, chain=None) -> bool:
        """Add a label unless weakly dominated; returns True if stored."""
        starts, arrivals = self.starts, self.arrivals
        lo = bisect_left(starts, start)
        if lo < len(starts) and arrivals[lo] <= arrival:
            return False  # some label with start >= ours arrives no later
        hi = bisect_right(starts, start)
        k = hi - 1
        while k >= 0 and arrivals[k] >= arrival:
            k -= 1
        k += 1
        if k < hi:
            del starts[k:hi], arrivals[k:hi], self.chains[k:hi]
        starts.insert(k, start)
        arrivals.insert(k, arrival)
        self.chains.insert(k, chain)
        return True

    def dominated(self, start: int, arrival: int) -> bool:
        lo = bisect_left(self.starts, start)
        return lo < len(self.starts) and self.arrivals[lo] <= arrival

    def latest_start_arriving_by(self, time: int) -> int:
        """Index of the max-start label with arrival <= time, or -1."""
        return bisect_right(self.arrivals, time) - 1


class ArrivalCostFront:
    """Labels (arrival, cost): smaller arrival and smaller cost are better.

    Invariant: arrivals strictly ascending, costs strictly descending.
    """

    __slots__ = ("arrivals", "costs", "chains")

    def __init__(self):
        self.arrivals: list[int] = []
        self.costs: list[int] = []
        self.chains: list = []

    def insert(self, arrival: int, cost: int, chain=None) -> bool:
        """Add a label unless weakly dominated; returns True if stored."""
        arrivals, costs = self.arrivals, self.costs
        hi = bisect_right(arrivals, arrival)
        if hi > 0 and costs[hi - 1] <= cost:
            return False  # an earlier-or-equal arrival already costs no more
        lo = bisect_left(arrivals, arrival)
        k = lo
        while k < len(arrivals) and costs[k] >= cost:
            k += 1
        if lo < k:
            del arrivals[lo:k], costs[lo:k], self.chains[lo:k]
        arrivals.insert(lo, arrival)
        costs.insert(lo, cost)
        self.chains.insert(lo, chain)
        return True

    def dominated(self, arrival: int, cost: int) -> bool:
        hi = bisect_right(self.arrivals, arrival)
        return hi > 0 and self.costs[hi - 1] <= cost

    def min_cost_arriving_by(self, time: int) -> int:
        """Index of the min-cost label with arrival <= time, or -1."""
        return bisect_right(self.arrivals, time) - 1

    def min_cost(self):
        """Overall minimum cost, or None for an empty front."""
        return self.costs[-1] if self.costs else None
