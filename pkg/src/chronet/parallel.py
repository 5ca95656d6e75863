"""Deterministic fan-out of independent per-root computations.

Whole-graph measures run one independent single-source computation per
vertex.  map_roots keeps the result order equal to the root order regardless
of the worker count, so concurrent runs serialize to identical outputs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional


def map_roots(func: Callable, roots: Iterable, workers: Optional[int]) -> list:
    roots = list(roots)
    if workers is None or workers <= 1 or len(roots) <= 1:
        return [func(r) for r in roots]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, roots))
