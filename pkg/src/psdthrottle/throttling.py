"""Exact PSD throttling numbers by exhaustive search."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .forcing import DEFAULT_CAP, INFINITE, BudgetError, propagate
from .graphs import Graph, WeightMap
from .kernels import NO_BOUND, mask_to_set, search_uniform, search_weighted, set_to_mask

__all__ = [
    "INFINITE",
    "ThrottleResult",
    "default_cap",
    "th_plus_of_set",
    "th_plus_weighted_of_set",
    "th_plus",
    "th_plus_weighted",
    "th_plus_omega",
]

HARD_CAP = 62
CAP_ENV = "PSDTHROTTLE_CAP"


@dataclass(frozen=True)
class ThrottleResult:
    value: int
    witness_set: frozenset[int]
    propagation_time: int


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if cap > HARD_CAP:
        raise ValueError(f"cap {cap} exceeds the bitmask limit of {HARD_CAP} vertices")
    if g.n > cap:
        raise BudgetError(g.n, cap)


def th_plus_of_set(g: Graph, blue: Iterable[int]) -> int | float:
    """``|B| + pt(G; B)``; INFINITE when ``B`` is not a forcing set."""
    sched = propagate(g, blue)
    return len(sched.initial) + sched.total_time


def th_plus_weighted_of_set(g: Graph, w: WeightMap, blue: Iterable[int]) -> int | float:
    w.check_domain(g)
    sched = propagate(g, blue)
    return w.cost(sched.initial) + sched.total_time


def _result(value, mask, pt) -> ThrottleResult:
    if value == NO_BOUND:
        raise AssertionError("search found no forcing set")
    return ThrottleResult(int(value), mask_to_set(mask), int(pt))


def th_plus_omega(
    g: Graph, omega: int = 1, cap: int | None = None, required: Iterable[int] = ()
) -> ThrottleResult:
    """Minimum of ``omega*|B| + pt(G; B)``; ``omega=1`` is ordinary throttling.

    ``required`` restricts the search to sets containing those vertices.
    """
    if isinstance(omega, bool) or int(omega) != omega or omega < 1:
        raise TypeError("omega must be a positive integer")
    _check_cap(g, cap)
    if g.n == 0:
        return ThrottleResult(0, frozenset(), 0)
    return _result(*search_uniform(g.bitmasks(), g.n, int(omega), set_to_mask(required)))


def th_plus(g: Graph, cap: int | None = None, required: Iterable[int] = ()) -> ThrottleResult:
    """PSD throttling number with the canonical (first-found) optimal set."""
    return th_plus_omega(g, 1, cap=cap, required=required)


def th_plus_weighted(
    g: Graph, w: WeightMap, cap: int | None = None, required: Iterable[int] = ()
) -> ThrottleResult:
    if not isinstance(w, WeightMap):
        w = WeightMap(w)
    w.check_domain(g)
    _check_cap(g, cap)
    if g.n == 0:
        return ThrottleResult(0, frozenset(), 0)
    weights = np.asarray(w.weights, dtype=np.int64)
    return _result(*search_weighted(g.bitmasks(), g.n, weights, set_to_mask(required)))

