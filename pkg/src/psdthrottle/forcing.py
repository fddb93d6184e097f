"""PSD color change rule and propagation, set-based reference implementation.

Works on graphs of any size. The bitmask kernels in :mod:`psdthrottle.kernels`
are the fast path for exhaustive search; this module is the readable one and
also produces full force schedules.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import Graph

__all__ = [
    "INFINITE",
    "ForcingSchedule",
    "white_components",
    "step_ccr_zplus",
    "propagate",
    "propagation_time",
    "is_psd_forcing_set",
    "z_plus",
    "BudgetError",
    "DEFAULT_CAP",
]

INFINITE = math.inf
DEFAULT_CAP = 31


class BudgetError(RuntimeError):
    """An exhaustive search was asked to exceed its vertex cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} vertices, brute-force cap is {cap}")


@dataclass(frozen=True)
class ForcingSchedule:
    """Forces per time-step. ``total_time`` is INFINITE when the set does not force."""

    initial: frozenset[int]
    rounds: tuple[frozenset[tuple[int, int]], ...]
    total_time: int | float
    blue: frozenset[int]

    @property
    def complete(self) -> bool:
        return self.total_time != INFINITE


def _check_subset(g: Graph, blue: Iterable[int]) -> frozenset[int]:
    blue = frozenset(int(v) for v in blue)
    bad = [v for v in blue if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} not in graph")
    return blue


def white_components(g: Graph, blue: frozenset[int]) -> list[frozenset[int]]:
    """Connected components of ``g - blue``, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in blue or s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for x in g.adjacency[u]:
                if x not in blue and x not in comp:
                    comp.add(x)
                    stack.append(x)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def step_ccr_zplus(g: Graph, blue: Iterable[int]) -> frozenset[tuple[int, int]]:
    """All forces available in one time-step.

    A white ``w`` in component ``W`` is forced when some blue ``v`` has ``w``
    as its only white neighbor inside ``W``. When several blue vertices could
    force the same ``w`` the smallest one is recorded as the forcer.
    """
    blue = _check_subset(g, blue)
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(white_components(g, blue)):
        for x in comp:
            comp_of[x] = i
    forced: dict[int, int] = {}
    for v in sorted(blue):
        by_comp: dict[int, list[int]] = {}
        for x in g.adjacency[v]:
            if x not in blue:
                by_comp.setdefault(comp_of[x], []).append(x)
        for members in by_comp.values():
            if len(members) == 1:
                forced.setdefault(members[0], v)
    return frozenset((v, w) for w, v in forced.items())


def propagate(g: Graph, blue: Iterable[int]) -> ForcingSchedule:
    initial = _check_subset(g, blue)
    current = set(initial)
    rounds = []
    while len(current) < g.n:
        forces = step_ccr_zplus(g, current)
        if not forces:
            return ForcingSchedule(initial, tuple(rounds), INFINITE, frozenset(current))
        rounds.append(forces)
        current.update(w for _, w in forces)
    return ForcingSchedule(initial, tuple(rounds), len(rounds), frozenset(current))


def propagation_time(g: Graph, blue: Iterable[int]) -> int | float:
    return propagate(g, blue).total_time


def is_psd_forcing_set(g: Graph, blue: Iterable[int]) -> bool:
    return propagate(g, blue).complete


def z_plus(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum size of a PSD forcing set, by enumeration in increasing size."""
    if g.n > cap:
        raise BudgetError(g.n, cap)
    if g.n <= 62:
        from .kernels import min_forcing_set_size

        return int(min_forcing_set_size(g.bitmasks(), g.n))
    for k in range(g.n + 1):  # pragma: no cover - cap above 62 only
        for b in combinations(range(g.n), k):
            if is_psd_forcing_set(g, b):
                return k
    raise AssertionError("unreachable: V(G) always forces")
