"""Bitmask kernels for PSD propagation and exhaustive throttling search.

Graphs are passed as an int64 array ``nbr`` where bit ``j`` of ``nbr[i]`` marks
edge ``ij``; vertex sets are int64 masks. Supports up to 62 vertices.
Every function here is compiled by numba unless the JIT is disabled (see
:mod:`psdthrottle._accel`).
"""
from __future__ import annotations

import numpy as np

from ._accel import kernel

NOT_FORCING = -1
NO_BOUND = 1 << 62


@kernel
def propagation_time_mask(nbr, n, blue, limit):
    """Rounds needed for ``blue`` to color everything, or -1 if it cannot do so
    within ``limit`` rounds (or at all)."""
    full = (np.int64(1) << n) - 1
    t = 0
    while blue != full:
        if t >= limit:
            return NOT_FORCING
        white = full & ~blue
        new = np.int64(0)
        rest = white
        while rest != 0:
            comp = rest & -rest
            frontier = comp
            while frontier != 0:
                grow = np.int64(0)
                for i in range(n):
                    if (frontier >> i) & 1:
                        grow |= nbr[i]
                grow &= white & ~comp
                comp |= grow
                frontier = grow
            rest &= ~comp
            for v in range(n):
                if (blue >> v) & 1:
                    x = nbr[v] & comp
                    if x != 0 and (x & (x - 1)) == 0:
                        new |= x
        if new == 0:
            return NOT_FORCING
        blue |= new
        t += 1
    return t


@kernel
def _mask_of(idx, k):
    m = np.int64(0)
    for i in range(k):
        m |= np.int64(1) << idx[i]
    return m


@kernel
def _next_combination(idx, k, n):
    """Advance ``idx`` to the next k-subset in lexicographic order; False when done."""
    i = k - 1
    while i >= 0 and idx[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, k):
        idx[j] = idx[j - 1] + 1
    return True


@kernel
def search_uniform(nbr, n, omega, required):
    """Minimise ``omega*|B| + pt(B)`` over sets ``B`` containing ``required``.

    Sets are visited by increasing size, lexicographically within a size; only
    strict improvements replace the incumbent, so the witness is the first
    optimum in that order. Returns ``(value, mask, pt)``; value is NO_BOUND
    if nothing forces.
    """
    best = NO_BOUND
    best_mask = np.int64(0)
    best_pt = -1
    idx = np.zeros(max(n, 1), dtype=np.int64)
    for k in range(1, n + 1):
        base = omega * k
        if base >= best:
            break
        limit = n if best == NO_BOUND else best - base - 1
        for i in range(k):
            idx[i] = i
        while True:
            mask = _mask_of(idx, k)
            if (mask & required) == required:
                pt = propagation_time_mask(nbr, n, mask, limit)
                if pt >= 0:
                    best = base + pt
                    best_mask = mask
                    best_pt = pt
                    limit = best - base - 1
                    if limit < 0:
                        break
            if not _next_combination(idx, k, n):
                break
    return best, best_mask, best_pt


@kernel
def search_weighted(nbr, n, weights, required):
    """Minimise ``w(B) + pt(B)``; same visiting order and tie rule as
    :func:`search_uniform`. Subsets with ``w(B) >= best`` are skipped."""
    best = NO_BOUND
    best_mask = np.int64(0)
    best_pt = -1
    idx = np.zeros(max(n, 1), dtype=np.int64)
    ordered = np.sort(weights)
    for k in range(1, n + 1):
        floor = 0
        for i in range(k):
            floor += ordered[i]
        if floor >= best:
            break
        for i in range(k):
            idx[i] = i
        while True:
            cost = 0
            for i in range(k):
                cost += weights[idx[i]]
            if cost < best:
                mask = _mask_of(idx, k)
                if (mask & required) == required:
                    limit = n if best == NO_BOUND else best - cost - 1
                    pt = propagation_time_mask(nbr, n, mask, limit)
                    if pt >= 0:
                        best = cost + pt
                        best_mask = mask
                        best_pt = pt
            if not _next_combination(idx, k, n):
                break
    return best, best_mask, best_pt


@kernel
def min_forcing_set_size(nbr, n):
    idx = np.zeros(max(n, 1), dtype=np.int64)
    for k in range(0, n + 1):
        for i in range(k):
            idx[i] = i
        while True:
            mask = _mask_of(idx, k)
            if propagation_time_mask(nbr, n, mask, n + 1) >= 0:
                return k
            if k == 0 or not _next_combination(idx, k, n):
                break
    return n


def mask_to_set(mask: int) -> frozenset[int]:
    mask = int(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m
