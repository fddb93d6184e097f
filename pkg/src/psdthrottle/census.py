"""Spider throttling by the greedy leg-covering recursion, and the super-spider census.

:func:`spidthrot` is a line-by-line port of the published recursion and serves
as the reference. The census runs an iterative copy of it inside a compiled
kernel that also enumerates the partitions.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from ._accel import kernel
from .formulas import path_throttle
from .graphs import SpiderPartition

__all__ = [
    "CensusRow",
    "spidthrot",
    "spider_throttle",
    "is_super_spider",
    "enumerate_spiders",
    "count_partitions",
    "census",
    "census_range",
    "rows_to_csv",
    "rows_to_json",
    "DEFAULT_EXAMPLE_LIMIT",
]

DEFAULT_EXAMPLE_LIMIT = 8


def spidthrot(partlist: Sequence[int], cbool: bool, s: int, p: int) -> bool:
    """Can the spider with these remaining legs be forced within ``p`` steps
    using at most ``s`` more chosen vertices? ``cbool``: center already covered."""
    plist = list(partlist)
    plist.sort()
    if (not plist) and (cbool or s > 0):
        return True
    elif not plist:
        return False
    elif plist and s == 0:
        return False
    elif plist[-1] > 2 * p + 1:
        l = plist.pop()
        l = l - (2 * p + 1)
        plist.append(l)
        return spidthrot(plist, cbool, s - 1, p)
    elif plist[-1] == 2 * p + 1:
        plist.pop()
        return spidthrot(plist, cbool, s - 1, p)
    elif plist[-1] == 2 * p:
        plist.pop()
        return spidthrot(plist, True, s - 1, p)
    elif plist[-1] > p:
        l = plist.pop()
        while plist and plist[0] <= 2 * p - l:
            plist.pop(0)
        return spidthrot(plist, True, s - 1, p)
    else:
        return True


def _fits(legs: Sequence[int], t: int) -> bool:
    return any(spidthrot(legs, False, s, t - s) for s in range(1, t + 1))


def spider_throttle(p: SpiderPartition | Sequence[int]) -> int:
    """Least t such that some split t = s + p passes :func:`spidthrot`."""
    legs = tuple(p)
    t = 1
    while not _fits(legs, t):
        t += 1
    return t


def is_super_spider(p: SpiderPartition | Sequence[int]) -> bool:
    legs = tuple(p)
    return spider_throttle(legs) > path_throttle(1 + sum(legs))


def enumerate_spiders(n: int) -> Iterator[SpiderPartition]:
    """Partitions of n - 1 with at least three parts, in reverse-lexicographic order."""
    if n < 4:
        return
    m = n - 1
    a = [m]
    while True:
        if len(a) >= 3:
            yield SpiderPartition(a)
        rem = 0
        while a and a[-1] == 1:
            a.pop()
            rem += 1
        if not a:
            return
        a[-1] -= 1
        rem += 1
        x = a[-1]
        while rem > x:
            a.append(x)
            rem -= x
        a.append(rem)


def count_partitions(m: int, min_parts: int = 0) -> int:
    """Number of partitions of ``m`` with at least ``min_parts`` parts (table DP)."""
    # by_parts[k][j]: partitions of j into exactly k parts
    by_parts = [[0] * (m + 1) for _ in range(m + 1)]
    by_parts[0][0] = 1
    for k in range(1, m + 1):
        for j in range(k, m + 1):
            by_parts[k][j] = by_parts[k - 1][j - 1] + by_parts[k][j - k]
    return sum(by_parts[k][m] for k in range(max(min_parts, 0), m + 1))


# --- compiled census -------------------------------------------------------


@kernel
def _spidthrot_iter(legs, m, cbool, s, p, work):
    """Loop form of :func:`spidthrot`; ``legs[:m]`` ascending, ``work`` scratch."""
    for i in range(m):
        work[i] = legs[i]
    lo = 0
    hi = m
    while True:
        if lo == hi:
            return cbool or s > 0
        if s == 0:
            return False
        longest = work[hi - 1]
        if longest > 2 * p + 1:
            rest = longest - (2 * p + 1)
            j = hi - 1
            while j > lo and work[j - 1] > rest:
                work[j] = work[j - 1]
                j -= 1
            work[j] = rest
            s -= 1
        elif longest == 2 * p + 1:
            hi -= 1
            s -= 1
        elif longest == 2 * p:
            hi -= 1
            cbool = True
            s -= 1
        elif longest > p:
            hi -= 1
            while lo < hi and work[lo] <= 2 * p - longest:
                lo += 1
            cbool = True
            s -= 1
        else:
            return True


@kernel
def _fits_iter(legs, m, t, work):
    for s in range(1, t + 1):
        if _spidthrot_iter(legs, m, False, s, t - s, work):
            return True
    return False


@kernel
def _census_kernel(n, t, k):
    """Scan all spiders of order n against throttling bound t.

    Returns (super_count, parts, scores): ``parts`` holds the super-spiders
    (nonincreasing, zero padded) and ``scores`` their throttling number in
    t+1..t+k, or -1 when it exceeds t+k.
    """
    m = n - 1
    a = np.zeros(m + 1, dtype=np.int64)
    asc = np.zeros(m + 1, dtype=np.int64)
    work = np.zeros(m + 1, dtype=np.int64)
    cap = 64
    parts = np.zeros((cap, m), dtype=np.int64)
    scores = np.zeros(cap, dtype=np.int64)
    count = 0
    a[0] = m
    length = 1
    while True:
        if length >= 3:
            for i in range(length):
                asc[i] = a[length - 1 - i]
            if not _fits_iter(asc, length, t, work):
                score = -1
                for tt in range(t + 1, t + k + 1):
                    if _fits_iter(asc, length, tt, work):
                        score = tt
                        break
                if count == cap:
                    bigger = np.zeros((2 * cap, m), dtype=np.int64)
                    bigger[:cap] = parts
                    parts = bigger
                    bigger_scores = np.zeros(2 * cap, dtype=np.int64)
                    bigger_scores[:cap] = scores
                    scores = bigger_scores
                    cap *= 2
                for i in range(length):
                    parts[count, i] = a[i]
                scores[count] = score
                count += 1
        rem = 0
        while length > 0 and a[length - 1] == 1:
            length -= 1
            rem += 1
        if length == 0:
            break
        a[length - 1] -= 1
        rem += 1
        x = a[length - 1]
        while rem > x:
            a[length] = x
            length += 1
            rem -= x
        a[length] = rem
        length += 1
    return count, parts[:count], scores[:count]


@dataclass(frozen=True)
class CensusRow:
    n: int
    path_value: int
    super_count: int
    examples: tuple[SpiderPartition, ...]
    scores: tuple[int, ...] = field(repr=False)
    budget_exceeded: tuple[SpiderPartition, ...] = ()
    truncated: bool = False

    def example_text(self) -> str:
        items = [str(p) for p in self.examples]
        if self.truncated:
            items.append("...")
        items += [f"BUDGET_EXCEEDED:{p}" for p in self.budget_exceeded]
        return "|".join(items)


def census(n: int, extra_budget: int = 1, example_limit: int | None = DEFAULT_EXAMPLE_LIMIT) -> CensusRow:
    """Count super-spiders of order ``n``.

    Each spider is tested at t = th_+(P_n); super-spiders are re-scored up to
    t + extra_budget and any that still fail are reported in ``budget_exceeded``.
    ``example_limit=None`` keeps every example.
    """
    if n < 4:
        return CensusRow(n, path_throttle(max(n, 1)), 0, (), ())
    if extra_budget < 0:
        raise ValueError("extra_budget must be >= 0")
    t = path_throttle(n)
    count, parts, scores = _census_kernel(n, t, extra_budget)
    found = sorted(
        (tuple(int(x) for x in row if x), int(sc)) for row, sc in zip(parts, scores)
    )
    spiders = [SpiderPartition(legs) for legs, _ in found]
    exceeded = tuple(p for p, (_, sc) in zip(spiders, found) if sc < 0)
    shown = spiders if example_limit is None else spiders[:example_limit]
    return CensusRow(
        n=n,
        path_value=t,
        super_count=int(count),
        examples=tuple(shown),
        scores=tuple(sc for _, sc in found),
        budget_exceeded=exceeded,
        truncated=len(shown) < len(spiders),
    )


def census_range(
    n_lo: int, n_hi: int, extra_budget: int = 1, example_limit: int | None = DEFAULT_EXAMPLE_LIMIT
) -> list[CensusRow]:
    """Rows for ``n_lo <= n <= n_hi`` that contain at least one super-spider."""
    if n_lo > n_hi:
        raise ValueError("n_lo must not exceed n_hi")
    rows = []
    for n in range(max(n_lo, 1), n_hi + 1):
        row = census(n, extra_budget, example_limit)
        if row.super_count:
            rows.append(row)
    return rows


CSV_HEADER = ("n", "path_throttle", "super_count", "examples")


def rows_to_csv(rows: Sequence[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow((r.n, r.path_value, r.super_count, r.example_text()))
    return buf.getvalue()


def rows_to_json(rows: Sequence[CensusRow]) -> str:
    data = [
        {
            "n": r.n,
            "path_throttle": r.path_value,
            "super_count": r.super_count,
            "examples": [list(p.legs) for p in r.examples],
            "truncated": r.truncated,
            "budget_exceeded": [list(p.legs) for p in r.budget_exceeded],
        }
        for r in rows
    ]
    return json.dumps(data, indent=2) + "\n"
