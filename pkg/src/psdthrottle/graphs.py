"""Graphs, trees, vertex weights and spider partitions.

Vertices are dense integer indices ``0..n-1``. All objects are immutable.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Integral
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "WeightMap",
    "SpiderPartition",
    "ParseError",
    "make_path",
    "make_cycle",
    "make_spider",
    "make_balanced_spider",
    "make_full_binary_tree",
    "contract_edge",
    "parse_spider",
    "parse_edge_list",
    "parse_weighted_tree",
    "format_edge_list",
    "format_weighted_tree",
]

MAX_BINARY_HEIGHT = 20


class ParseError(ValueError):
    """Malformed textual input. ``line`` is 1-based, or None if not line-bound."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on ``range(n)``.

    ``tree=True`` requests validation that the graph is a tree (connected with
    ``n - 1`` edges); construction fails otherwise.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None
    tree: bool = False

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
        tree: bool = False,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "tree", tree)
        if tree and not self.is_tree():
            raise ValueError("graph is not a tree")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def bitmasks(self) -> np.ndarray:
        """Neighborhoods as int64 bitmasks (requires n <= 62)."""
        if self.n > 62:
            raise ValueError("bitmask form supports at most 62 vertices")
        out = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def distances_from(self, source: int) -> list[int]:
        """BFS distances; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for x in self.adjacency[u]:
                if dist[x] < 0:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        return dist

    def eccentricity(self, v: int) -> int:
        return max(self.distances_from(v))

    def is_connected(self) -> bool:
        return self.n == 0 or min(self.distances_from(0)) >= 0

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph on ``vertices``, re-indexed in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = [self.labels[v] for v in keep] if self.labels else None
        return Graph(len(keep), edges, labels)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))


@dataclass(frozen=True)
class WeightMap:
    """Positive integer vertex weights, indexed like the companion graph."""

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        checked = []
        for i, w in enumerate(weights):
            if isinstance(w, bool) or not isinstance(w, (Integral, Fraction, float)):
                raise TypeError(f"weight of vertex {i} is not a number: {w!r}")
            if isinstance(w, (float, Fraction)):
                if w != int(w):
                    raise TypeError(
                        f"weight of vertex {i} is {w!r}; only integer weights are supported"
                    )
                w = int(w)
            if w < 1:
                raise ValueError(f"weight of vertex {i} must be >= 1, got {w}")
            checked.append(int(w))
        object.__setattr__(self, "weights", tuple(checked))

    @classmethod
    def uniform(cls, n: int, value: int = 1) -> WeightMap:
        return cls([value] * n)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, v: int) -> int:
        return self.weights[v]

    def __iter__(self):
        return iter(self.weights)

    def cost(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def check_domain(self, g: Graph) -> None:
        if len(self.weights) != g.n:
            raise ValueError(f"weight map covers {len(self.weights)} vertices, graph has {g.n}")


@dataclass(frozen=True, order=True)
class SpiderPartition:
    """Leg lengths of a spider, stored nonincreasing."""

    legs: tuple[int, ...] = field()

    def __init__(self, legs: Iterable[int], min_legs: int = 3):
        legs = tuple(sorted((int(x) for x in legs), reverse=True))
        if any(x < 1 for x in legs):
            raise ValueError("leg lengths must be positive")
        if len(legs) < min_legs:
            raise ValueError(f"a spider needs at least {min_legs} legs, got {len(legs)}")
        object.__setattr__(self, "legs", legs)

    @property
    def order(self) -> int:
        return 1 + sum(self.legs)

    def __str__(self) -> str:
        return "S(" + ",".join(map(str, self.legs)) + ")"

    def __iter__(self):
        return iter(self.legs)

    def __len__(self) -> int:
        return len(self.legs)


_SPIDER_RE = re.compile(r"^\s*(?:S\s*\(\s*(?P<inner>[^)]*)\)|(?P<bare>[\d\s,]+))\s*$")


def parse_spider(text: str) -> SpiderPartition:
    """Parse ``S(4,3,2)`` or ``4,3,2``."""
    m = _SPIDER_RE.match(text)
    if not m:
        raise ParseError(f"not a spider: {text!r}")
    body = m.group("inner") if m.group("inner") is not None else m.group("bare")
    try:
        legs = [int(x) for x in body.split(",") if x.strip()]
        return SpiderPartition(legs)
    except ValueError as exc:
        raise ParseError(f"bad spider {text!r}: {exc}") from None


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], tree=True)


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_spider(p: SpiderPartition | Sequence[int]) -> Graph:
    """Spider with center 0; each leg is laid out consecutively from the center outward.

    Legs appear in the partition's nonincreasing order, so the first vertex of
    leg ``i`` is ``1 + sum(legs[:i])``.
    """
    if not isinstance(p, SpiderPartition):
        p = SpiderPartition(p)
    edges = []
    nxt = 1
    labels = ["c"]
    for i, length in enumerate(p.legs):
        prev = 0
        for d in range(1, length + 1):
            edges.append((prev, nxt))
            labels.append(f"L{i}.{d}")
            prev = nxt
            nxt += 1
    return Graph(nxt, edges, labels, tree=True)


def make_balanced_spider(alpha: int, beta: int) -> Graph:
    """T_{alpha,beta}: ``alpha`` legs of ``beta`` vertices each."""
    if alpha < 3:
        raise ValueError("a balanced spider needs alpha >= 3")
    if beta < 1:
        raise ValueError("a balanced spider needs beta >= 1")
    return make_spider(SpiderPartition([beta] * alpha))


def make_full_binary_tree(h: int) -> Graph:
    """Full binary tree of height ``h`` in heap order; the root is vertex 0."""
    if h < 0:
        raise ValueError("height must be nonnegative")
    if h > MAX_BINARY_HEIGHT:
        raise ValueError(f"height {h} exceeds the supported maximum {MAX_BINARY_HEIGHT}")
    n = 2 ** (h + 1) - 1
    labels = ["root"] + [""] * (n - 1)
    return Graph(n, [((i - 1) // 2, i) for i in range(1, n)], labels, tree=True)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge ``uv``. The merged vertex takes index ``min(u, v)``;
    vertices above ``max(u, v)`` shift down by one."""
    a, b = (u, v) if u < v else (v, u)
    if (a, b) not in g.edges:
        raise ValueError(f"({u}, {v}) is not an edge")

    def relabel(x: int) -> int:
        if x == b:
            return a
        return x - 1 if x > b else x

    edges = set()
    for x, y in g.edges:
        if (x, y) == (a, b):
            continue
        x, y = relabel(x), relabel(y)
        if x != y:
            edges.add((min(x, y), max(x, y)))
    labels = None
    if g.labels is not None:
        labels = [lab for i, lab in enumerate(g.labels) if i != b]
    return Graph(g.n - 1, edges, labels, tree=g.tree)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse(text: str, allow_weights: bool) -> tuple[Graph, dict[int, int]]:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty input")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"expected vertex count, got {first!r}", lineno) from None
    if n < 0:
        raise ParseError("vertex count must be nonnegative", lineno)
    edges = []
    seen = set()
    weights: dict[int, int] = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        if parts[0] == "w":
            if not allow_weights:
                raise ParseError("weight line in an unweighted edge list", lineno)
            if len(parts) != 3:
                raise ParseError("weight line must be 'w i k'", lineno)
            try:
                i = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex {parts[1]!r}", lineno) from None
            try:
                k = int(parts[2])
            except ValueError:
                raise ParseError(f"weight {parts[2]!r} is not a positive integer", lineno) from None
            if not 0 <= i < n:
                raise ParseError(f"vertex {i} out of range", lineno)
            if k < 1:
                raise ParseError(f"weight {k} is not a positive integer", lineno)
            if i in weights:
                raise ParseError(f"duplicate weight for vertex {i}", lineno)
            weights[i] = k
            continue
        if weights:
            raise ParseError("edge line after weight lines", lineno)
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integer endpoints, got {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges), weights


def parse_edge_list(text: str) -> Graph:
    """Read ``n`` followed by one ``u v`` pair per line (0-indexed)."""
    g, _ = _parse(text, allow_weights=False)
    return g


def parse_weighted_tree(text: str, require_weights: bool = True) -> tuple[Graph, WeightMap]:
    """Edge list followed by one ``w i k`` line per vertex. Must describe a tree."""
    g, weights = _parse(text, allow_weights=True)
    if not g.is_tree():
        raise ParseError("input is not a tree")
    if require_weights and len(weights) != g.n:
        missing = sorted(set(range(g.n)) - set(weights))
        raise ParseError(f"missing weights for vertices {missing[:10]}")
    return Graph(g.n, g.edges, tree=True), WeightMap(weights.get(i, 1) for i in range(g.n))


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_weighted_tree(g: Graph, w: WeightMap) -> str:
    w.check_domain(g)
    return format_edge_list(g) + "".join(f"w {i} {k}\n" for i, k in enumerate(w))


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
