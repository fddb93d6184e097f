"""Concentration of integer-weighted trees.

At an anchor ``v`` of weight 1, a class of ``m >= 2`` pairwise symmetric
branches (components of ``T - v`` that are weight-preserving isomorphic as
rooted trees hanging off ``v``) is replaced by a single copy whose weights are
multiplied by ``m``. Weighted PSD throttling is unchanged by this.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graphs import Graph, WeightMap

__all__ = [
    "Branch",
    "BranchDecomposition",
    "Concentrated",
    "branches_at",
    "concentrate_at",
    "full_concentration",
    "lift_set",
]


@dataclass(frozen=True)
class Branch:
    root: int
    vertices: frozenset[int]
    code: str


@dataclass(frozen=True)
class BranchDecomposition:
    anchor: int
    branches: tuple[Branch, ...]

    def symmetric_classes(self) -> list[tuple[Branch, ...]]:
        """Maximal classes of mutually symmetric branches with at least two members."""
        groups: dict[str, list[Branch]] = {}
        for b in self.branches:
            groups.setdefault(b.code, []).append(b)
        classes = [tuple(sorted(g, key=lambda b: min(b.vertices))) for g in groups.values() if len(g) > 1]
        return sorted(classes, key=lambda c: min(c[0].vertices))


class Concentrated(NamedTuple):
    tree: Graph
    weights: WeightMap
    origins: tuple[frozenset[int], ...]  # original vertices represented by each vertex
    changed: bool


class _Work:
    """Mutable tree keyed by original vertex ids."""

    def __init__(self, t: Graph, w: WeightMap, origins=None):
        if not t.is_tree():
            raise ValueError("concentration is defined on trees only")
        w.check_domain(t)
        self.adj = {v: set(t.adjacency[v]) for v in range(t.n)}
        self.weight = dict(enumerate(w.weights))
        if origins is None:
            origins = [frozenset([v]) for v in range(t.n)]
        self.origin = dict(enumerate(origins))
        self.labels = t.labels

    def rooted_order(self, root: int, parent: int) -> tuple[list[int], dict[int, list[int]]]:
        """Preorder of the branch below ``parent`` starting at ``root``, plus children lists."""
        order = []
        children: dict[int, list[int]] = {}
        stack = [(root, parent)]
        while stack:
            x, par = stack.pop()
            order.append(x)
            kids = [y for y in self.adj[x] if y != par]
            children[x] = kids
            stack.extend((y, x) for y in kids)
        return order, children

    def codes(self, root: int, parent: int) -> dict[int, str]:
        order, children = self.rooted_order(root, parent)
        code: dict[int, str] = {}
        for x in reversed(order):
            code[x] = f"({self.weight[x]}" + "".join(sorted(code[c] for c in children[x])) + ")"
        return code

    def canonical_listing(self, root: int, parent: int) -> list[int]:
        """Vertices of the branch in an order that aligns isomorphic branches position by position."""
        code = self.codes(root, parent)
        out = []
        stack = [(root, parent)]
        while stack:
            x, par = stack.pop()
            out.append(x)
            kids = sorted((y for y in self.adj[x] if y != par), key=lambda y: (code[y], y))
            stack.extend((y, x) for y in reversed(kids))
        return out

    def branches(self, v: int) -> BranchDecomposition:
        out = []
        for r in sorted(self.adj[v]):
            order, _ = self.rooted_order(r, v)
            out.append(Branch(r, frozenset(order), self.codes(r, v)[r]))
        return BranchDecomposition(v, tuple(out))

    def concentrate(self, v: int) -> bool:
        changed = False
        for cls in self.branches(v).symmetric_classes():
            m = len(cls)
            keep = self.canonical_listing(cls[0].root, v)
            for other in cls[1:]:
                listing = self.canonical_listing(other.root, v)
                for x, y in zip(keep, listing):
                    self.origin[x] = self.origin[x] | self.origin[y]
                self.adj[v].discard(other.root)
                for y in listing:
                    del self.adj[y], self.weight[y], self.origin[y]
            for x in keep:
                self.weight[x] *= m
            changed = True
        return changed

    def distances(self, root: int) -> dict[int, int]:
        dist = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist

    def freeze(self, changed: bool) -> Concentrated:
        keep = sorted(self.adj)
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[x], index[y]) for x in keep for y in self.adj[x] if x < y]
        labels = [self.labels[v] for v in keep] if self.labels else None
        tree = Graph(len(keep), edges, labels, tree=True)
        return Concentrated(
            tree,
            WeightMap(self.weight[v] for v in keep),
            tuple(frozenset(self.origin[v]) for v in keep),
            changed,
        )


def branches_at(t: Graph, w: WeightMap, v: int) -> BranchDecomposition:
    """Components of ``t - v`` with weight-annotated canonical codes.

    Two branches are symmetric exactly when their codes are equal.
    """
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} not in tree")
    return _Work(t, w).branches(v)


def concentrate_at(t: Graph, w: WeightMap, v: int) -> Concentrated:
    """Single concentration at ``v``; every symmetric class at ``v`` is merged.

    Raises ValueError if ``w(v) != 1``. With no symmetric class the input comes
    back unchanged and ``changed`` is False.
    """
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} not in tree")
    if w[v] != 1:
        raise ValueError(f"anchor {v} has weight {w[v]}; concentration needs weight 1")
    work = _Work(t, w)
    return work.freeze(work.concentrate(v))


def full_concentration(t: Graph, w: WeightMap | None = None, root: int = 0) -> Concentrated:
    """Concentrate at every eligible anchor until nothing changes.

    Each pass visits anchors by decreasing distance from ``root`` (ties by
    index). The branch containing the smallest vertex of a class is the one
    kept, so ``root`` always survives.
    """
    if w is None:
        w = WeightMap.uniform(t.n)
    work = _Work(t, w)
    changed_any = False
    while True:
        dist = work.distances(root)
        anchors = sorted(dist, key=lambda x: (-dist[x], x))
        changed = False
        for v in anchors:
            if v in work.adj and work.weight[v] == 1:
                changed |= work.concentrate(v)
        changed_any |= changed
        if not changed:
            return work.freeze(changed_any)


def lift_set(original: Graph, concentrated: Concentrated, b_conc: Iterable[int]) -> frozenset[int]:
    """Symmetric subset of the original tree corresponding to ``b_conc``."""
    b_conc = set(b_conc)
    bad = [x for x in b_conc if not 0 <= x < concentrated.tree.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} are not in the concentrated tree")
    lifted = frozenset().union(*(concentrated.origins[x] for x in b_conc))
    if any(not 0 <= x < original.n for x in lifted):
        raise ValueError("concentration record does not belong to this tree")
    return lifted
