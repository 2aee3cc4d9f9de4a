"""Spanning trees of a :class:`WeightedGraph`, tree distances, and the tree file format.

A tree file lists the n-1 edges as ``e <a> <b>`` lines; weights come from
the companion graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import GraphFormatError, WeightedGraph, _components
from .paths import DistanceMap, sssp


class InvalidTreeError(ValueError):
    """Edge set is not a spanning tree of the given graph."""


class SpanningTree:
    """An edge subset of ``graph`` forming a spanning tree.

    Edges are stored canonically as sorted ``(a, b)`` pairs with ``a < b``.
    """

    __slots__ = ("graph", "pairs", "_adj")

    def __init__(self, graph: WeightedGraph, pairs: Iterable[tuple[int, int]]):
        canon = sorted({(min(a, b), max(a, b)) for a, b in pairs})
        for a, b in canon:
            if not graph.has_edge(a, b):
                raise InvalidTreeError(f"edge ({a}, {b}) is not in the graph")
        if len(canon) != graph.n - 1:
            raise InvalidTreeError(f"a spanning tree needs {graph.n - 1} edges, got {len(canon)}")
        if max(_components(graph.n, canon)) != 0:
            # n-1 edges and disconnected means there is a cycle
            raise InvalidTreeError("edge set contains a cycle and is not connected")
        self.graph = graph
        self.pairs: tuple[tuple[int, int], ...] = tuple(canon)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
        for a, b in canon:
            w = graph.weight(a, b)
            adj[a].append((b, w))
            adj[b].append((a, w))
        self._adj = tuple(tuple(sorted(row)) for row in adj)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.graph.weight(a, b)) for a, b in self.pairs]

    def neighbors(self, x: int) -> tuple[tuple[int, int], ...]:
        return self._adj[x]

    def path(self, a: int, b: int) -> list[int]:
        """The unique tree path from ``a`` to ``b``."""
        return tree_distances(self, a).path_to(b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.graph == other.graph and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"SpanningTree({list(self.pairs)})"


def tree_distances(t: SpanningTree, r: int) -> DistanceMap:
    n = t.graph.n
    if not 0 <= r < n:
        raise ValueError(f"root {r} out of range 0..{n - 1}")
    dist: list[int] = [0] * n
    parent: list[int | None] = [None] * n
    seen = [False] * n
    seen[r] = True
    queue = deque([r])
    while queue:
        x = queue.popleft()
        for y, w in t.neighbors(x):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                dist[y] = dist[x] + w
                queue.append(y)
    return DistanceMap(r, tuple(dist), tuple(parent), (False,) * n)


@dataclass(frozen=True)
class DistanceMismatch:
    """A vertex whose tree distance from the root differs from its graph distance."""

    root: int
    vertex: int
    tree_dist: int
    graph_dist: int


def verify_dp_tree(g: WeightedGraph, t: SpanningTree, r: int) -> DistanceMismatch | None:
    """Return None if ``t`` preserves all distances from ``r``, else the smallest-id counterexample."""
    if t.graph != g:
        raise InvalidTreeError("tree belongs to a different graph")
    in_tree = tree_distances(t, r).dist
    in_graph = sssp(g, r).dist
    for x in range(g.n):
        if in_tree[x] != in_graph[x]:
            return DistanceMismatch(r, x, in_tree[x], in_graph[x])
    return None


def is_common_dp_tree(g: WeightedGraph, t: SpanningTree, u: int, v: int) -> bool:
    return verify_dp_tree(g, t, u) is None and verify_dp_tree(g, t, v) is None


def parse_tree(text: str, g: WeightedGraph) -> SpanningTree:
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError("tree line must be 'e <a> <b>'", lineno)
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError("vertex ids must be integers", lineno) from None
        key = (min(a, b), max(a, b))
        if key in seen:
            raise InvalidTreeError(f"edge {key} listed twice")
        seen.add(key)
        pairs.append(key)
    return SpanningTree(g, pairs)


def serialize_tree(t: SpanningTree) -> str:
    return "\n".join(f"e {a} {b}" for a, b in t.pairs)
