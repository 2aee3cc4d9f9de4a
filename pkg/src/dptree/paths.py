"""Exact Dijkstra with shortest-path multiplicity flags and distance-to-set queries."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .graph import WeightedGraph


@dataclass(frozen=True)
class DistanceMap:
    """Single-source distances.

    ``parent[x]`` is the smallest-id predecessor on a shortest path, and
    ``multi[x]`` is True iff more than one shortest source-x path exists.
    """

    source: int
    dist: tuple[int, ...]
    parent: tuple[int | None, ...]
    multi: tuple[bool, ...]

    def path_to(self, x: int) -> list[int]:
        """Vertices from the source to ``x`` along parent links."""
        out = [x]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        out.reverse()
        return out


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    prefix: tuple[int, ...]

    @property
    def k(self) -> int:
        """Index of the last vertex (the path has k edges)."""
        return len(self.vertices) - 1

    @property
    def length(self) -> int:
        return self.prefix[-1]

    def gap(self, i: int, j: int) -> int:
        """d_G(v_i, v_j), read off prefix sums."""
        return abs(self.prefix[j] - self.prefix[i])

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:])]


@dataclass(frozen=True)
class SetDistance:
    """Distance from every vertex to an ordered anchor list.

    ``nearest[x]`` holds the indices (into ``anchors``) of all anchors at
    minimum distance; ``per_anchor[i]`` is the full map from ``anchors[i]``.
    """

    anchors: tuple[int, ...]
    dist_to_set: tuple[int, ...]
    nearest: tuple[frozenset[int], ...]
    per_anchor: tuple[DistanceMap, ...]


def _check_vertex(g: WeightedGraph, x: int, name: str = "vertex") -> None:
    if not 0 <= x < g.n:
        raise ValueError(f"{name} {x} out of range 0..{g.n - 1}")


def sssp(g: WeightedGraph, s: int) -> DistanceMap:
    _check_vertex(g, s, "source")
    inf = None
    dist: list[int | None] = [inf] * g.n
    dist[s] = 0
    heap = [(0, s)]
    done = [False] * g.n
    order: list[int] = []
    while heap:
        d, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = True
        order.append(x)
        for y, w in g.adjacency[x]:
            nd = d + w
            if dist[y] is None or nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))

    # Weights are positive, so every tight predecessor is settled earlier in `order`.
    parent: list[int | None] = [None] * g.n
    multi = [False] * g.n
    for x in order:
        if x == s:
            continue
        preds = [y for y, w in g.adjacency[x] if dist[y] is not None and dist[y] + w == dist[x]]
        parent[x] = min(preds)
        multi[x] = len(preds) > 1 or multi[parent[x]]
    return DistanceMap(s, tuple(dist), tuple(parent), tuple(multi))


def unique_shortest_path(g: WeightedGraph, u: int, v: int) -> PathWitness | None:
    """The shortest u-v path if it is the only one, else None."""
    if u == v:
        raise ValueError("u and v must be distinct")
    dm = sssp(g, u)
    _check_vertex(g, v)
    if dm.dist[v] is None:
        raise ValueError(f"{v} is unreachable from {u}")
    if dm.multi[v]:
        return None
    vertices = dm.path_to(v)
    return PathWitness(tuple(vertices), tuple(dm.dist[x] for x in vertices))


def distances_from_set(g: WeightedGraph, anchors: Sequence[int]) -> SetDistance:
    anchors = tuple(anchors)
    if not anchors:
        raise ValueError("anchor list is empty")
    if len(set(anchors)) != len(anchors):
        raise ValueError("anchors must be distinct")
    maps = tuple(sssp(g, a) for a in anchors)
    best: list[int] = []
    nearest: list[frozenset[int]] = []
    for x in range(g.n):
        row = [m.dist[x] for m in maps]
        low = min(row)
        best.append(low)
        nearest.append(frozenset(i for i, d in enumerate(row) if d == low))
    return SetDistance(anchors, tuple(best), tuple(nearest), maps)


def covering_shortest_path(g: WeightedGraph, u: int, v: int) -> PathWitness | None:
    """The shortest u-v path through every vertex that lies on some shortest u-v path.

    Returns None if no single shortest path covers them all. When the
    shortest path is unique this is that path; otherwise it exists only when
    the alternatives are chords skipping vertices of one longest route.
    """
    if u == v:
        raise ValueError("u and v must be distinct")
    du, dv = sssp(g, u).dist, sssp(g, v).dist
    total = du[v]
    on_some = sorted((du[x], x) for x in range(g.n) if du[x] + dv[x] == total)
    for (d1, a), (d2, b) in zip(on_some, on_some[1:]):
        if d1 == d2 or not g.has_edge(a, b) or g.weight(a, b) != d2 - d1:
            return None
    return PathWitness(tuple(x for _, x in on_some), tuple(d for d, _ in on_some))
