"""Brute-force ground truth: spanning-tree enumeration, exhaustive common-DP-tree
search, deletion-contraction tree counts, and seeded random instances."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterator

from .graph import WeightedGraph
from .paths import sssp
from .trees import SpanningTree, tree_distances
from .weights import to_units

DEFAULT_CAP = 10**7


class EnumerationCapError(RuntimeError):
    pass


def tree_count_bound(g: WeightedGraph) -> int:
    """Upper bound on the number of spanning trees.

    Rooting a tree at ``r`` gives every other vertex a distinct parent
    among its neighbours, so the count is at most the product of the
    non-root degrees. The highest-degree vertex is used as root.
    """
    degrees = sorted(len(row) for row in g.adjacency)
    return prod(degrees[:-1]) if degrees else 1


def enumerate_spanning_trees(g: WeightedGraph, cap: int = DEFAULT_CAP) -> Iterator[SpanningTree]:
    """Yield every spanning tree of ``g`` exactly once.

    Edges are decided in canonical order, include-branch first. An edge
    closing a cycle with the chosen edges is forced out; an edge that is a
    bridge of the still-available edges is forced in.
    """
    bound = tree_count_bound(g)
    if bound > cap:
        raise EnumerationCapError(f"up to {bound} spanning trees exceeds the cap of {cap}")
    n = g.n
    edges = [(a, b) for a, b, _ in g.edges]
    m = len(edges)
    if n == 1:
        yield SpanningTree(g, [])
        return

    def find(comp: list[int], x: int) -> int:
        while comp[x] != x:
            x = comp[x]
        return x

    def connected_without(excluded: list[bool], skip: int) -> bool:
        adj: list[list[int]] = [[] for _ in range(n)]
        for idx, (a, b) in enumerate(edges):
            if not excluded[idx] and idx != skip:
                adj[a].append(b)
                adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    chosen: list[tuple[int, int]] = []
    excluded = [False] * m
    # Union-find without path compression so that unions can be undone.
    comp = list(range(n))

    def rec(idx: int) -> Iterator[SpanningTree]:
        if len(chosen) == n - 1:
            yield SpanningTree(g, chosen)
            return
        if idx == m:
            return
        a, b = edges[idx]
        ra, rb = find(comp, a), find(comp, b)
        if ra == rb:
            excluded[idx] = True
            yield from rec(idx + 1)
            excluded[idx] = False
            return
        comp[rb] = ra
        chosen.append((a, b))
        yield from rec(idx + 1)
        chosen.pop()
        comp[rb] = rb
        if connected_without(excluded, idx):
            excluded[idx] = True
            yield from rec(idx + 1)
            excluded[idx] = False

    yield from rec(0)


def count_spanning_trees(g: WeightedGraph) -> int:
    """Spanning-tree count by deletion-contraction on the underlying multigraph.

    Independent of :func:`enumerate_spanning_trees`; meant for small graphs.
    """

    def count(vertices: frozenset[int], mult: Counter) -> int:
        if len(vertices) == 1:
            return 1
        if not mult:
            return 0
        (a, b), k = min(mult.items())
        deleted = Counter(mult)
        del deleted[(a, b)]
        # contract b into a
        contracted: Counter = Counter()
        for (x, y), c in deleted.items():
            x, y = (a if x == b else x), (a if y == b else y)
            if x != y:
                contracted[(min(x, y), max(x, y))] += c
        return count(vertices, deleted) + k * count(vertices - {b}, contracted)

    return count(frozenset(range(g.n)), Counter({(a, b): 1 for a, b, _ in g.edges}))


def spanning_trees_by_subsets(g: WeightedGraph) -> list[tuple[tuple[int, int], ...]]:
    """Naive cross-check: every (n-1)-edge subset that connects all vertices."""
    pairs = [(a, b) for a, b, _ in g.edges]
    out = []
    for subset in combinations(pairs, g.n - 1):
        seen = {0}
        stack = [0]
        adj: dict[int, list[int]] = {}
        for a, b in subset:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == g.n:
            out.append(subset)
    return out


def _preserves(t: SpanningTree, target: tuple[int, ...], r: int) -> bool:
    return tree_distances(t, r).dist == target


def common_dp_trees(g: WeightedGraph, u: int, v: int, cap: int = DEFAULT_CAP) -> Iterator[SpanningTree]:
    """Every spanning tree that preserves distances from both ``u`` and ``v``."""
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    du, dv = sssp(g, u).dist, sssp(g, v).dist
    for t in enumerate_spanning_trees(g, cap):
        if _preserves(t, du, u) and _preserves(t, dv, v):
            yield t


def brute_force_common_dp_tree(g: WeightedGraph, u: int, v: int, cap: int = DEFAULT_CAP) -> SpanningTree | None:
    """First common DP-tree in enumeration order, or None."""
    return next(common_dp_trees(g, u, v, cap), None)


def count_common_dp_trees(g: WeightedGraph, u: int, v: int, cap: int = DEFAULT_CAP) -> int:
    return sum(1 for _ in common_dp_trees(g, u, v, cap))


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    max_weight: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not self.n - 1 <= self.m <= self.n * (self.n - 1) // 2:
            raise ValueError(f"m must be in [{self.n - 1}, {self.n * (self.n - 1) // 2}] for n={self.n}")
        if self.max_weight < 1:
            raise ValueError("max_weight must be a positive integer")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def random_connected_graph(spec: GenSpec) -> WeightedGraph:
    """Random tree on a shuffled vertex order, then distinct extra edges.

    Weights are integers drawn uniformly from ``[1, max_weight]``.
    """
    rng = random.Random(spec.seed)
    order = list(range(spec.n))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, spec.n):
        a, b = order[i], order[rng.randrange(i)]
        pairs.add((min(a, b), max(a, b)))
    rest = [(a, b) for a, b in combinations(range(spec.n), 2) if (a, b) not in pairs]
    pairs.update(rng.sample(rest, spec.m - (spec.n - 1)))
    edges = [(a, b, to_units(rng.randint(1, spec.max_weight))) for a, b in sorted(pairs)]
    return WeightedGraph(spec.n, edges)
