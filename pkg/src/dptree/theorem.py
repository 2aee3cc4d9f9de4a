"""Deciding and constructing common distance-preserving spanning trees.

The conditions checked, in order:

1. the shortest u-v path ``P = (v_0, ..., v_k)`` is unique;
2. every vertex has a unique nearest vertex on ``P`` (this splits the
   vertices into blocks ``V_0, ..., V_k``);
3. every edge ``xy`` with ``x`` in ``V_i`` and ``y`` in ``V_j`` satisfies
   ``w >= d(v_i, v_j)`` (the weight clause) and
   ``|d(v_i, x) - d(v_j, y)| <= w - d(v_i, v_j)`` (the balance clause).

When they hold, the tree made of ``P`` plus a shortest-path tree of each
``G[V_i]`` rooted at ``v_i`` preserves distances from both ends. Conditions
2 and 3 are also necessary; condition 1 is not in general (see
:func:`check_conditions`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import WeightedGraph, induced_subgraph
from .paths import PathWitness, covering_shortest_path, distances_from_set, sssp, unique_shortest_path
from .trees import SpanningTree

UNIQUE = "unique"
COVERING = "covering"

WEIGHT_CLAUSE = "WEIGHT_CLAUSE"
BALANCE_CLAUSE = "BALANCE_CLAUSE"


@dataclass(frozen=True)
class Partition:
    """Vertices grouped by their nearest vertex on the path.

    ``block_of[x] = i`` means ``x`` is in ``V_i``; ``anchor_dist[x]`` is
    ``d_G(v_i, x)``.
    """

    path: PathWitness
    block_of: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]
    anchor_dist: tuple[int, ...]

    def anchor(self, x: int) -> int:
        return self.path.vertices[self.block_of[x]]


@dataclass(frozen=True)
class TieWitness:
    """Vertex with two or more nearest path vertices (indices into the path)."""

    vertex: int
    anchors: tuple[int, ...]
    distance: int


@dataclass(frozen=True)
class EdgeViolation:
    x: int
    y: int
    weight: int
    block_x: int
    block_y: int
    gap: int  # d_G(v_i, v_j)
    imbalance: int  # |d_G(v_i, x) - d_G(v_j, y)|
    clause: str


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking the three conditions in order.

    A later condition is None (not evaluated) once an earlier one fails.
    """

    u: int
    v: int
    path: PathWitness | None
    partition: Partition | None = None
    tie: TieWitness | None = None
    violation: EdgeViolation | None = None

    @property
    def cond1(self) -> bool:
        return self.path is not None

    @property
    def cond2(self) -> bool | None:
        if not self.cond1:
            return None
        return self.partition is not None

    @property
    def cond3(self) -> bool | None:
        if not self.cond2:
            return None
        return self.violation is None

    @property
    def overall(self) -> bool:
        return bool(self.cond3)

    @property
    def failed_condition(self) -> int | None:
        for number, ok in ((1, self.cond1), (2, self.cond2), (3, self.cond3)):
            if not ok:
                return number
        return None


def build_partition(g: WeightedGraph, p: PathWitness) -> Partition | TieWitness:
    """Group vertices by nearest path vertex, or return the smallest-id tie."""
    vs = p.vertices
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge, so the path is not in the graph")
    sd = distances_from_set(g, vs)
    block_of: list[int] = []
    anchor_dist: list[int] = []
    for x in range(g.n):
        near = sd.nearest[x]
        if len(near) > 1:
            return TieWitness(x, tuple(sorted(near)), sd.dist_to_set[x])
        (i,) = near
        block_of.append(i)
        anchor_dist.append(sd.dist_to_set[x])
    members: list[set[int]] = [set() for _ in vs]
    for x, i in enumerate(block_of):
        members[i].add(x)
    return Partition(p, tuple(block_of), tuple(frozenset(b) for b in members), tuple(anchor_dist))


def edge_violation(g: WeightedGraph, part: Partition) -> EdgeViolation | None:
    """First edge (in canonical order) breaking condition 3, if any."""
    for x, y, w in g.edges:
        i, j = part.block_of[x], part.block_of[y]
        if i == j:
            continue
        gap = part.path.gap(i, j)
        imbalance = abs(part.anchor_dist[x] - part.anchor_dist[y])
        if w < gap:
            return EdgeViolation(x, y, w, i, j, gap, imbalance, WEIGHT_CLAUSE)
        if imbalance > w - gap:
            return EdgeViolation(x, y, w, i, j, gap, imbalance, BALANCE_CLAUSE)
    return None


def check_conditions(g: WeightedGraph, u: int, v: int, path_rule: str = UNIQUE) -> ConditionReport:
    """Evaluate the conditions in order, stopping at the first failure.

    With ``path_rule="unique"`` condition 1 demands a unique shortest u-v
    path. That is stronger than necessary: a shortest path ``u-a-b`` plus an
    edge ``u-b`` of weight ``d(u, b)`` still allows a common tree that uses
    the longer route. ``path_rule="covering"`` instead takes the shortest
    path through every vertex on any shortest u-v path
    (:func:`~dptree.paths.covering_shortest_path`), which makes the three
    conditions exact.
    """
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    if path_rule == UNIQUE:
        path = unique_shortest_path(g, u, v)
    elif path_rule == COVERING:
        path = covering_shortest_path(g, u, v)
    else:
        raise ValueError(f"unknown path rule {path_rule!r}")
    if path is None:
        return ConditionReport(u, v, None)
    part = build_partition(g, path)
    if isinstance(part, TieWitness):
        return ConditionReport(u, v, path, tie=part)
    return ConditionReport(u, v, path, part, violation=edge_violation(g, part))


def block_tree_edges(g: WeightedGraph, part: Partition, i: int) -> list[tuple[int, int]]:
    """Edges of the shortest-path tree of ``G[V_i]`` rooted at ``v_i``, in original ids."""
    sub = induced_subgraph(g, part.blocks[i])
    root = sub.local[part.path.vertices[i]]
    dm = sssp(sub.graph, root)
    pairs = []
    for x, px in enumerate(dm.parent):
        if px is None:
            continue
        a, b = sub.original[x], sub.original[px]
        pairs.append((min(a, b), max(a, b)))
    return pairs


@dataclass(frozen=True)
class Construction:
    report: ConditionReport
    tree: SpanningTree | None

    @property
    def found(self) -> bool:
        return self.tree is not None


def construct_common_dp_tree(g: WeightedGraph, u: int, v: int, path_rule: str = UNIQUE) -> Construction:
    report = check_conditions(g, u, v, path_rule)
    if not report.overall:
        return Construction(report, None)
    part = report.partition
    pairs = set(part.path.edges())
    for i in range(len(part.blocks)):
        pairs.update(block_tree_edges(g, part, i))
    return Construction(report, SpanningTree(g, pairs))


def potential(part: Partition, x: int) -> int:
    """d_G(u, v_i) + d_G(v_i, x) for the block ``V_i`` holding ``x``."""
    return part.path.prefix[part.block_of[x]] + part.anchor_dist[x]
