"""Immutable weighted graphs, validation, and the ``p dptree`` text format.

File format::

    # comment
    p dptree <n> <m>
    e <a> <b> <w>        (exactly m lines, 0-based ids, decimal weight)

Weights are held as exact integers in units of 10**-9 (see :mod:`dptree.weights`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .weights import WeightFormatError, format_weight, parse_weight

SELF_LOOP = "SELF_LOOP"
PARALLEL_EDGE = "PARALLEL_EDGE"
NONPOSITIVE_WEIGHT = "NONPOSITIVE_WEIGHT"
DISCONNECTED = "DISCONNECTED"
BAD_VERTEX_ID = "BAD_VERTEX_ID"
# Never emitted: weights are Python ints, so sums cannot overflow.
OVERFLOW_RISK = "OVERFLOW_RISK"

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def codes(self) -> set[str]:
        return {code for code, _ in self.failures}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{code}: {msg}" for code, msg in self.failures)


class GraphFormatError(ValueError):
    """Malformed graph or tree text. ``line`` is 1-based, or None."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"invalid graph: {report}")


def _components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        adj[a].append(b)
        adj[b].append(a)
    comp = [-1] * n
    label = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = label
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if comp[y] == -1:
                    comp[y] = label
                    queue.append(y)
        label += 1
    return comp


def validate(n: int, edges: Sequence[tuple[int, int, int]], *, require_connected: bool = True) -> ValidationReport:
    """Check raw graph data and report every failure class found.

    Connectivity is only examined when the edge list is otherwise usable
    (all ids in range).
    """
    failures: list[tuple[str, str]] = []
    if n < 1:
        failures.append((BAD_VERTEX_ID, f"vertex count must be positive, got {n}"))
    seen: set[tuple[int, int]] = set()
    ids_ok = True
    for a, b, w in edges:
        if not (0 <= a < n and 0 <= b < n):
            ids_ok = False
            failures.append((BAD_VERTEX_ID, f"edge ({a}, {b}) has a vertex id outside 0..{n - 1}"))
            continue
        if a == b:
            failures.append((SELF_LOOP, f"self-loop at vertex {a}"))
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            failures.append((PARALLEL_EDGE, f"edge {key} appears more than once"))
        seen.add(key)
        if w <= 0:
            failures.append((NONPOSITIVE_WEIGHT, f"edge {key} has weight {format_weight(w)} <= 0"))
    if require_connected and ids_ok and n >= 1:
        comp = _components(n, seen)
        count = max(comp) + 1
        if count > 1:
            failures.append((DISCONNECTED, f"graph has {count} connected components"))
    return ValidationReport(tuple(failures))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Simple undirected graph on vertices ``0..n-1`` with positive integer weights.

    ``edges`` is kept sorted with ``a < b``. Construction validates and raises
    :class:`GraphValidationError`; pass ``connected=False`` to allow
    disconnected graphs (used for induced subgraphs).
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    _weights: dict[tuple[int, int], int] = field(repr=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]], *, connected: bool = True):
        edges = [(int(a), int(b), int(w)) for a, b, w in edges]
        report = validate(n, edges, require_connected=connected)
        if not report.ok:
            raise GraphValidationError(report)
        canon = sorted((min(a, b), max(a, b), w) for a, b, w in edges)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a, b, w in canon:
            adj[a].append((b, w))
            adj[b].append((a, w))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(row)) for row in adj))
        object.__setattr__(self, "_weights", {(a, b): w for a, b, w in canon})

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, a: int, b: int) -> int:
        """Weight of edge ``ab``; KeyError if absent."""
        return self._weights[(min(a, b), max(a, b))]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._weights

    def neighbors(self, x: int) -> tuple[tuple[int, int], ...]:
        return self.adjacency[x]

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def is_connected(self) -> bool:
        return max(_components(self.n, ((a, b) for a, b, _ in self.edges))) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def parse_graph(text: str) -> WeightedGraph:
    """Parse the ``p dptree`` format into a validated, connected graph."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "dptree":
                raise GraphFormatError("header must be 'p dptree <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("header counts out of range", lineno)
            header = (n, m)
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 4:
                raise GraphFormatError("edge line must be 'e <a> <b> <w>'", lineno)
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("vertex ids must be integers", lineno) from None
            try:
                w = parse_weight(parts[3])
            except WeightFormatError as exc:
                raise GraphFormatError(str(exc), lineno) from None
            edges.append((a, b, w))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p dptree' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return WeightedGraph(n, edges)


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"p dptree {g.n} {g.m}"]
    lines.extend(f"e {a} {b} {format_weight(w)}" for a, b, w in g.edges)
    return "\n".join(lines)


def read_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: WeightedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g) + "\n")


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph with its id maps. ``original[i]`` is the old id of new vertex i."""

    graph: WeightedGraph
    original: tuple[int, ...]
    local: dict[int, int]


def induced_subgraph(g: WeightedGraph, vertices: Iterable[int]) -> Subgraph:
    """G[s]: keep the edges with both endpoints in ``vertices``.

    New ids follow the sorted order of the old ids. The result may be
    disconnected.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("induced subgraph needs at least one vertex")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise ValueError(f"vertex id out of range 0..{g.n - 1}")
    local = {old: new for new, old in enumerate(keep)}
    sub_edges = [(local[a], local[b], w) for a, b, w in g.edges if a in local and b in local]
    return Subgraph(WeightedGraph(len(keep), sub_edges, connected=False), tuple(keep), local)
