"""Instances and slow, independent reference computations for the tests."""

from dptree import WeightedGraph, parse_graph
from dptree.weights import SCALE

U = SCALE


def graph(n, edges):
    """Build a graph from integer weights given in input units."""
    return WeightedGraph(n, [(a, b, w * U) for a, b, w in edges])


TRIANGLE = "p dptree 3 3\ne 0 1 1\ne 1 2 1\ne 0 2 1"
C4 = "p dptree 4 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 0 3 1"
INSTANCE_C = "p dptree 4 4\ne 0 1 2\ne 1 2 2\ne 1 3 2\ne 0 3 5"
INSTANCE_D = "p dptree 4 4\ne 0 1 2\ne 1 2 2\ne 1 3 2\ne 0 3 3"
INSTANCE_E = "p dptree 5 5\ne 0 1 3\ne 1 2 3\ne 0 3 4\ne 2 4 4\ne 3 4 1"

A = parse_graph(TRIANGLE)
B = parse_graph(C4)
C = parse_graph(INSTANCE_C)
D = parse_graph(INSTANCE_D)
E = parse_graph(INSTANCE_E)
K4 = graph(4, [(a, b, 1) for a in range(4) for b in range(a + 1, 4)])


def simple_paths(g, s, t):
    """Every simple s-t path as (length, vertex list), by exhaustive DFS."""
    out = []

    def walk(x, seen, length, trail):
        if x == t:
            out.append((length, list(trail)))
            return
        for y, w in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                trail.append(y)
                walk(y, seen, length + w, trail)
                trail.pop()
                seen.discard(y)

    walk(s, {s}, 0, [s])
    return out


def shortest_path_count(g, s, t):
    paths = simple_paths(g, s, t)
    best = min(length for length, _ in paths)
    return best, sum(1 for length, _ in paths if length == best)


def floyd_warshall(g):
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b, w in g.edges:
        d[a][b] = d[b][a] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d
