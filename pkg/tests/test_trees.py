import pytest

from dptree import InvalidTreeError, SpanningTree, parse_tree, serialize_tree, tree_distances, verify_dp_tree
from dptree.graph import GraphFormatError
from dptree.trees import DistanceMismatch

from helpers import A, C, U, graph

TREE_C = [(0, 1), (1, 2), (1, 3)]


def test_spanning_tree_rejects_foreign_edge():
    with pytest.raises(InvalidTreeError):
        SpanningTree(C, [(0, 1), (1, 2), (0, 2)])


def test_spanning_tree_rejects_cycle():
    g = graph(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)])
    with pytest.raises(InvalidTreeError):
        SpanningTree(g, [(0, 1), (1, 2), (0, 2)])


def test_spanning_tree_rejects_wrong_size():
    with pytest.raises(InvalidTreeError):
        SpanningTree(C, [(0, 1), (1, 2)])


def test_tree_distances_path():
    g = graph(3, [(0, 1, 1), (1, 2, 1)])
    dm = tree_distances(SpanningTree(g, [(0, 1), (1, 2)]), 0)
    assert dm.dist == (0, U, 2 * U)
    assert not any(dm.multi)


def test_tree_distances_instance_c():
    assert tree_distances(SpanningTree(C, TREE_C), 0).dist == (0, 2 * U, 4 * U, 4 * U)


def test_tree_distances_star():
    g = graph(4, [(0, 1, 3), (0, 2, 5), (0, 3, 1)])
    t = SpanningTree(g, [(0, 1), (0, 2), (0, 3)])
    assert tree_distances(t, 0).dist == (0, 3 * U, 5 * U, U)


def test_tree_distances_bad_root():
    with pytest.raises(ValueError):
        tree_distances(SpanningTree(C, TREE_C), 9)


def test_verify_instance_c():
    t = SpanningTree(C, TREE_C)
    assert verify_dp_tree(C, t, 0) is None
    assert verify_dp_tree(C, t, 2) is None


def test_verify_failure_witness():
    t = SpanningTree(C, [(0, 1), (1, 2), (0, 3)])
    assert verify_dp_tree(C, t, 2) == DistanceMismatch(2, 3, 9 * U, 4 * U)
    assert verify_dp_tree(C, t, 0) == DistanceMismatch(0, 3, 5 * U, 4 * U)


def test_verify_own_root_distance_zero():
    t = SpanningTree(A, [(0, 1), (1, 2)])
    bad = verify_dp_tree(A, t, 0)
    assert bad.vertex == 2 and bad.tree_dist == 2 * U and bad.graph_dist == U


def test_verify_graph_mismatch():
    with pytest.raises(InvalidTreeError):
        verify_dp_tree(A, SpanningTree(C, TREE_C), 0)


def test_tree_file_round_trip():
    t = SpanningTree(C, [(3, 1), (2, 1), (1, 0)])
    text = serialize_tree(t)
    assert text == "e 0 1\ne 1 2\ne 1 3"
    assert parse_tree(text, C) == t


def test_tree_file_errors():
    with pytest.raises(GraphFormatError):
        parse_tree("e 0 1 2\n", C)
    with pytest.raises(InvalidTreeError):
        parse_tree("e 0 1\ne 1 0\ne 1 2", C)
    with pytest.raises(InvalidTreeError):
        parse_tree("e 0 1\ne 1 2\ne 0 2", C)


def test_tree_path():
    assert SpanningTree(C, TREE_C).path(3, 2) == [3, 1, 2]
