import pytest
from hypothesis import given

from conftest import graph_and_subset, graphs
from pmc_atlas import (
    Graph,
    InputError,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_full_component,
    neighborhood_set,
    vset,
)
from pmc_atlas.vertexset import complement, is_subset, members, size

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
STAR4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_vertexset_helpers():
    s = vset([5, 0, 3])
    assert members(s) == [0, 3, 5]
    assert size(s) == 3
    assert complement(s, 6) == vset([1, 2, 4])
    assert is_subset(vset([0, 3]), s)
    assert not is_subset(vset([1]), s)


def test_graph_rejects_bad_input():
    with pytest.raises(InputError, match="self-loop"):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(InputError, match="symmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(InputError, match="wide"):
        Graph.from_edges(65, [])
    assert Graph.from_edges(100, [(0, 99)], wide=True).m == 1
    with pytest.raises(InputError):
        Graph.from_edges(129, [], wide=True)


def test_graph_is_immutable():
    with pytest.raises(AttributeError):
        P3.n = 4


def test_neighborhood_set():
    assert neighborhood_set(P3, vset([1])) == vset([0, 2])
    assert neighborhood_set(C4, 0) == 0
    assert neighborhood_set(K3, vset([0, 1])) == vset([0, 1, 2])
    with pytest.raises(InputError):
        neighborhood_set(P3, vset([3]))


def test_closed_neighborhood():
    assert closed_neighborhood(STAR4, 0) == vset([0, 1, 2, 3])
    assert closed_neighborhood(Graph.from_edges(2, []), 1) == vset([1])
    assert closed_neighborhood(P3, 0) == vset([0, 1])
    with pytest.raises(InputError):
        closed_neighborhood(P3, 3)


def test_components():
    assert components(P3, vset([1])) == [vset([0]), vset([2])]
    assert components(C4, C4.vertices) == []
    assert components(C4, vset([0, 2])) == [vset([1]), vset([3])]
    assert components(Graph.from_edges(5, [(3, 4), (0, 2)])) == [vset([0, 2]), vset([1]), vset([3, 4])]


def test_induced_subgraph():
    sub, index = induced_subgraph(K3, vset([0, 1]))
    assert (sub.n, sub.edges()) == (2, [(0, 1)])
    assert index == {0: 0, 1: 1}
    sub, index = induced_subgraph(C4, C4.vertices)
    assert sub == C4 and index == {v: v for v in range(4)}
    sub, _ = induced_subgraph(C4, vset([0, 1, 2]))
    assert sub.edges() == [(0, 1), (1, 2)]


def test_induced_subgraph_relabels_and_keeps_labels():
    g = Graph.from_edges(4, [(1, 3)], labels=["a", "b", "c", "d"])
    sub, index = induced_subgraph(g, vset([1, 3]))
    assert index == {1: 0, 3: 1}
    assert sub.labels == ("b", "d") and sub.edges() == [(0, 1)]


def test_is_full_component():
    assert is_full_component(P3, vset([1]), vset([0]))
    assert is_full_component(C4, vset([0, 2]), vset([1]))
    assert not is_full_component(STAR4, vset([0, 1]), vset([2]))


def test_is_full_component_rejects_non_components():
    with pytest.raises(InputError):
        is_full_component(P3, vset([1]), vset([0, 2]))
    with pytest.raises(InputError):
        is_full_component(C4, vset([0]), vset([1, 2]))
    with pytest.raises(InputError):
        is_full_component(P3, vset([1]), vset([1]))


@given(graph_and_subset())
def test_components_partition_the_rest(case):
    g, x = case
    comps = components(g, x)
    union = 0
    for c in comps:
        assert c and not union & c
        union |= c
        assert is_subset(neighborhood_set(g, c) & ~c, x)
    assert union == g.vertices & ~x
    assert [min(members(c)) for c in comps] == sorted(min(members(c)) for c in comps)


@given(graphs())
def test_induced_on_everything_keeps_edges(g):
    sub, _ = induced_subgraph(g, g.vertices)
    assert sub.m == g.m
