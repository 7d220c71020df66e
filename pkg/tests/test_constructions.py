import pytest
from hypothesis import given, settings, strategies as st

from oracles import stirling_bruteforce
from pmc_atlas import (
    ContractError,
    Graph,
    InputError,
    PartitionType,
    VertexCover,
    build_Gk,
    build_M,
    build_star,
    check_pmc,
    components,
    constructed_free_pmcs,
    cover_partition,
    enumerate_pmcs,
    induced_subgraph,
    is_free,
    is_vertex_cover,
    lift_free_pmc,
    pmc_from_tripartition,
    random_graph_with_cover,
    serialize_edge_list,
    tripartitions,
    vset,
)
from pmc_atlas.constructions import permute_integers
from pmc_atlas.errors import BudgetError

K2 = Graph.from_edges(2, [(0, 1)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_build_M_sizes():
    mg = build_M(K2, VertexCover(vset([0])))
    assert mg.graph.n == 3
    assert mg.graph.adj[mg.outer_index[vset([0])]] == vset([0])
    assert build_M(P3, VertexCover(vset([1]))).graph.n == 4
    mg = build_M(K2, VertexCover(vset([0, 1])))
    assert mg.graph.n == 5
    assert [mg.graph.label(v) for v in range(2, 5)] == ["M_{0}", "M_{1}", "M_{0,1}"]


def test_build_M_structure():
    g = Graph.from_edges(5, [(0, 1), (0, 3), (2, 4), (1, 2)])
    vk = VertexCover(vset([0, 2]))
    mg = build_M(g, vk)
    assert mg.graph.n == g.n + 3 and mg.k == 2
    for x, vid in mg.outer_index.items():
        assert mg.graph.adj[vid] == x
    sub, _ = induced_subgraph(mg.graph, mg.original)
    assert sub.edges() == g.edges()
    assert is_vertex_cover(mg.graph, mg.inner)


def test_build_M_errors():
    with pytest.raises(InputError):
        build_M(P3, VertexCover(vset([0])))
    big = Graph.from_edges(20, [(i, i + 10) for i in range(10)])
    with pytest.raises(BudgetError):
        build_M(big, VertexCover(vset(range(10))), cap=8)
    with pytest.raises(BudgetError):
        build_M(big, VertexCover(vset(range(10))))


def test_build_Gk_shapes():
    g2 = build_Gk(2).graph
    assert g2.n == 3 and g2.edges() == [(0, 2), (1, 2)]
    g3 = build_Gk(3).graph
    assert (g3.n, g3.m) == (6, 6)
    assert all(g3.degree(v) == 2 for v in range(6))
    assert len(components(g3)) == 1  # connected 2-regular graph: a single cycle
    g5 = build_Gk(5).graph
    assert (g5.n, g5.m) == (15, 20)
    assert build_Gk(3).graph.label(5) == "(2,3)"
    with pytest.raises(InputError):
        build_Gk(0)


def test_build_Gk_sides_are_independent():
    gk = build_Gk(6)
    ints = gk.integer_vertices
    pairs = gk.graph.vertices & ~ints
    for v in range(gk.graph.n):
        side = ints if v < gk.k else pairs
        assert gk.graph.adj[v] & side == 0
    for (i, j), vid in gk.pair_index.items():
        assert gk.graph.adj[vid] == vset([i - 1, j - 1])


def test_build_star():
    assert build_star(2).edges() == [(0, 1)]
    assert build_star(4).edges() == [(0, 1), (0, 2), (0, 3)]
    assert build_star(3).edges() == [(0, 1), (0, 2)]
    with pytest.raises(InputError):
        build_star(1)


def test_tripartitions_count_matches_bruteforce_stirling():
    for k in range(1, 9):
        parts = tripartitions(k)
        assert len(parts) == stirling_bruteforce(k, 3)
        assert len(set(parts)) == len(parts)


def test_pmc_from_tripartition_examples():
    g3 = build_Gk(3)
    assert pmc_from_tripartition(g3, [{1}, {2}, {3}]) == vset([g3.pair(1, 2), g3.pair(1, 3), g3.pair(2, 3)])
    g4 = build_Gk(4)
    omega = pmc_from_tripartition(g4, [{1, 2}, {3}, {4}])
    assert omega == vset(g4.pair(*p) for p in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def test_all_tripartition_pmcs_of_g4_are_distinct_free_pmcs():
    g4 = build_Gk(4)
    built = [pmc_from_tripartition(g4, p) for p in tripartitions(4)]
    assert len(built) == len(set(built)) == 6
    for omega in built:
        assert check_pmc(g4.graph, omega).is_pmc
        assert is_free(g4.graph, omega)
        assert omega & g4.integer_vertices == 0


@pytest.mark.parametrize("parts", [[{1}, {2}], [{1}, {2}, {2, 3}], [{1}, {2}, set()], [{1}, {2}, {4}]])
def test_pmc_from_tripartition_rejects(parts):
    with pytest.raises(InputError):
        pmc_from_tripartition(build_Gk(3), parts)


def test_tripartition_partition_type_matches_parts():
    gk = build_Gk(5)
    for p in tripartitions(5):
        part = cover_partition(gk.graph, gk.cover, pmc_from_tripartition(gk, p))
        assert part.type_tag is PartitionType.P1_P2_P3
        assert part.parts == tuple(vset(i - 1 for i in block) for block in p)


def test_lift_g3_to_g4():
    g3, g4 = build_Gk(3), build_Gk(4)
    prev = pmc_from_tripartition(g3, [{1}, {2}, {3}])
    lift = lift_free_pmc(g4, prev, 1)
    assert lift.permutation == {4: 1, 1: 4}
    for s in (lift.omega, lift.permuted):
        assert check_pmc(g4.graph, s).is_pmc and is_free(g4.graph, s)
        assert (s & g4.integer_vertices).bit_count() == 1
    assert lift.omega & g4.integer_vertices == vset([3])
    assert lift.permuted & g4.integer_vertices == vset([0])


def test_lift_chain_g3_g4_g5():
    g3, g4, g5 = build_Gk(3), build_Gk(4), build_Gk(5)
    omega = pmc_from_tripartition(g3, [{1}, {2}, {3}])
    omega = lift_free_pmc(g4, omega, 1).permuted
    assert check_pmc(g4.graph, omega).is_pmc
    omega = lift_free_pmc(g5, omega, 2).permuted
    assert check_pmc(g5.graph, omega).is_pmc and is_free(g5.graph, omega)
    assert omega & g5.integer_vertices == vset([0, 1])


def test_lift_rejects_bad_inputs():
    g3, g4 = build_Gk(3), build_Gk(4)
    nonfree = next(r.omega for r in enumerate_pmcs(g3.graph) if not r.free)
    with pytest.raises(ContractError):
        lift_free_pmc(g4, nonfree, 1)
    prev = pmc_from_tripartition(g3, [{1}, {2}, {3}])
    with pytest.raises(ContractError):
        lift_free_pmc(g4, prev, 2)
    with pytest.raises(ContractError):
        lift_free_pmc(g4, vset([0, 1]), 1)


def test_permute_integers_is_an_automorphism():
    gk = build_Gk(5)
    perm = {1: 3, 3: 5, 5: 1}
    edges = set()
    for u, v in gk.graph.edges():
        a, b = permute_integers(gk, 1 << u, perm), permute_integers(gk, 1 << v, perm)
        edges.add(tuple(sorted((a.bit_length() - 1, b.bit_length() - 1))))
    assert edges == set(gk.graph.edges())


@pytest.mark.parametrize("k", [3, 4, 5])
def test_constructed_classes_inside_enumeration(k):
    gk = build_Gk(k)
    free = {r.omega for r in enumerate_pmcs(gk.graph) if r.free}
    for i in range(k + 1):
        built = constructed_free_pmcs(k, i)
        assert len(built) == len(set(built)) == stirling_bruteforce(k - i, 3)
        assert set(built) <= free
        enumerated = [w for w in free if w & gk.integer_vertices == gk.prefix(i)]
        assert len(enumerated) >= len(built)


@pytest.mark.parametrize("k", [4, 5])
def test_lift_inequality_on_enumerated_classes(k):
    # |free PMCs of G_k meeting 1..i| >= |free PMCs of G_{k-1} meeting 1..i-1|
    cur, prev = build_Gk(k), build_Gk(k - 1)
    cur_free = [r.omega for r in enumerate_pmcs(cur.graph) if r.free]
    prev_free = [r.omega for r in enumerate_pmcs(prev.graph) if r.free]
    for i in range(1, k + 1):
        a = sum(w & cur.integer_vertices == cur.prefix(i) for w in cur_free)
        b = sum(w & prev.integer_vertices == prev.prefix(i - 1) for w in prev_free)
        assert a >= b


def test_random_graph_with_cover():
    g, vk = random_graph_with_cover(3, 8, 0, seed=1)
    assert g.m == 0 and is_vertex_cover(g, vk.cover)
    g, vk = random_graph_with_cover(1, 4, 1, seed=5)
    assert g.edges() == build_star(4).edges() and vk.cover == 1
    a, _ = random_graph_with_cover(3, 10, "1/2", 42)
    b, _ = random_graph_with_cover(3, 10, 0.5, 42)
    assert serialize_edge_list(a) == serialize_edge_list(b)
    with pytest.raises(InputError):
        random_graph_with_cover(5, 4, 0.5, 0)
    with pytest.raises(InputError):
        random_graph_with_cover(1, 4, 1.5, 0)


@settings(max_examples=50)
@given(st.integers(0, 5), st.integers(0, 12), st.sampled_from(["0", "0.3", "1/2", "1"]), st.integers(0, 10**6))
def test_random_graph_cover_is_valid(k, extra, p, seed):
    g, vk = random_graph_with_cover(k, k + extra, p, seed)
    assert vk.k == k and is_vertex_cover(g, vk.cover)
    assert all(u < k for u, _ in g.edges())
