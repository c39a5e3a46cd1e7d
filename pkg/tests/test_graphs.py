import pytest

from conftest import isomorphic, labeled_connected_count
from oidrd import graphs as G
from oidrd.graphs import GraphError


def test_build_path():
    g = G.build(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]
    assert g.m == 2


def test_build_single_vertex():
    g = G.build(1, [])
    assert g.n == 1 and g.m == 0 and g.max_degree == 0


def test_build_deduplicates_parallel_edges():
    g = G.build(4, [(0, 1), (1, 0)])
    assert g.m == 1


def test_build_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        G.build(4, [(2, 2)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match="out of range"):
        G.build(3, [(0, 3)])


def test_connectivity_queries():
    assert not G.is_connected(G.empty(2))
    assert G.is_connected(G.cycle(7))
    assert G.max_degree(G.star(5)) == 5


def test_g3_with_two_common_neighbors_is_a_four_cycle():
    assert isomorphic(G.g3(2), G.cycle(4))


def test_g3_requires_two_common_neighbors():
    with pytest.raises(GraphError):
        G.g3(1)


def test_g1_requires_a_leaf():
    with pytest.raises(GraphError):
        G.g1(2, 0)
    g = G.g1(2, 1)
    assert g.n == 5 and g.degree(0) == 4 and g.degree(1) == 3


def test_corona_of_point_with_two_isolated_is_a_star():
    assert isomorphic(G.corona(G.path(1), G.empty(2)), G.star(2))


def test_corona_of_edge_with_single_pendants_is_a_path():
    assert isomorphic(G.corona(G.path(2), G.empty(1)), G.path(4))


def test_corona_sizes():
    assert G.corona(G.cycle(3), G.empty(2)).n == 9
    for g in (G.path(2), G.cycle(4), G.complete(3)):
        for h in (G.empty(2), G.path(3), G.complete(3)):
            c = G.corona(g, h)
            assert c.n == g.n * (1 + h.n)
            assert c.m == g.m + g.n * (h.m + h.n)


def test_sharpness_graph_layout():
    h = G.sharpness_h([2, 2, 2])
    assert h.n == 15
    # block i: x, y at degree m_i + 1; z at degree 4; large part at degree 2
    for off in (0, 5, 10):
        assert h.degree(off) == 3 and h.degree(off + 1) == 3
        assert h.degree(off + 2) == 4
        assert h.degree(off + 3) == 2 and h.degree(off + 4) == 2
    assert G.is_connected(h)


def test_sharpness_rejects_degenerate_cycle():
    with pytest.raises(GraphError):
        G.sharpness_h([2, 2])


def test_gadget_layout():
    g = G.gadget(G.cycle(4))
    assert g.n == 16 and g.max_degree == 3
    for i in range(4):
        assert g.degree(4 + i) == 3
        assert g.degree(8 + 2 * i) == 1 and g.degree(8 + 2 * i + 1) == 1


def test_h_family_generators_validate_subcases():
    assert G.h1("a1", 2).n == 5
    assert G.h2("a2", 1, 1, 0, 2).n == 7
    assert G.h3(1, 1).n == 4
    with pytest.raises(GraphError):
        G.h1("a1", 1)
    with pytest.raises(GraphError):
        G.h3(0, 1)
    with pytest.raises(GraphError):
        G.h5("a5", 1, 0)
    with pytest.raises(GraphError):
        G.h6("zz", 1, 1)


def test_family_dispatch_and_dsl():
    assert isomorphic(G.family(G.parse_family_spec("kbipartite:2,3")),
                      G.complete_bipartite(2, 3))
    assert G.family(G.parse_family_spec("kpartite:1,2,3")).n == 6
    assert G.family(G.parse_family_spec("corona(path:2,empty:2)")).n == 6
    assert G.family(G.parse_family_spec("gadget(path:3)")).n == 12
    assert G.family(G.parse_family_spec("h1:a1,2")).n == 5
    assert G.family(G.parse_family_spec("dstar:2,3")).n == 7
    with pytest.raises(GraphError):
        G.parse_family_spec("path")
    with pytest.raises(GraphError):
        G.parse_family_spec("h1:q9,2")
    with pytest.raises(GraphError):
        G.parse_family_spec("corona(path:2")


def test_enumerate_connected_counts_match_inclusion_exclusion():
    assert labeled_connected_count(4) == 38
    for n in range(1, 7):
        got = sum(1 for _ in G.enumerate_connected_graphs(n))
        assert got == labeled_connected_count(n)


def test_enumerate_connected_yields_connected():
    for g in G.enumerate_connected_graphs(4):
        assert G.is_connected(g)


def test_enumeration_rejects_large_n():
    with pytest.raises(GraphError):
        next(G.enumerate_connected_graphs(8))
    with pytest.raises(GraphError):
        next(G.enumerate_trees(11))


def test_tree_counts_follow_cayley():
    for n in range(3, 8):
        assert sum(1 for _ in G.enumerate_trees(n)) == n ** (n - 2)
    assert sum(1 for _ in G.enumerate_trees(2)) == 1


def test_trees_are_acyclic_connected():
    for t in G.enumerate_trees(5):
        assert t.m == t.n - 1 and G.is_connected(t)
    for n in (3,):
        trees = list(G.enumerate_trees(n))
        assert all(isomorphic(t, G.path(3)) for t in trees)


def test_sampling_is_deterministic():
    a = [G.to_edge_list_text(g) for g in G.sample_connected_graphs(6, 5, seed=7)]
    b = [G.to_edge_list_text(g) for g in G.sample_connected_graphs(6, 5, seed=7)]
    c = [G.to_edge_list_text(g) for g in G.sample_connected_graphs(6, 5, seed=8)]
    assert a == b
    assert a != c
    for g in G.sample_connected_graphs(5, 10, seed=1, max_deg=3):
        assert G.is_connected(g) and g.max_degree <= 3
    t1 = [G.to_edge_list_text(g) for g in G.sample_trees(9, 4, seed=3)]
    t2 = [G.to_edge_list_text(g) for g in G.sample_trees(9, 4, seed=3)]
    assert t1 == t2
    assert all(g.count(" ") >= 0 for g in t1)


def test_edge_list_round_trip():
    for g in (G.path(3), G.complete_bipartite(2, 3), G.gadget(G.path(2))):
        again = G.from_edge_list_text(G.to_edge_list_text(g))
        assert again.n == g.n and again.edges() == g.edges()


def test_edge_list_parse_errors():
    assert G.from_edge_list_text("3 2\n0 1\n1 2").m == 2
    with pytest.raises(GraphError, match="expected 2 edges, found 1"):
        G.from_edge_list_text("3 2\n0 1")
    with pytest.raises(GraphError, match="line 2"):
        G.from_edge_list_text("3 1\n0 9")
    with pytest.raises(GraphError, match="header"):
        G.from_edge_list_text("oops")
