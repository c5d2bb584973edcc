import pytest

from bei.classes import is_generalized_block_graph, recognize_cameron_walker
from bei.constructions import (
    ConstructionSpec,
    build_named,
    clique_fan,
    depth_target,
    disjoint_union,
    glue_at_free_vertex,
    minimal_dense_cw,
    path,
    star,
)
from bei.depth import depth_dispatch, depth_generalized_block, isomorphic_bruteforce
from bei.graph import GraphError, connected_components, delete_vertices, graph_invariants, minimal_cut_sets, validate_graph


def test_named(P3, T3, H):
    assert P3.edges() == [(1, 2), (2, 3)]
    assert T3.edges() == [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    assert H.n == 6 and H.num_edges == 6
    assert build_named("path(3)") == path(3)
    assert build_named("star", 4) == star(4)
    with pytest.raises(GraphError):
        build_named("Q7")


def test_minimal_dense(H):
    assert isomorphic_bruteforce(minimal_dense_cw(2, 2), H)
    for r, s in [(2, 2), (2, 3), (3, 2), (3, 4), (4, 2)]:
        g = minimal_dense_cw(r, s)
        d = recognize_cameron_walker(g)
        assert g.n == 2 * r + s
        assert (len(d.U), len(d.V)) == (r, s)
    assert depth_dispatch(minimal_dense_cw(3, 2)).value == 8
    with pytest.raises(GraphError):
        minimal_dense_cw(1, 3)


@pytest.mark.parametrize("r,s,leaf", [(2, 2, True), (2, 2, False), (3, 2, True), (3, 3, False)])
def test_clique_fan(r, s, leaf):
    g = clique_fan(r, s, leaf)
    assert is_generalized_block_graph(g)
    cuts = minimal_cut_sets(g)
    assert len(cuts) == 1 and len(cuts[0]) == s


def test_clique_fan_depths():
    assert depth_generalized_block(clique_fan(2, 2)) == 5
    assert depth_generalized_block(clique_fan(2, 2, False)) == 4


def test_depth_target_examples(H):
    assert isomorphic_bruteforce(depth_target(6, 6), H)
    g = depth_target(7, 8)
    assert g.n == 8 and depth_dispatch(g).value == 7
    assert depth_target(9, 8) == star(8)
    with pytest.raises(GraphError):
        depth_target(5, 8)
    with pytest.raises(GraphError):
        depth_target(10, 8)


def test_depth_target_formula():
    for n in range(5, 12):
        for t in range(6, n + 2):
            g = depth_target(t, n)
            assert g.n == n and depth_dispatch(g).value == t


def test_glue():
    k2 = path(1)
    assert glue_at_free_vertex(k2, 2, k2, 1) == path(2)
    g = glue_at_free_vertex(minimal_dense_cw(2, 3), 1, k2, 1)
    assert g == depth_target(7, 8)
    triangle = validate_graph(3, [(1, 2), (1, 3), (2, 3)])
    t3 = glue_at_free_vertex(path(2), 3, triangle, 1)
    assert t3 == build_named("T3")
    with pytest.raises(GraphError):
        glue_at_free_vertex(path(2), 2, k2, 1)


def test_union(H):
    g, _ = delete_vertices(H, [2])
    assert graph_invariants(g).connected is False
    comps = sorted(len(c) for c in connected_components(g))
    assert comps == [1, 4]
    assert disjoint_union(H, None) == H
    both = disjoint_union(path(1), path(1))
    assert (both.n, both.num_edges) == (4, 2)


def test_spec_build():
    assert ConstructionSpec("minimal_dense", r=2, s=2).build() == minimal_dense_cw(2, 2)
    assert ConstructionSpec("depth_target", t=7, n=8).build() == depth_target(7, 8)
