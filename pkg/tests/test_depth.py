import pytest

from bei.classes import recognize_cameron_walker
from bei.constructions import clique_fan, complete, disjoint_union, minimal_dense_cw, path, star
from bei.depth import (
    Glue,
    cm_classify_cw,
    depth_bounds,
    depth_compose,
    depth_dispatch,
    depth_generalized_block,
    depth_minimal_dense_cw,
)
from bei.enumeration import connected_graphs_upto
from bei.graph import GraphError, graph_invariants, validate_graph
from bei.oracle import hochster_depth_dim

from conftest import diamond


def test_bounds(H):
    assert depth_bounds(H) == (6, 7)
    assert depth_bounds(complete(2)) == (3, 3)
    assert depth_bounds(star(5)) == (6, 6)


def test_bounds_complete_graphs():
    # nothing disconnects K_n; the upper end is the dimension
    for n in range(3, 7):
        assert depth_bounds(complete(n)) == (n + 1, n + 1)


def test_generalized_block_formula():
    for k in range(1, 6):
        assert depth_generalized_block(path(k)) == k + 2
    assert depth_generalized_block(diamond()) == 4
    assert depth_generalized_block(clique_fan(2, 2)) == 5
    with pytest.raises(GraphError):
        depth_generalized_block(minimal_dense_cw(2, 2))


def test_minimal_dense_formula(H):
    assert depth_minimal_dense_cw(H) == 6
    for n in range(6, 12):
        assert depth_minimal_dense_cw(minimal_dense_cw(2, n - 4)) == 6
    assert depth_minimal_dense_cw(minimal_dense_cw(3, 2)) == 8
    with pytest.raises(GraphError):
        depth_minimal_dense_cw(star(4))


def test_compose():
    k2 = path(1)
    assert depth_compose([(clique_fan(2, 2), 5), (k2, 3)], [Glue(0, 1, 1, 1)]) == 6
    assert depth_compose([(k2, 3), (k2, 3)], [Glue(0, 2, 1, 1)]) == 4
    # isolated vertex next to a graph of depth n - 1 (n = 6)
    assert depth_compose([(validate_graph(1, []), 2),
                          (minimal_dense_cw(2, 2), 5)], "union") == 7


def test_compose_rejects_bad_plans(H):
    k2 = path(1)
    with pytest.raises(GraphError):
        depth_compose([(H, 6), (k2, 3)], [Glue(0, 2, 1, 1)])
    with pytest.raises(GraphError):
        depth_compose([(k2, 3), (k2, 3), (k2, 3)], [Glue(0, 1, 1, 1)])


def test_dispatch_provenance(H, T3):
    v = depth_dispatch(H)
    assert (v.value, v.provenance) == (6, "minimal-dense-CW")
    assert depth_dispatch(T3).value == 6
    assert depth_dispatch(star(6)).value == 7
    v = depth_dispatch(disjoint_union(validate_graph(1, []), path(2)))
    assert (v.value, v.provenance) == (6, "disjoint-union")
    glued = validate_graph(7, minimal_dense_cw(2, 2).edges() + [(1, 7)])
    v = depth_dispatch(glued)
    assert (v.value, v.provenance) == (7, "gluing")


def test_dispatch_tree_core_cw():
    for g in connected_graphs_upto(7, 3):
        d = recognize_cameron_walker(g)
        if d is not None and g.num_edges == g.n - 1:
            assert depth_dispatch(g).value == g.n + 1


def test_dense_not_minimal_interval(H):
    g = validate_graph(7, H.edges() + [(2, 7)])
    v = depth_dispatch(g)
    inv = graph_invariants(g)
    assert not v.exact
    assert (v.lo, v.hi) == (inv.f + inv.d, g.n + 1)
    assert v.lo <= hochster_depth_dim(g).depth <= v.hi


def test_cm_classification(P3, P5, T3, H):
    assert cm_classify_cw(P5).matched_case == "P5"
    r = cm_classify_cw(T3)
    assert r.cm and r.matched_case == "triangle-path"
    assert cm_classify_cw(P3).matched_case == "P3"
    r = cm_classify_cw(H)
    assert r.is_cw and not r.cm
    r = cm_classify_cw(complete(3))
    assert not r.is_cw and r.matched_case == "none"


def test_dispatch_inside_bounds():
    for g in connected_graphs_upto(7, 2):
        v = depth_dispatch(g)
        lo, hi = depth_bounds(g)
        assert lo <= v.lo <= v.hi <= hi
