import random

import networkx as nx
import pytest

from bei.constructions import build_named, path, star
from bei.enumeration import (
    CanonicalForm,
    atlas,
    canonical_form,
    canonical_id,
    connected_graphs,
    dim_depth_table,
    matching_numbers,
    relabelings,
    verify_suite,
)
from bei.graph import GraphError, relabel, validate_graph
from bei.oracle import OracleGuardError

CENSUS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n,count", sorted(CENSUS.items()))
def test_census_counts(n, count):
    graphs = list(connected_graphs(n))
    assert len(graphs) == count
    assert len({canonical_form(g) for g in graphs}) == count


def test_census_matches_networkx_atlas():
    expected: dict[int, list] = {}
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            expected.setdefault(h.number_of_nodes(), []).append(h)
    for n in range(1, 8):
        ours = list(connected_graphs(n))
        assert len(ours) == len(expected[n])
        # each atlas graph maps onto a distinct census entry
        ids = set()
        for h in expected[n]:
            g = validate_graph(n, [(a + 1, b + 1) for a, b in h.edges()])
            ids.add(canonical_id(g))
        assert ids == {canonical_id(g) for g in ours}


def test_census_guard():
    with pytest.raises(GraphError):
        list(connected_graphs(9))


def test_canonical_form_invariant():
    rnd = random.Random(4)
    for g in connected_graphs(6):
        for _ in range(3):
            perm = list(range(g.n))
            rnd.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_distinguishes():
    assert canonical_form(path(3)) != canonical_form(star(4))
    # cospectral-style pair with the same degree sequence
    a = validate_graph(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4)])
    b = validate_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)])
    assert canonical_form(a) != canonical_form(b)


def test_graph6_round_trip(H):
    form = canonical_form(H)
    h = nx.from_graph6_bytes(form.graph6.encode())
    g = validate_graph(6, [(a + 1, b + 1) for a, b in h.edges()])
    assert canonical_form(g) == form
    assert canonical_form(form.graph()) == form
    assert isinstance(form, CanonicalForm)


def test_matching_numbers(H):
    assert matching_numbers(H) == (2, 2)
    assert matching_numbers(path(3)) == (2, 1)
    assert matching_numbers(star(5)) == (1, 1)


def test_relabelings_reproducible(H):
    a = list(relabelings(H, 5, seed=1))
    b = list(relabelings(H, 5, seed=1))
    assert a == b and all(canonical_form(g) == canonical_form(H) for g in a)


@pytest.mark.parametrize("suite,max_n", [("main", 6), ("depth", 6), ("bounds", 5), ("dim", 5)])
def test_verify_small(suite, max_n):
    report = verify_suite(suite, max_n)
    assert report.ok, report.counterexamples
    assert report.checked > 0


def test_verify_main_cases():
    report = verify_suite("main", 5)
    assert report.notes["cm_cases"] == ["P3", "P5", "triangle-path"]


def test_verify_parallel_matches_serial():
    a, b = verify_suite("depth", 5), verify_suite("depth", 5, jobs=2)
    assert (a.checked, a.notes) == (b.checked, b.notes)


def test_verify_guard():
    with pytest.raises(OracleGuardError):
        verify_suite("dim", 10)
    with pytest.raises(ValueError):
        verify_suite("nope", 4)


def test_atlas_and_table():
    rows = atlas(3)
    assert len(rows) == 2
    table = dim_depth_table(3, rows=rows)
    assert (4, 4) in {(d, t) for d, t, _, _ in table}
    six = dim_depth_table(6)
    assert (8, 6) in {(d, t) for d, t, _, _ in six}
    assert all(t <= d for d, t, _, _ in six)
    h_id = canonical_id(build_named("H"))
    assert h_id in {r.canonical_id for r in atlas(6) if (r.dim, r.depth) == (8, 6)}
