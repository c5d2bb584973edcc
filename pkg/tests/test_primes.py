import random

import pytest

from bei.enumeration import connected_graphs_upto
from bei.graph import GraphError, relabel, validate_graph
from bei.primes import has_cut_point_property, is_unmixed, krull_dim, minimal_primes


def test_cut_point_property(H):
    assert has_cut_point_property(H, {2, 5})
    assert not has_cut_point_property(H, {2, 3, 5})
    assert has_cut_point_property(H, set())


def test_primes_p3(P3):
    primes = minimal_primes(P3)
    assert [(set(p.T), p.height) for p in primes] == [(set(), 2), ({2}, 2)]


def test_primes_h(H):
    found = {frozenset(p.T): p.height for p in minimal_primes(H)}
    assert found[frozenset()] == 5
    assert found[frozenset({2, 5})] == 4


def test_primes_k2():
    primes = minimal_primes(validate_graph(2, [(1, 2)]))
    assert [(set(p.T), p.height) for p in primes] == [(set(), 1)]


def test_dims(P3, P5, H):
    assert krull_dim(P3) == 4
    assert krull_dim(P5) == 6
    assert krull_dim(H) == 8


def test_unmixed(P3, T3, H):
    assert is_unmixed(P3)
    assert is_unmixed(T3)
    assert not is_unmixed(H)


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        minimal_primes(validate_graph(3, [(1, 2)]))


def test_prime_invariants():
    for g in connected_graphs_upto(6):
        primes = minimal_primes(g)
        assert primes[0].T == frozenset() and primes[0].height == g.n - 1
        for p in primes:
            assert has_cut_point_property(g, p.T)
            assert p.height == g.n + len(p.T) - len(p.components)
        assert krull_dim(g) == 2 * g.n - min(p.height for p in primes) >= g.n + 1


def test_cut_point_brute_force():
    # every T with the property is found, not just those the pruning keeps
    from itertools import combinations
    for g in connected_graphs_upto(5):
        listed = {p.T for p in minimal_primes(g)}
        for k in range(g.n + 1):
            for t in combinations(g.vertices(), k):
                assert (frozenset(t) in listed) == has_cut_point_property(g, t)


def test_heights_relabel_invariant(H):
    rnd = random.Random(3)
    base = sorted(p.height for p in minimal_primes(H))
    for _ in range(20):
        perm = list(range(H.n))
        rnd.shuffle(perm)
        assert sorted(p.height for p in minimal_primes(relabel(H, perm))) == base
