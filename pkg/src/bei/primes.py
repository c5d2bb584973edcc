"""Minimal primes of a binomial edge ideal, read off combinatorially from cut sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    _bits,
    component_masks,
    count_components,
    is_connected,
    is_free_vertex,
    mask_of,
    popcount,
    sorted_vertices,
    vertices_of,
)

MAX_PRIME_VERTICES = 24


@dataclass(frozen=True)
class MinimalPrime:
    """The prime attached to a vertex set ``T``: the variables of ``T`` plus one
    complete-graph ideal per component of the graph with ``T`` deleted."""

    T: frozenset[int]
    components: tuple[frozenset[int], ...]
    height: int


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph must be connected")


def _cut_point_property(g: Graph, t: int) -> bool:
    rest = g.full_mask & ~t
    base = count_components(g, rest)
    for i in _bits(t):
        # i is a cut point of G|(rest + i) iff adding it back merges >= 2 components
        if count_components(g, rest | (1 << i)) >= base:
            return False
    return True


def has_cut_point_property(g: Graph, t: Iterable[int]) -> bool:
    """True iff each vertex of ``t`` is a cut point of the graph induced on the
    complement of ``t`` together with that vertex. Vacuously true for the empty set."""
    _require_connected(g)
    return _cut_point_property(g, mask_of(t, g.n))


def _admissible_sets(g: Graph) -> list[int]:
    """Every T with the cut point property (including the empty set)."""
    # a free vertex has a clique neighborhood, so it never reconnects components
    candidates = [v - 1 for v in g.vertices() if not is_free_vertex(g, v)]
    out = []
    for bits in range(1 << len(candidates)):
        t = 0
        for k, v in enumerate(candidates):
            if bits >> k & 1:
                t |= 1 << v
        if _cut_point_property(g, t):
            out.append(t)
    return out


def minimal_primes(g: Graph) -> list[MinimalPrime]:
    """One prime for T = {} plus one per nonempty T with the cut point property,
    ordered by |T| and then lexicographically."""
    _require_connected(g)
    if g.n > MAX_PRIME_VERTICES:
        raise GraphError(f"prime enumeration is guarded at n <= {MAX_PRIME_VERTICES}")
    primes = []
    for t in sorted(_admissible_sets(g), key=lambda m: (popcount(m), sorted_vertices(m))):
        comps = component_masks(g, g.full_mask & ~t)
        primes.append(MinimalPrime(
            T=vertices_of(t),
            components=tuple(sorted((vertices_of(c) for c in comps), key=sorted)),
            height=g.n + popcount(t) - len(comps),
        ))
    return primes


def krull_dim(g: Graph) -> int:
    """max of n - |T| + c(T) over admissible T, i.e. 2n minus the least prime height."""
    return 2 * g.n - min(p.height for p in minimal_primes(g))


def is_unmixed(g: Graph) -> bool:
    return len({p.height for p in minimal_primes(g)}) == 1
