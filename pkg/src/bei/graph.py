"""Labeled simple graphs on vertices 1..n and the elementary quantities built on them.

Vertices are 1-indexed at the API boundary and stored 0-indexed as bit
positions in per-vertex adjacency bitsets (plain Python ints).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range vertices."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[i]`` is the neighbor bitset of vertex ``i + 1``."""

    n: int
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in _bits(self.adj[i] >> (i + 1)):
                out.append((i + 1, i + j + 2))
        return out

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(j + 1 for j in _bits(self.adj[v - 1]))

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise GraphError(f"vertex {v!r} out of range 1..{self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def mask_of(vertices: Iterable[int], n: Optional[int] = None) -> int:
    """Bitset of 1-indexed ``vertices``."""
    m = 0
    for v in vertices:
        if n is not None and not (1 <= v <= n):
            raise GraphError(f"vertex {v!r} out of range 1..{n}")
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in _bits(mask))


def sorted_vertices(mask: int) -> list[int]:
    return [b + 1 for b in _bits(mask)]


def validate_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from a vertex count and 1-indexed edge list, rejecting loops,
    duplicate edges and out-of-range endpoints."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    adj = [0] * n
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)!r} does not have two endpoints")
        u, v = e
        for w in (u, v):
            if not isinstance(w, int) or isinstance(w, bool) or not (1 <= w <= n):
                raise GraphError(f"vertex {w!r} out of range 1..{n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if adj[u - 1] >> (v - 1) & 1:
            raise GraphError(f"duplicate edge {{{u},{v}}}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Wrap 0-indexed neighbor bitsets; the caller guarantees symmetry."""
    return Graph(len(adj), tuple(adj))


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``w``, relabeled 1..|w| in increasing order.

    Returns the graph and the map new label -> original label.
    """
    wmask = mask_of(w, g.n)
    return _induced(g, wmask)


def _induced(g: Graph, wmask: int) -> tuple[Graph, dict[int, int]]:
    old = list(_bits(wmask))
    pos = {o: k for k, o in enumerate(old)}
    adj = []
    for o in old:
        row = 0
        for nb in _bits(g.adj[o] & wmask):
            row |= 1 << pos[nb]
        adj.append(row)
    if not adj:
        raise GraphError("induced subgraph on the empty vertex set")
    return Graph(len(adj), tuple(adj)), {k + 1: o + 1 for k, o in enumerate(old)}


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    return _induced(g, g.full_mask & ~mask_of(vs, g.n))


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of the subgraph induced on ``within`` (default: all), as bitsets."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        remaining &= ~seen
    return comps


def count_components(g: Graph, within: Optional[int] = None) -> int:
    return len(component_masks(g, within))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    return [vertices_of(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return count_components(g) == 1


def is_cut_vertex(g: Graph, i: int) -> bool:
    g._check(i)
    before = count_components(g)
    return count_components(g, g.full_mask & ~(1 << (i - 1))) > before


def maximal_clique_masks(g: Graph) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting over bitsets."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda u: popcount(p & g.adj[u]))
        for v in _bits(p & ~g.adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & g.adj[v], x & g.adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.full_mask, 0)
    return sorted(out, key=lambda m: sorted_vertices(m))


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, sorted by their sorted vertex lists."""
    return [vertices_of(m) for m in maximal_clique_masks(g)]


def clique_number(g: Graph) -> int:
    return max(popcount(m) for m in maximal_clique_masks(g))


def free_vertices(g: Graph) -> frozenset[int]:
    """Vertices lying in exactly one maximal clique."""
    cliques = maximal_clique_masks(g)
    return frozenset(
        v for v in g.vertices() if sum(1 for c in cliques if c >> (v - 1) & 1) == 1
    )


def is_free_vertex(g: Graph, v: int) -> bool:
    # free iff the closed neighborhood is a clique
    g._check(v)
    nb = g.adj[v - 1]
    return all((g.adj[u] | (1 << u)) & nb == nb for u in _bits(nb))


def eccentricities(g: Graph) -> list[int]:
    ecc = []
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for u in _bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    q.append(u)
        if len(dist) < g.n:
            raise GraphError("eccentricity undefined on a disconnected graph")
        ecc.append(max(dist.values()))
    return ecc


def diameter(g: Graph) -> int:
    """Largest shortest-path distance between two vertices."""
    return max(eccentricities(g))


def _disconnects(g: Graph, cut: int) -> bool:
    rest = g.full_mask & ~cut
    return popcount(rest) >= 2 and count_components(g, rest) > 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose deletion disconnects ``g``; n-1 for complete graphs."""
    if not is_connected(g):
        return 0
    for k in range(1, g.n - 1):
        for combo in combinations(range(g.n), k):
            cut = 0
            for b in combo:
                cut |= 1 << b
            if _disconnects(g, cut):
                return k
    return g.n - 1


def minimal_cut_set_masks(g: Graph, max_size: int) -> list[int]:
    if not is_connected(g):
        raise GraphError("minimal cut sets are defined here for connected graphs only")
    found_cuts: list[int] = []
    minimal: list[int] = []
    for k in range(1, min(max_size, g.n - 2) + 1):
        for combo in combinations(range(g.n), k):
            cut = 0
            for b in combo:
                cut |= 1 << b
            if not _disconnects(g, cut):
                continue
            # cut-ness is not monotone, so every smaller cut set must be checked
            if not any(c & cut == c for c in found_cuts):
                minimal.append(cut)
            found_cuts.append(cut)
    return sorted(minimal, key=lambda m: (popcount(m), sorted_vertices(m)))


def minimal_cut_sets(g: Graph, max_size: Optional[int] = None) -> list[frozenset[int]]:
    """Inclusion-minimal vertex sets of size <= ``max_size`` whose deletion disconnects ``g``."""
    if max_size is None:
        max_size = g.n
    return [vertices_of(m) for m in minimal_cut_set_masks(g, max_size)]


def clique_close(g: Graph, w: int) -> Graph:
    """The graph with every pair of neighbors of ``w`` made adjacent."""
    g._check(w)
    nb = g.adj[w - 1]
    adj = list(g.adj)
    for u in _bits(nb):
        adj[u] |= nb & ~(1 << u)
    return Graph(g.n, tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply ``perm`` (a 0-indexed list: old vertex i goes to perm[i])."""
    adj = [0] * g.n
    for i in range(g.n):
        row = 0
        for j in _bits(g.adj[i]):
            row |= 1 << perm[j]
        adj[perm[i]] = row
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class InvariantBundle:
    f: int
    d: Optional[int]
    kappa: Optional[int]
    omega: int
    connected: bool


def graph_invariants(g: Graph) -> InvariantBundle:
    """Free-vertex count, diameter, vertex connectivity and clique number.

    Diameter and connectivity are ``None`` for disconnected graphs.
    """
    connected = is_connected(g)
    return InvariantBundle(
        f=len(free_vertices(g)),
        d=diameter(g) if connected else None,
        kappa=vertex_connectivity(g) if connected else None,
        omega=clique_number(g),
        connected=connected,
    )
