"""Generators for the named graphs and the families used in the depth results.

Labelings are fixed so that results computed on a construction can be cached
and compared across runs:

* ``P3``, ``P5``, ``path(k)``: the path 1-2-...-(k+1).
* ``T3``: path 1-2-3 with the triangle {3, 4, 5}.
* ``H``: vertices 1..6 with U = {2, 5}, V = {3, 6} and leaves 1 (on 2), 4 (on 5).
* ``star(n)``: center 1, leaves 2..n.
* ``minimal_dense_cw(r, s)``: u_i = 2i with leaf 2i-1 for i = 1..r; V = 2r+1..2r+s.
* ``clique_fan(r, s)``: u_1 = 1, optional u'_1 = 2, then the shared set V,
  then u_2..u_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, is_free_vertex, validate_graph


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str  # named | minimal_dense | clique_fan | depth_target
    name: Optional[str] = None
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    with_leaf: bool = True

    def build(self) -> Graph:
        if self.kind == "named":
            return build_named(self.name, self.n)
        if self.kind == "minimal_dense":
            return minimal_dense_cw(self.r, self.s)
        if self.kind == "clique_fan":
            return clique_fan(self.r, self.s, self.with_leaf)
        if self.kind == "depth_target":
            return depth_target(self.t, self.n)
        raise GraphError(f"unknown construction kind {self.kind!r}")


def path(k: int) -> Graph:
    """Path with ``k`` edges."""
    if k < 1:
        raise GraphError("path length must be at least 1")
    return validate_graph(k + 1, [(i, i + 1) for i in range(1, k + 1)])


def star(n: int) -> Graph:
    if n < 2:
        raise GraphError("a star needs at least 2 vertices")
    return validate_graph(n, [(1, j) for j in range(2, n + 1)])


def complete(n: int) -> Graph:
    return validate_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


H_EDGES = [(1, 2), (4, 5), (2, 3), (2, 6), (5, 3), (5, 6)]


def build_named(name: str, n: Optional[int] = None) -> Graph:
    """``P3``, ``P5``, ``T3``, ``H``, ``path`` (n = length) or ``star`` (n = vertices).

    ``path(k)`` and ``star(n)`` call syntax is accepted as well.
    """
    name = name.strip()
    if "(" in name and name.endswith(")"):
        base, arg = name[:-1].split("(", 1)
        name, n = base.strip(), int(arg)
    key = name.upper()
    if key == "P3":
        return path(2)
    if key == "P5":
        return path(4)
    if key == "T3":
        return validate_graph(5, [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
    if key == "H":
        return validate_graph(6, H_EDGES)
    if key == "PATH":
        if n is None:
            raise GraphError("path needs a length")
        return path(n)
    if key == "STAR":
        if n is None:
            raise GraphError("star needs a vertex count")
        return star(n)
    raise GraphError(f"unknown named graph {name!r}")


def minimal_dense_cw(r: int, s: int) -> Graph:
    """Complete bipartite core K_{r,s} with exactly one leaf on each of the r U-vertices."""
    if r < 2 or s < 2:
        raise GraphError("minimal dense Cameron-Walker graphs need |U| >= 2 and |V| >= 2")
    edges = []
    for i in range(1, r + 1):
        edges.append((2 * i - 1, 2 * i))
        edges.extend((2 * i, 2 * r + j) for j in range(1, s + 1))
    return validate_graph(2 * r + s, edges)


def clique_fan(r: int, s: int, with_leaf_on_first: bool = True) -> Graph:
    """r maximal cliques sharing a common s-set V; clique F_1 holds u_1 (and u'_1
    when flagged), each other F_i holds a single private vertex u_i."""
    if r < 2 or s < 2:
        raise GraphError("clique fan needs r >= 2 and |V| >= 2")
    first = [1, 2] if with_leaf_on_first else [1]
    nxt = len(first) + 1
    shared = list(range(nxt, nxt + s))
    nxt += s
    cliques = [first + shared]
    for _ in range(r - 1):
        cliques.append([nxt] + shared)
        nxt += 1
    edges = set()
    for clique in cliques:
        for a in clique:
            for b in clique:
                if a < b:
                    edges.add((a, b))
    return validate_graph(nxt - 1, sorted(edges))


def disjoint_union(g1: Optional[Graph], g2: Optional[Graph]) -> Graph:
    """Union with ``g2`` relabeled after ``g1``; ``None`` stands for the empty graph."""
    if g1 is None or g2 is None:
        if g1 is None and g2 is None:
            raise GraphError("union of two empty graphs has no vertices")
        return g1 if g2 is None else g2
    shift = g1.n
    adj = list(g1.adj) + [a << shift for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def glue_at_free_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify ``v1`` in ``g1`` with ``v2`` in ``g2``. Vertices of ``g1`` keep their
    labels; the other vertices of ``g2`` follow in increasing order."""
    for g, v in ((g1, v1), (g2, v2)):
        if not is_free_vertex(g, v):
            raise GraphError(f"vertex {v} is not free")
    new_label = {}
    nxt = g1.n + 1
    for w in g2.vertices():
        if w == v2:
            new_label[w] = v1
        else:
            new_label[w] = nxt
            nxt += 1
    edges = g1.edges() + [(new_label[a], new_label[b]) for a, b in g2.edges()]
    return validate_graph(nxt - 1, edges)


def depth_target(t: int, n: int) -> Graph:
    """A connected graph on ``n`` vertices whose binomial edge ideal has depth ``t``.

    t = n + 1: the star. Even t <= n: minimal dense with |U| = (t-2)/2, |V| = n-t+2.
    Odd t <= n: minimal dense with |U| = (t-3)/2, |V| = n-t+2, plus a new leaf
    hung on leaf 1.
    """
    if not (6 <= t <= n + 1):
        raise GraphError(f"need 6 <= t <= n+1, got t={t}, n={n}")
    if t == n + 1:
        return star(n)
    s = n - t + 2
    if t % 2 == 0:
        r = (t - 2) // 2
        assert r >= 2 and s >= 2
        return minimal_dense_cw(r, s)
    r = (t - 3) // 2
    assert r >= 2 and s >= 2
    base = minimal_dense_cw(r, s)
    return glue_at_free_vertex(base, 1, path(1), 1)

