"""Recognizers for the graph classes the depth and Cohen-Macaulay results quantify over."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    _bits,
    component_masks,
    is_connected,
    mask_of,
    maximal_clique_masks,
    popcount,
    sorted_vertices,
    vertices_of,
)

MAX_CW_VERTICES = 64


def _two_coloring(g: Graph, within: int) -> Optional[tuple[int, int]]:
    side_a = side_b = 0
    for comp in component_masks(g, within):
        start = comp & -comp
        color = {start.bit_length() - 1: 0}
        stack = [start.bit_length() - 1]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v] & within):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
        for v, c in color.items():
            if c == 0:
                side_a |= 1 << v
            else:
                side_b |= 1 << v
    return side_a, side_b


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """2-coloring by BFS; each component's smallest vertex goes to the first side.
    ``None`` if the graph has an odd cycle."""
    sides = _two_coloring(g, g.full_mask)
    if sides is None:
        return None
    return vertices_of(sides[0]), vertices_of(sides[1])


def maximum_cardinality_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns 0-indexed vertices in visit order."""
    weight = [0] * g.n
    unvisited = g.full_mask
    order = []
    while unvisited:
        v = max(_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in _bits(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def perfect_elimination_order(g: Graph) -> Optional[list[int]]:
    """A perfect elimination order (1-indexed) if ``g`` is chordal, else ``None``.

    Reversed MCS order is a PEO exactly for chordal graphs.
    """
    peo = maximum_cardinality_order(g)[::-1]
    position = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [u for u in _bits(g.adj[v]) if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = 0
        for u in later:
            if u != parent:
                rest |= 1 << u
        if rest & ~g.adj[parent]:
            return None
    return [v + 1 for v in peo]


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_block_graph(g: Graph) -> bool:
    if not is_chordal(g):
        return False
    cliques = maximal_clique_masks(g)
    return all(popcount(a & b) <= 1 for a, b in combinations(cliques, 2))


def is_generalized_block_graph(g: Graph) -> bool:
    if not is_chordal(g):
        return False
    cliques = maximal_clique_masks(g)
    for a, b, c in combinations(cliques, 3):
        if a & b & c and not (a & b == a & c == b & c):
            return False
    return True


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.num_edges == g.n - 1


@dataclass(frozen=True)
class CWDecomposition:
    """Witness that a graph is Cameron-Walker: bipartite core on ``U`` and ``V``,
    leaves hanging off ``U`` and pendant triangles hanging off ``V``."""

    U: frozenset[int]
    V: frozenset[int]
    leaves_of: dict[int, frozenset[int]] = field(hash=False)
    triangles_of: dict[int, frozenset[frozenset[int]]] = field(hash=False)
    core_edges: frozenset[frozenset[int]]

    def leaves(self) -> frozenset[int]:
        return frozenset().union(*self.leaves_of.values()) if self.leaves_of else frozenset()

    def triangle_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for pairs in self.triangles_of.values():
            for p in pairs:
                out |= p
        return frozenset(out)

    @property
    def num_triangles(self) -> int:
        return sum(len(p) for p in self.triangles_of.values())


def validate_decomposition(g: Graph, d: CWDecomposition) -> None:
    """Raise ``GraphError`` unless ``d`` is a valid Cameron-Walker decomposition of ``g``."""
    parts = [set(d.U), set(d.V), set(d.leaves()), set(d.triangle_vertices())]
    total = sum(len(p) for p in parts)
    union = set().union(*parts)
    if total != len(union) or union != set(g.vertices()):
        raise GraphError("decomposition parts do not partition the vertex set")
    if not d.U or not d.V:
        raise GraphError("U and V must be nonempty")
    core = mask_of(d.U | d.V)
    expected_core = {frozenset(e) for e in g.edges() if all(core >> (v - 1) & 1 for v in e)}
    if set(d.core_edges) != expected_core:
        raise GraphError("core edges differ from the edges induced on U and V")
    if len(component_masks(g, core)) != 1:
        raise GraphError("core is not connected")
    for e in d.core_edges:
        a, b = sorted(e)
        if (a in d.U) == (b in d.U):
            raise GraphError(f"core edge {{{a},{b}}} does not cross U and V")
    for u in d.U:
        leaves = d.leaves_of.get(u, frozenset())
        if not leaves:
            raise GraphError(f"U vertex {u} carries no leaf")
        for leaf in leaves:
            if g.neighbors(leaf) != {u}:
                raise GraphError(f"{leaf} is not a leaf attached to {u}")
    if set(d.leaves_of) - set(d.U):
        raise GraphError("leaves attached outside U")
    if set(d.triangles_of) - set(d.V):
        raise GraphError("pendant triangles attached outside V")
    for v, pairs in d.triangles_of.items():
        for pair in pairs:
            a, b = sorted(pair)
            if g.neighbors(a) != {b, v} or g.neighbors(b) != {a, v}:
                raise GraphError(f"{{{a},{b}}} is not a pendant triangle on {v}")


def recognize_cameron_walker(g: Graph) -> Optional[CWDecomposition]:
    """Return a Cameron-Walker decomposition of ``g`` or ``None``.

    Pendant-triangle pairs (adjacent degree-2 vertices with a common neighbor of
    degree > 2) are forced. Every other vertex of degree >= 2 is a core vertex,
    and a core vertex with a degree-1 neighbor must lie in U. When that core has
    two or more vertices all degree-1 vertices become leaves, which keeps the
    core as small as possible. A lone core vertex is a star center: its
    smallest-labeled neighbor is the leaf and the others form V.
    """
    if g.n > MAX_CW_VERTICES:
        raise GraphError(f"recognizer is guarded at n <= {MAX_CW_VERTICES}")
    if g.n < 3 or not is_connected(g):
        return None
    deg = [popcount(a) for a in g.adj]

    tri_mask = 0
    triangles: dict[int, set[frozenset[int]]] = {}
    for a in range(g.n):
        if deg[a] != 2:
            continue
        for b in _bits(g.adj[a]):
            if b <= a or deg[b] != 2:
                continue
            common = g.adj[a] & g.adj[b]
            if not common:
                continue
            v = common.bit_length() - 1
            if deg[v] <= 2:
                return None  # the whole graph is a triangle
            tri_mask |= (1 << a) | (1 << b)
            triangles.setdefault(v + 1, set()).add(frozenset((a + 1, b + 1)))

    pendant = 0
    for v in range(g.n):
        if deg[v] == 1:
            pendant |= 1 << v
    kernel = g.full_mask & ~tri_mask & ~pendant
    carriers = 0
    for p in _bits(pendant):
        carriers |= g.adj[p]
    tri_carriers = mask_of(triangles)

    if popcount(kernel) == 0:
        return None
    if popcount(kernel) == 1:
        center = kernel.bit_length() - 1
        if tri_carriers or popcount(pendant) < 2:
            return None  # star triangle, or nothing to put in V
        first = (pendant & -pendant).bit_length() - 1
        u = center + 1
        return _finish(g, frozenset([u]), frozenset(sorted_vertices(pendant & ~(1 << first))),
                       {u: frozenset([first + 1])}, {})

    sides = _two_coloring(g, kernel)
    if sides is None or len(component_masks(g, kernel)) != 1:
        return None
    a_side, b_side = sides
    if carriers & a_side and carriers & b_side:
        return None
    u_side, v_side = (a_side, b_side) if carriers & a_side else (b_side, a_side)
    if not carriers or u_side & ~carriers or tri_carriers & u_side:
        return None
    leaves_of = {u + 1: frozenset(p + 1 for p in _bits(g.adj[u] & pendant)) for u in _bits(u_side)}
    return _finish(g, vertices_of(u_side), vertices_of(v_side), leaves_of,
                   {v: frozenset(p) for v, p in triangles.items()})


def _finish(g, U, V, leaves_of, triangles_of) -> CWDecomposition:
    core = mask_of(U | V)
    core_edges = frozenset(
        frozenset(e) for e in g.edges() if core >> (e[0] - 1) & 1 and core >> (e[1] - 1) & 1
    )
    d = CWDecomposition(U=U, V=V, leaves_of=leaves_of, triangles_of=triangles_of,
                        core_edges=core_edges)
    validate_decomposition(g, d)
    return d


def is_cameron_walker(g: Graph) -> bool:
    return recognize_cameron_walker(g) is not None


def core_is_complete_bipartite(d: CWDecomposition) -> bool:
    return len(d.core_edges) == len(d.U) * len(d.V)


def core_is_tree(d: CWDecomposition) -> bool:
    return len(d.core_edges) == len(d.U) + len(d.V) - 1


def classify_cw_subtype(g: Graph, d: CWDecomposition) -> tuple[bool, bool]:
    """``(dense, minimal_dense)`` flags for a decomposition of ``g``."""
    validate_decomposition(g, d)
    dense = core_is_complete_bipartite(d) and not core_is_tree(d)
    minimal = dense and not d.triangles_of and all(len(l) == 1 for l in d.leaves_of.values())
    return dense, minimal


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in ((a - 1, b - 1) for a, b in g.edges()))


@dataclass(frozen=True)
class ClassReport:
    bipartite: bool
    sides: Optional[tuple[frozenset[int], frozenset[int]]]
    tree: bool
    chordal: bool
    block: bool
    generalized_block: bool
    triangle_free: bool
    cw: Optional[CWDecomposition]
    complete_bipartite_core: bool
    dense_cw: bool
    minimal_dense_cw: bool


def classify(g: Graph) -> ClassReport:
    sides = bipartition(g)
    cw = recognize_cameron_walker(g)
    dense = minimal = complete = False
    if cw is not None:
        dense, minimal = classify_cw_subtype(g, cw)
        complete = core_is_complete_bipartite(cw)
    return ClassReport(
        bipartite=sides is not None,
        sides=sides,
        tree=is_tree(g),
        chordal=is_chordal(g),
        block=is_block_graph(g),
        generalized_block=is_generalized_block_graph(g),
        triangle_free=is_triangle_free(g),
        cw=cw,
        complete_bipartite_core=complete,
        dense_cw=dense,
        minimal_dense_cw=minimal,
    )
