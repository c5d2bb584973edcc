"""Depth formulas, bounds and the Cohen-Macaulay classification for Cameron-Walker graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence, Union

from .classes import (
    CWDecomposition,
    classify_cw_subtype,
    is_generalized_block_graph,
    recognize_cameron_walker,
)
from .graph import (
    Graph,
    GraphError,
    _induced,
    clique_number,
    component_masks,
    graph_invariants,
    is_connected,
    is_free_vertex,
    minimal_cut_set_masks,
    popcount,
    relabel,
    validate_graph,
)

EXACT = "exact"
INTERVAL = "interval"

# provenance tags
GENERALIZED_BLOCK = "generalized-block"
MINIMAL_DENSE_CW = "minimal-dense-CW"
GLUING = "gluing"
DISJOINT_UNION = "disjoint-union"
BOUNDS_ONLY = "bounds-only"
ISOLATED = "isolated-vertex"


@dataclass(frozen=True)
class DepthVerdict:
    kind: str
    lo: int
    hi: int
    provenance: str

    def __post_init__(self):
        if self.kind not in (EXACT, INTERVAL) or self.lo > self.hi:
            raise ValueError(f"inconsistent verdict {self}")
        if self.kind == EXACT and self.lo != self.hi:
            raise ValueError(f"exact verdict with lo != hi: {self}")

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.kind == EXACT else None

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    @classmethod
    def of(cls, value: int, provenance: str) -> "DepthVerdict":
        return cls(EXACT, value, value, provenance)


def depth_bounds(g: Graph) -> tuple[int, int]:
    """(f + d, n - kappa + 2): free vertices plus diameter, and the connectivity bound.

    No vertex set disconnects a complete graph, so the connectivity bound does
    not apply there; the upper bound is then the dimension n + 1.
    """
    inv = graph_invariants(g)
    if not inv.connected:
        raise GraphError("depth bounds need a connected graph")
    if is_complete(g):
        return inv.f + inv.d, g.n + 1
    return inv.f + inv.d, g.n - inv.kappa + 2


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def depth_generalized_block(g: Graph) -> int:
    """n + 1 - sum over i in 2..omega-1 of (i - 1) * #(minimal cut sets of size i)."""
    if not is_connected(g) or not is_generalized_block_graph(g):
        raise GraphError("formula needs a connected generalized block graph")
    omega = clique_number(g)
    cuts = minimal_cut_set_masks(g, g.n)
    if any(popcount(c) >= omega for c in cuts):
        raise AssertionError("generalized block graph has a minimal cut set of size >= omega")
    return g.n + 1 - sum(popcount(c) - 1 for c in cuts if popcount(c) >= 2)


def depth_minimal_dense_cw(g: Graph, d: Optional[CWDecomposition] = None) -> int:
    if d is None:
        d = recognize_cameron_walker(g)
        if d is None:
            raise GraphError("not a Cameron-Walker graph")
    _, minimal = classify_cw_subtype(g, d)
    if not minimal:
        raise GraphError("not a minimal dense Cameron-Walker graph")
    value = g.n - len(d.V) + 2
    assert value == 2 * len(d.U) + 2, "n = 2|U| + |V| fails for a minimal dense decomposition"
    return value


@dataclass(frozen=True)
class Glue:
    """Identify ``vertex_a`` of part ``part_a`` with ``vertex_b`` of part ``part_b``."""

    part_a: int
    vertex_a: int
    part_b: int
    vertex_b: int


def depth_compose(parts: Sequence[tuple[Graph, int]], plan: Union[str, Sequence[Glue]]) -> int:
    """Depth of a disjoint union (``plan="union"``) or of parts glued along a tree of
    free-vertex identifications. Each gluing costs 2; an isolated vertex is depth 2."""
    total = sum(depth for _, depth in parts)
    if plan == "union":
        return total
    used: set[tuple[int, int]] = set()
    for step in plan:
        for part, v in ((step.part_a, step.vertex_a), (step.part_b, step.vertex_b)):
            if (part, v) in used:
                raise GraphError(f"vertex {v} of part {part} is glued twice")
            if not is_free_vertex(parts[part][0], v):
                raise GraphError(f"vertex {v} is not free in part {part}")
            used.add((part, v))
    if len(plan) != len(parts) - 1 or not _is_spanning_tree(len(parts), plan):
        raise GraphError("gluing plan must be a tree over the parts")
    return total - 2 * len(plan)


def _is_spanning_tree(k: int, plan: Sequence[Glue]) -> bool:
    root = list(range(k))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for step in plan:
        a, b = find(step.part_a), find(step.part_b)
        if a == b:
            return False
        root[a] = b
    return True


def _resolve(g: Graph, memo: dict) -> DepthVerdict:
    key = g.adj
    if key in memo:
        return memo[key]
    if g.n == 1:
        verdict = DepthVerdict.of(2, ISOLATED)
    elif is_generalized_block_graph(g):
        verdict = DepthVerdict.of(depth_generalized_block(g), GENERALIZED_BLOCK)
    else:
        verdict = None
        d = recognize_cameron_walker(g)
        if d is not None and classify_cw_subtype(g, d)[1]:
            verdict = DepthVerdict.of(depth_minimal_dense_cw(g, d), MINIMAL_DENSE_CW)
        if verdict is None:
            verdict = _glue_split(g, memo)
        if verdict is None:
            lo, hi = depth_bounds(g)
            verdict = DepthVerdict(EXACT, lo, hi, BOUNDS_ONLY) if lo == hi else \
                DepthVerdict(INTERVAL, lo, hi, BOUNDS_ONLY)
    memo[key] = verdict
    return verdict


def _glue_split(g: Graph, memo: dict) -> Optional[DepthVerdict]:
    for c in range(g.n):
        others = g.full_mask & ~(1 << c)
        comps = component_masks(g, others)
        if len(comps) < 2:
            continue
        for comp in comps:
            side_a = comp | (1 << c)
            side_b = (others & ~comp) | (1 << c)
            ga, map_a = _induced(g, side_a)
            gb, map_b = _induced(g, side_b)
            ca = next(k for k, o in map_a.items() if o == c + 1)
            cb = next(k for k, o in map_b.items() if o == c + 1)
            if not (is_free_vertex(ga, ca) and is_free_vertex(gb, cb)):
                continue
            va, vb = _resolve(ga, memo), _resolve(gb, memo)
            if va.exact and vb.exact:
                return DepthVerdict.of(va.lo + vb.lo - 2, GLUING)
    return None


def depth_dispatch(g: Graph) -> DepthVerdict:
    """Exact depth when some formula covers every connected component, else the bounds.

    Per component: generalized-block formula, minimal dense Cameron-Walker
    formula, a split at a cut vertex free on both sides, then the interval.
    Components combine additively.
    """
    memo: dict = {}
    verdicts = [_resolve(_induced(g, comp)[0], memo) for comp in component_masks(g)]
    if len(verdicts) == 1:
        return verdicts[0]
    lo = sum(v.lo for v in verdicts)
    hi = sum(v.hi for v in verdicts)
    if all(v.exact for v in verdicts):
        return DepthVerdict.of(lo, DISJOINT_UNION)
    return DepthVerdict(INTERVAL, lo, hi, BOUNDS_ONLY)


P3_EDGES = [(1, 2), (2, 3)]
P5_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5)]
T3_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
CM_CASES = {
    "P3": validate_graph(3, P3_EDGES),
    "P5": validate_graph(5, P5_EDGES),
    "triangle-path": validate_graph(5, T3_EDGES),
}


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(popcount(a) for a in g.adj) != sorted(popcount(a) for a in h.adj):
        return False
    return any(relabel(g, perm).adj == h.adj for perm in permutations(range(g.n)))


@dataclass(frozen=True)
class CMVerdict:
    is_cw: bool
    cm: bool
    matched_case: str  # "P3", "P5", "triangle-path" or "none"


def cm_classify_cw(g: Graph) -> CMVerdict:
    """Cohen-Macaulayness of a Cameron-Walker graph: exactly P3, P5 and the
    triangle with a path of length 2 attached. Non-CW input gets no CM claim."""
    if recognize_cameron_walker(g) is None:
        return CMVerdict(False, False, "none")
    if g.n <= 5:
        for name, h in CM_CASES.items():
            if isomorphic_bruteforce(g, h):
                return CMVerdict(True, True, name)
    return CMVerdict(True, False, "none")


__all__ = [
    "CMVerdict", "DepthVerdict", "Glue", "cm_classify_cw", "depth_bounds", "depth_compose",
    "depth_dispatch", "depth_generalized_block", "depth_minimal_dense_cw",
]
