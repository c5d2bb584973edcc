"""Isomorph-free generation of small connected graphs and exhaustive theorem checks."""

from __future__ import annotations

import functools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .classes import classify, recognize_cameron_walker
from .depth import cm_classify_cw, depth_bounds, depth_dispatch
from .graph import Graph, GraphError, _bits, popcount, relabel
from .primes import is_unmixed, krull_dim

MAX_CENSUS_N = 8
MAX_MATCHING_N = 16


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Color refinement; cells keep the relative order of the cells they split from."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v])))) for v in range(g.n)]
        rank = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _code(g: Graph, order: list[int]) -> int:
    """Upper-triangle adjacency bits in graph6 column order, first bit most significant."""
    code = 0
    for j in range(1, g.n):
        for i in range(j):
            code = (code << 1) | (g.adj[order[i]] >> order[j] & 1)
    return code


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        if not any((g.adj[v] & ~(1 << r)) == (g.adj[r] & ~(1 << v)) for r in reps):
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """(code, order): the minimal code over the individualization-refinement tree and
    the vertex order (0-indexed, canonical position -> original vertex) attaining it.

    Branches only on one vertex per twin class of the target cell; swapping
    twins is an automorphism, so the pruned subtrees give the same codes.
    """
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        counts = Counter(colors)
        if len(counts) == g.n:
            order = sorted(range(g.n), key=colors.__getitem__)
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(g.n) if colors[v] == target]
        for v in _twin_representatives(g, cell):
            search([2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)])

    search([popcount(a) for a in g.adj])
    return best[0], best[1]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    code: int

    @property
    def graph6(self) -> str:
        bits = self.n * (self.n - 1) // 2
        pad = (-bits) % 6
        value = self.code << pad
        total = bits + pad
        chunks = [chr(63 + ((value >> (total - 6 * (k + 1))) & 63)) for k in range(total // 6)]
        return chr(63 + self.n) + "".join(chunks)

    def graph(self) -> Graph:
        adj = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                k -= 1
                if self.code >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return Graph(self.n, tuple(adj))


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n == 1:
        return CanonicalForm(1, 0)
    return CanonicalForm(g.n, canonical_labeling(g)[0])


def canonical_id(g: Graph) -> str:
    return canonical_form(g).graph6


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


@functools.lru_cache(maxsize=None)
def _census(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (CanonicalForm(1, 0),)
    seen: set[CanonicalForm] = set()
    for form in _census(n - 1):
        base = form.graph()
        for nbrs in range(1, 1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for u in _bits(nbrs):
                adj[u] |= 1 << (n - 1)
            seen.add(canonical_form(Graph(n, tuple(adj))))
    return tuple(sorted(seen, key=lambda f: (bin(f.code).count("1"), f.code)))


def connected_graphs(n: int) -> Iterator[Graph]:
    """One canonically labeled graph per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each class on n-1 vertices by a new vertex reaches them all.
    """
    if not 1 <= n <= MAX_CENSUS_N:
        raise GraphError(f"census is limited to 1 <= n <= {MAX_CENSUS_N}")
    for form in _census(n):
        yield form.graph()


def connected_graphs_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def matching_numbers(g: Graph) -> tuple[int, int]:
    """(matching number, induced matching number) by exhaustive search."""
    if g.n > MAX_MATCHING_N:
        raise GraphError(f"matching search is guarded at n <= {MAX_MATCHING_N}")
    edges = [(a - 1, b - 1) for a, b in g.edges()]

    def best(k: int, blocked: int, induced: bool) -> int:
        if k == len(edges):
            return 0
        a, b = edges[k]
        skip = best(k + 1, blocked, induced)
        if blocked >> a & 1 or blocked >> b & 1:
            return skip
        if induced:
            # endpoints and all their neighbors become unusable
            block = g.adj[a] | g.adj[b] | (1 << a) | (1 << b)
        else:
            block = (1 << a) | (1 << b)
        return max(skip, 1 + best(k + 1, blocked | block, induced))

    return best(0, 0, False), best(0, 0, True)


def is_star_triangle(g: Graph) -> bool:
    """Triangles sharing exactly one common vertex and nothing else."""
    if g.n < 3 or g.n % 2 == 0:
        return False
    full = g.full_mask
    for c in range(g.n):
        if g.adj[c] != full & ~(1 << c):
            continue
        others = [v for v in range(g.n) if v != c]
        if all(popcount(g.adj[v] & ~(1 << c)) == 1 and popcount(g.adj[v]) == 2 for v in others):
            return True
    return False


# -- verification suites -------------------------------------------------

SUITES = ("main", "depth", "bounds", "dim")


@dataclass
class VerifyReport:
    suite: str
    max_n: int
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _oracle(g: Graph, field: str = "gf2"):
    from .cache import cached_oracle

    return cached_oracle(g, field=field)


def _check_one(suite: str, adj: tuple[int, ...], field: str) -> Optional[dict]:
    """None if ``g`` passes ``suite`` or is out of its scope, else a record."""
    g = Graph(len(adj), adj)
    gid = canonical_id(g)
    if suite == "main":
        if recognize_cameron_walker(g) is None:
            return None
        unmixed = is_unmixed(g)
        top_dim = krull_dim(g) == g.n + 1
        verdict = cm_classify_cw(g)
        oracle = _oracle(g, field)
        if not (unmixed == top_dim == verdict.cm == oracle.cm):
            return {"graph": gid, "n": g.n, "unmixed": unmixed, "dim_is_n_plus_1": top_dim,
                    "matched_case": verdict.matched_case, "oracle_cm": oracle.cm}
        return {"graph": gid, "ok": True, "cm": verdict.cm, "matched_case": verdict.matched_case}
    if suite == "depth":
        verdict = depth_dispatch(g)
        oracle = _oracle(g, field)
        if not verdict.lo <= oracle.depth <= verdict.hi:
            return {"graph": gid, "n": g.n, "verdict": [verdict.lo, verdict.hi],
                    "provenance": verdict.provenance, "oracle_depth": oracle.depth}
        return {"graph": gid, "ok": True, "exact": verdict.exact}
    if suite == "bounds":
        lo, hi = depth_bounds(g)
        oracle = _oracle(g, field)
        if not lo <= oracle.depth <= hi:
            return {"graph": gid, "n": g.n, "bounds": [lo, hi], "oracle_depth": oracle.depth}
        return {"graph": gid, "ok": True}
    if suite == "dim":
        formula = krull_dim(g)
        oracle = _oracle(g, field)
        if formula != oracle.dim:
            return {"graph": gid, "n": g.n, "formula_dim": formula, "oracle_dim": oracle.dim}
        return {"graph": gid, "ok": True}
    raise ValueError(f"unknown suite {suite!r}")


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(*it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, *zip(*items), chunksize=max(1, len(items) // (4 * jobs))))


def verify_suite(suite: str, max_n: int, jobs: int = 1, field: str = "gf2",
                 min_n: int = 1) -> VerifyReport:
    """Check one family of claims over every connected graph with ``min_n <= n <= max_n``.

    main: for Cameron-Walker graphs, unmixed <=> dim = n+1 <=> one of P3, P5, T3
    <=> oracle depth = oracle dim. depth: the dispatcher's verdict contains the
    oracle depth (exact verdicts must equal it). bounds: f+d <= depth <= n-kappa+2
    (n+1 for complete graphs, which no vertex set disconnects).
    dim: the cut-set dimension formula equals the oracle dimension.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    from .oracle import DEFAULT_MAX_N, OracleGuardError

    if max_n > min(DEFAULT_MAX_N, MAX_CENSUS_N):
        raise OracleGuardError(f"verification is limited to max_n <= {min(DEFAULT_MAX_N, MAX_CENSUS_N)}")
    graphs = [g for g in connected_graphs_upto(max_n, min_n)]
    results = _map(_check_one, [(suite, g.adj, field) for g in graphs], jobs)
    report = VerifyReport(suite, max_n)
    in_scope = [r for r in results if r is not None]
    report.checked = len(in_scope)
    report.counterexamples = [r for r in in_scope if not r.get("ok")]
    report.notes["graphs_enumerated"] = len(graphs)
    if suite == "main":
        report.notes["cm_cases"] = sorted(r["matched_case"] for r in in_scope
                                          if r.get("ok") and r["cm"])
    if suite == "depth":
        report.notes["exact_verdicts"] = sum(1 for r in in_scope if r.get("exact"))
    return report


# -- exploration -----------------------------------------------------------

@dataclass(frozen=True)
class AtlasRow:
    n: int
    canonical_id: str
    chordal: bool
    block: bool
    generalized_block: bool
    cw: bool
    dense_cw: bool
    minimal_dense_cw: bool
    dim: int
    unmixed: bool
    depth: int
    cm: bool
    provenance: str


def _atlas_row(adj: tuple[int, ...], field: str) -> AtlasRow:
    g = Graph(len(adj), adj)
    cls = classify(g)
    oracle = _oracle(g, field)
    verdict = depth_dispatch(g)
    return AtlasRow(
        n=g.n, canonical_id=canonical_id(g), chordal=cls.chordal, block=cls.block,
        generalized_block=cls.generalized_block, cw=cls.cw is not None, dense_cw=cls.dense_cw,
        minimal_dense_cw=cls.minimal_dense_cw, dim=krull_dim(g), unmixed=is_unmixed(g),
        depth=oracle.depth, cm=oracle.cm,
        provenance=verdict.provenance if verdict.exact else "oracle",
    )


def atlas(n: int, jobs: int = 1, field: str = "gf2") -> list[AtlasRow]:
    """Per-graph invariants for every connected graph on ``n`` vertices (oracle depth)."""
    return _map(_atlas_row, [(g.adj, field) for g in connected_graphs(n)], jobs)


def dim_depth_table(n: int, jobs: int = 1, rows: Optional[list[AtlasRow]] = None
                    ) -> list[tuple[int, int, int, str]]:
    """(dim, depth, number of graphs, first witness) over connected graphs on ``n`` vertices."""
    rows = atlas(n, jobs) if rows is None else rows
    tally: dict[tuple[int, int], list[str]] = {}
    for row in rows:
        tally.setdefault((row.dim, row.depth), []).append(row.canonical_id)
    return [(d, t, len(ids), ids[0]) for (d, t), ids in sorted(tally.items())]


def relabelings(g: Graph, count: int, seed: int = 0) -> Iterator[Graph]:
    import random

    rng = random.Random(seed)
    for _ in range(count):
        perm = list(range(g.n))
        rng.shuffle(perm)
        yield relabel(g, perm)
