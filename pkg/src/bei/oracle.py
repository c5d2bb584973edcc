"""Ground-truth depth and dimension of S/J_G through its squarefree initial ideal.

The initial ideal of J_G under lex order x_1 > ... > x_n > y_1 > ... > y_n is
generated by the monomials of admissible paths. Its Stanley-Reisner complex
gives the Krull dimension (largest facet) and, by Hochster's formula, the
multigraded Betti numbers; depth follows from Auslander-Buchsbaum. Passing to
the initial ideal preserves depth and dimension because the degeneration is
squarefree; that is the one external fact this module relies on, and the test
suite checks it against every value it can.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .graph import Graph, GraphError, _bits, popcount

DEFAULT_MAX_N = 9
FIELDS = ("gf2", "rational")


@dataclass(frozen=True)
class VariableIndexing:
    """x_i has index i-1 and y_i has index n+i-1; lower index means larger variable."""

    n: int

    def x(self, i: int) -> int:
        return i - 1

    def y(self, i: int) -> int:
        return self.n + i - 1

    def name(self, index: int) -> str:
        return f"x{index + 1}" if index < self.n else f"y{index - self.n + 1}"

    def monomial(self, mask: int) -> str:
        return "*".join(self.name(b) for b in _bits(mask)) or "1"


@dataclass(frozen=True)
class AdmissiblePath:
    path: tuple[int, ...]
    monomial: int


def _joins(g: Graph, allowed: int, a: int, b: int) -> bool:
    seen = 1 << a
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen >> b & 1)


def admissible_paths(g: Graph) -> list[AdmissiblePath]:
    """All admissible paths i = i_0, ..., i_r = j (i < j, 1-indexed) with their monomials.

    Interior vertices must be < i or > j, and no proper subset of the interior
    may still connect i to j. Since connectivity is monotone in the vertex set,
    it is enough to test deleting one interior vertex at a time.
    """
    idx = VariableIndexing(g.n)
    out = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            outside = 0
            for k in range(g.n):
                if k < i or k > j:
                    outside |= 1 << k
            stack = [(i, 1 << i, (i,))]
            while stack:
                v, used, path = stack.pop()
                if v == j:
                    interior = used & ~(1 << i) & ~(1 << j)
                    if any(_joins(g, used & ~(1 << k), i, j) for k in _bits(interior)):
                        continue
                    mono = (1 << idx.x(i + 1)) | (1 << idx.y(j + 1))
                    for k in _bits(interior):
                        mono |= 1 << (idx.x(k + 1) if k > j else idx.y(k + 1))
                    out.append(AdmissiblePath(tuple(p + 1 for p in path), mono))
                    continue
                for u in _bits(g.adj[v] & ~used & (outside | (1 << j))):
                    stack.append((u, used | (1 << u), path + (u,)))
    out.sort(key=lambda p: (p.path[0], p.path[-1], len(p.path), p.path))
    return out


def _minimalize(masks) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (popcount(m), m)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; generators are variable-index bitsets."""

    num_vars: int
    generators: tuple[int, ...]

    @classmethod
    def from_generators(cls, num_vars: int, gens) -> "MonomialIdeal":
        return cls(num_vars, _minimalize(gens))


def initial_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_generators(2 * g.n, (p.monomial for p in admissible_paths(g)))


@dataclass(frozen=True)
class SimplicialComplex:
    num_vertices: int
    facets: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)


def stanley_reisner(ideal: MonomialIdeal) -> SimplicialComplex:
    """Facets of the complex whose minimal non-faces are the generators.

    Starting from the full simplex, each facet containing a generator is split
    into the sets missing one of its variables; non-maximal sets are dropped.
    """
    if any(popcount(g) < 2 for g in ideal.generators):
        raise ValueError("generators of size < 2 would delete a vertex")
    facets = [(1 << ideal.num_vars) - 1]
    for gen in ideal.generators:
        split = []
        for f in facets:
            if gen & ~f:
                split.append(f)
            else:
                split.extend(f & ~(1 << b) for b in _bits(gen))
        facets = _maximalize(split)
    return SimplicialComplex(ideal.num_vars, tuple(sorted(facets)))


def _maximalize(sets: list[int]) -> list[int]:
    kept: list[int] = []
    for s in sorted(set(sets), key=lambda m: -popcount(m)):
        if not any(s & ~k == 0 for k in kept):
            kept.append(s)
    return kept


def face_table(ideal: MonomialIdeal) -> np.ndarray:
    """Boolean array over all 2^N subsets: True where the subset contains no generator."""
    size = 1 << ideal.num_vars
    nonface = np.zeros(size, dtype=bool)
    nonface[list(ideal.generators)] = True
    for b in range(ideal.num_vars):
        view = nonface.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return ~nonface


def sorted_faces(ideal: MonomialIdeal) -> np.ndarray:
    """Nonempty faces as uint64 bitsets, sorted by (size, value)."""
    table = face_table(ideal)
    faces = np.flatnonzero(table).astype(np.uint64)
    faces = faces[faces != 0]
    return faces[np.argsort(_popcounts(faces), kind="stable")]


def _popcounts(arr: np.ndarray) -> np.ndarray:
    arr = arr.astype(np.uint64)
    out = np.zeros(arr.shape, dtype=np.int64)
    for b in range(64):
        bits = (arr >> np.uint64(b)) & np.uint64(1)
        if not bits.any() and not (arr >> np.uint64(b)).any():
            break
        out += bits.astype(np.int64)
    return out


def complex_faces(c: SimplicialComplex, restricted_to: Optional[int] = None) -> np.ndarray:
    """Nonempty faces of ``c`` (optionally inside ``restricted_to``), sorted by (size, value)."""
    found: set[int] = set()
    for f in c.facets:
        if restricted_to is not None:
            f &= restricted_to
        sub = f
        while sub:
            found.add(sub)
            sub = (sub - 1) & f
    faces = np.array(sorted(found), dtype=np.uint64)
    return faces[np.argsort(_popcounts(faces), kind="stable")] if len(faces) else faces


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks; ``ranks[k]`` is the rank of the k-th reduced group."""

    ranks: dict[int, int]
    field: str

    def nonzero(self) -> dict[int, int]:
        return {k: r for k, r in self.ranks.items() if r}


def reduced_homology(c: SimplicialComplex, restricted_to: Optional[int] = None,
                     field: str = "gf2") -> HomologyProfile:
    """Reduced homology of ``c`` or of its restriction to a vertex bitset.

    The complex consisting of only the empty face has rank 1 in dimension -1.
    Restricting to the empty vertex set gives exactly that complex.
    """
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    faces = complex_faces(c, restricted_to)
    sigma = (1 << c.num_vertices) - 1 if restricted_to is None else restricted_to
    top = int(_popcounts(faces).max()) - 1 if len(faces) else -1
    betti = kernels.reduced_betti(faces, sigma, top, field)
    return HomologyProfile({k - 1: r for k, r in enumerate(betti)}, field)


def lcm_lattice(ideal: MonomialIdeal) -> np.ndarray:
    """All nonempty unions of generator supports (the join closure), as uint64."""
    lattice = np.zeros(1, dtype=np.uint64)
    for g in ideal.generators:
        lattice = np.union1d(lattice, lattice | np.uint64(g))
    return lattice[lattice != 0]


@dataclass(frozen=True)
class OracleResult:
    depth: int
    dim: int
    pd: int
    cm: bool
    num_vars: int
    field: str
    witness_sigma: int
    witness_j: int
    sigmas_examined: int


def oracle_for_ideal(ideal: MonomialIdeal, field: str = "gf2", full_sweep: bool = False,
                     backend: Optional[str] = None) -> OracleResult:
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    faces = sorted_faces(ideal)
    nv = ideal.num_vars
    dim = int(_popcounts(faces).max()) if len(faces) else 0
    if not ideal.generators:
        return OracleResult(nv, nv, 0, True, nv, field, 0, 0, 0)
    if full_sweep:
        sigmas = np.arange(1, 1 << nv, dtype=np.uint64)
        pd, sig, j, examined = kernels.pd_search(faces, sigmas, -1, False, field, backend)
    else:
        sigmas = lcm_lattice(ideal)
        order = np.lexsort((sigmas, -_popcounts(sigmas)))
        sigmas = sigmas[order]
        # pd is at least the height, which is nv - dim for a squarefree ideal
        pd, sig, j, examined = kernels.pd_search(faces, sigmas, nv - dim - 1, True, field, backend)
    depth = nv - pd
    return OracleResult(depth, dim, pd, depth == dim, nv, field, sig, j, examined)


def hochster_depth_dim(g: Graph, field: str = "gf2", full_sweep: bool = False,
                       max_n: int = DEFAULT_MAX_N, force: bool = False,
                       backend: Optional[str] = None) -> OracleResult:
    """Depth, dimension, projective dimension and Cohen-Macaulayness of S/J_G.

    Works over 2n variables; isolated vertices contribute free variables.
    """
    if g.n > max_n and not force:
        raise OracleGuardError(f"oracle is guarded at n <= {max_n} (got n={g.n}); use force")
    return oracle_for_ideal(initial_ideal(g), field, full_sweep, backend)


class OracleGuardError(GraphError):
    """The graph exceeds the oracle's size guard."""


__all__ = [
    "AdmissiblePath", "HomologyProfile", "MonomialIdeal", "OracleGuardError", "OracleResult",
    "SimplicialComplex", "VariableIndexing", "admissible_paths",
    "hochster_depth_dim", "initial_ideal", "lcm_lattice", "reduced_homology", "stanley_reisner",
]
