"""Pure-Python homology kernels.

Faces are bitsets over the complex's vertices, passed sorted by
(popcount, value) and excluding the empty face. Both entry points mirror
the compiled module ``_ckernels`` exactly; the rational field is only
available here.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                break
            row ^= p
    return len(pivots)


def _q_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank over the rationals by fraction-free sparse elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            p = pivots.get(col)
            if p is None:
                pivots[col] = row
                break
            a, b = row[col], p[col]
            new = {c: b * v for c, v in row.items()}
            for c, v in p.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if new:
                content = 0
                for v in new.values():
                    content = gcd(content, v)
                if content > 1:
                    new = {c: v // content for c, v in new.items()}
            row = new
    return len(pivots)


class _Restriction:
    """Faces of the complex lying inside ``sigma``, grouped by dimension."""

    def __init__(self, faces: Sequence[int], sigma: int, max_size: int):
        self.by_dim: list[list[int]] = [[] for _ in range(max_size)]
        self.index: dict[int, int] = {}
        for f in faces:
            f = int(f)
            if f & ~sigma:
                continue
            c = _popcount(f)
            if c > max_size:
                break
            bucket = self.by_dim[c - 1]
            self.index[f] = len(bucket)
            bucket.append(f)

    def count(self, dim: int) -> int:
        if dim == -1:
            return 1
        if dim >= len(self.by_dim):
            return 0
        return len(self.by_dim[dim])

    def rank(self, dim: int, field: str) -> int:
        """Rank of the boundary map from ``dim``-faces to ``(dim-1)``-faces."""
        if dim == 0:
            return 1 if self.count(0) else 0
        if dim >= len(self.by_dim) or dim < 0:
            return 0
        idx = self.index
        if field == "gf2":
            rows = []
            for f in self.by_dim[dim]:
                row = 0
                x = f
                while x:
                    low = x & -x
                    x ^= low
                    row |= 1 << idx[f ^ low]
                rows.append(row)
            return _gf2_rank(rows)
        qrows = []
        for f in self.by_dim[dim]:
            row = {}
            x = f
            sign = 1
            while x:
                low = x & -x
                x ^= low
                row[idx[f ^ low]] = sign
                sign = -sign
            qrows.append(row)
        return _q_rank(qrows)


def reduced_betti(faces: Sequence[int], sigma: int, max_dim: int, field: str = "gf2") -> list[int]:
    """Reduced Betti numbers of the complex restricted to ``sigma`` in dimensions -1..max_dim."""
    res = _Restriction(faces, sigma, max_dim + 2)
    ranks = [res.rank(m, field) for m in range(max_dim + 2)]
    out = [res.count(-1) - ranks[0]]
    for j in range(max_dim + 1):
        nxt = ranks[j + 1] if j + 1 < len(ranks) else 0
        out.append(res.count(j) - ranks[j] - nxt)
    return out


def pd_search(
    faces: Sequence[int],
    sigmas: Sequence[int],
    best: int,
    prune: bool = True,
    field: str = "gf2",
) -> tuple[int, int, int, int]:
    """Maximize |sigma| - j - 1 over sigmas with nonzero reduced H_j of the restriction.

    ``sigmas`` must be sorted by decreasing popcount when ``prune`` is set; a
    sigma is then only examined in the dimensions that could beat ``best``.
    Returns (pd, witness sigma, witness j, number of sigmas examined).
    """
    wit_sigma, wit_j, examined = 0, 0, 0
    for sigma in sigmas:
        sigma = int(sigma)
        k = _popcount(sigma)
        top = k - 2 - best if prune else k - 1
        if top < -1:
            if prune:
                break
            continue
        examined += 1
        res = _Restriction(faces, sigma, top + 2)
        r_prev = res.rank(0, field)
        if res.count(-1) - r_prev:
            j_found = -1
        else:
            j_found = None
            for j in range(top + 1):
                r_next = res.rank(j + 1, field)
                if res.count(j) - r_prev - r_next:
                    j_found = j
                    break
                r_prev = r_next
        if j_found is not None and k - j_found - 1 > best:
            best, wit_sigma, wit_j = k - j_found - 1, sigma, j_found
    return best, wit_sigma, wit_j, examined
