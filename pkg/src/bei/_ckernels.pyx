# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) homology kernels; same signatures as ``_pykernels``."""

from libc.stdint cimport uint64_t, int32_t
from libcpp.vector cimport vector

import numpy as np


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef int _sparse_rank(vector[vector[int32_t]]& rows, Py_ssize_t ncols) noexcept nogil:
    """GF(2) rank of sparse rows (sorted column lists), pivoting on the largest column."""
    cdef vector[int32_t] owner
    owner.assign(ncols, -1)
    cdef vector[vector[int32_t]] basis
    cdef vector[int32_t] cur
    cdef vector[int32_t] tmp
    cdef Py_ssize_t r, a, b, na, nb
    cdef int32_t low, p
    for r in range(<Py_ssize_t>rows.size()):
        cur = rows[r]
        while cur.size() > 0:
            low = cur.back()
            p = owner[low]
            if p < 0:
                owner[low] = <int32_t>basis.size()
                basis.push_back(cur)
                break
            tmp.clear()
            a = 0
            b = 0
            na = cur.size()
            nb = basis[p].size()
            while a < na and b < nb:
                if cur[a] < basis[p][b]:
                    tmp.push_back(cur[a])
                    a += 1
                elif cur[a] > basis[p][b]:
                    tmp.push_back(basis[p][b])
                    b += 1
                else:
                    a += 1
                    b += 1
            while a < na:
                tmp.push_back(cur[a])
                a += 1
            while b < nb:
                tmp.push_back(basis[p][b])
                b += 1
            cur.swap(tmp)
    return <int>basis.size()


cdef class _Workspace:
    cdef vector[int32_t] index
    cdef vector[vector[uint64_t]] by_dim
    cdef vector[vector[int32_t]] rows

    def __cinit__(self, int num_vars):
        self.index.assign((<size_t>1) << num_vars, -1)

    cdef void gather(self, const uint64_t[:] faces, uint64_t sigma, int max_size) noexcept nogil:
        cdef Py_ssize_t i
        cdef uint64_t f
        cdef int c
        self.by_dim.resize(max_size if max_size > 0 else 0)
        for i in range(<Py_ssize_t>self.by_dim.size()):
            self.by_dim[i].clear()
        for i in range(faces.shape[0]):
            f = faces[i]
            if f & ~sigma:
                continue
            c = popcount64(f)
            if c > max_size:
                break
            self.index[f] = <int32_t>self.by_dim[c - 1].size()
            self.by_dim[c - 1].push_back(f)

    cdef Py_ssize_t count(self, int dim) noexcept nogil:
        if dim == -1:
            return 1
        if dim < 0 or dim >= <int>self.by_dim.size():
            return 0
        return self.by_dim[dim].size()

    cdef int rank(self, int dim) noexcept nogil:
        cdef Py_ssize_t i, k, t
        cdef uint64_t f, x, low
        cdef int32_t v
        if dim == 0:
            return 1 if self.count(0) > 0 else 0
        if dim < 0 or dim >= <int>self.by_dim.size():
            return 0
        self.rows.resize(self.by_dim[dim].size())
        for i in range(<Py_ssize_t>self.by_dim[dim].size()):
            f = self.by_dim[dim][i]
            self.rows[i].clear()
            x = f
            while x:
                low = x & (~x + 1)
                x ^= low
                v = self.index[f ^ low]
                # insertion keeps the short row sorted
                self.rows[i].push_back(v)
                k = self.rows[i].size() - 1
                while k > 0 and self.rows[i][k - 1] > v:
                    self.rows[i][k] = self.rows[i][k - 1]
                    k -= 1
                self.rows[i][k] = v
        return _sparse_rank(self.rows, self.by_dim[dim - 1].size())


def _as_faces(faces):
    return np.ascontiguousarray(faces, dtype=np.uint64)


def _num_vars(const uint64_t[:] faces, uint64_t extra):
    cdef uint64_t acc = extra
    cdef Py_ssize_t i
    for i in range(faces.shape[0]):
        acc |= faces[i]
    n = 0
    while acc >> n:
        n += 1
    return n


def reduced_betti(faces, sigma, int max_dim, field="gf2"):
    if field != "gf2":
        raise ValueError("compiled kernels support field='gf2' only")
    cdef const uint64_t[:] fv = _as_faces(faces)
    cdef uint64_t s = <uint64_t>int(sigma)
    cdef _Workspace ws = _Workspace(_num_vars(fv, s))
    ws.gather(fv, s, max_dim + 2)
    ranks = [ws.rank(m) for m in range(max_dim + 2)]
    out = [ws.count(-1) - ranks[0]]
    for j in range(max_dim + 1):
        out.append(ws.count(j) - ranks[j] - (ranks[j + 1] if j + 1 < len(ranks) else 0))
    return out


def pd_search(faces, sigmas, int best, bint prune=True, field="gf2"):
    if field != "gf2":
        raise ValueError("compiled kernels support field='gf2' only")
    cdef const uint64_t[:] fv = _as_faces(faces)
    cdef const uint64_t[:] sv = np.ascontiguousarray(sigmas, dtype=np.uint64)
    cdef uint64_t all_sigma = 0
    cdef Py_ssize_t i
    for i in range(sv.shape[0]):
        all_sigma |= sv[i]
    cdef _Workspace ws = _Workspace(_num_vars(fv, all_sigma))
    cdef uint64_t sigma, wit_sigma = 0
    cdef int k, top, j, j_found, wit_j = 0, r_prev, r_next
    cdef long examined = 0
    with nogil:
        for i in range(sv.shape[0]):
            sigma = sv[i]
            k = popcount64(sigma)
            if prune:
                top = k - 2 - best
            else:
                top = k - 1
            if top < -1:
                if prune:
                    break
                continue
            examined += 1
            ws.gather(fv, sigma, top + 2)
            r_prev = ws.rank(0)
            j_found = -2
            if ws.count(-1) - r_prev:
                j_found = -1
            else:
                for j in range(top + 1):
                    r_next = ws.rank(j + 1)
                    if ws.count(j) - r_prev - r_next:
                        j_found = j
                        break
                    r_prev = r_next
            if j_found != -2 and k - j_found - 1 > best:
                best = k - j_found - 1
                wit_sigma = sigma
                wit_j = j_found
    return best, int(wit_sigma), wit_j, examined
