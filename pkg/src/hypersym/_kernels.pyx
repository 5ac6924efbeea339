# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: colour refinement, matrix-permutation test, cyclic Jacobi.

Same contracts and the same hash constants as ``_kernels_py``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, copysign
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t MIX2 = 0x94D049BB133111EBULL
cdef uint64_t COLOUR_MUL = 0xD6E8FEB86659FD93ULL
cdef uint64_t CELL_MUL = 0xA0761D6478BD642FULL


cdef inline uint64_t _mix(uint64_t x) nogil:
    cdef uint64_t z = x + GOLDEN
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


def refine(colours, weights):
    cdef int64_t[::1] col = np.array(colours, dtype=np.int64, copy=True)
    cdef const int64_t[:, ::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t n = col.shape[0]
    cdef Py_ssize_t i, j, k, start
    cdef uint64_t trace = 0, round_hash, acc, cell_key
    cdef int64_t ncells, new_count, rank
    if n == 0:
        return np.asarray(col), 0, 0
    cdef uint64_t[::1] h = np.zeros(n, dtype=np.uint64)
    cdef int64_t[::1] sc = np.empty(n, dtype=np.int64)
    cdef uint64_t[::1] sh = np.empty(n, dtype=np.uint64)
    ncells = 0
    for i in range(n):
        if col[i] + 1 > ncells:
            ncells = col[i] + 1
    while True:
        for i in range(n):
            acc = 0
            for j in range(n):
                if w[i, j] != 0:
                    acc += _mix(<uint64_t>col[j] * COLOUR_MUL + <uint64_t>w[i, j])
            h[i] = acc
        order = np.lexsort((np.asarray(h), np.asarray(col)))
        for k in range(n):
            i = order[k]
            sc[k] = col[i]
            sh[k] = h[i]
        round_hash = 0
        rank = -1
        start = 0
        for k in range(n):
            if k == 0 or sc[k] != sc[k - 1] or sh[k] != sh[k - 1]:
                if k > 0:
                    cell_key = _mix(<uint64_t>sc[start] * CELL_MUL + sh[start])
                    round_hash += _mix(cell_key + <uint64_t>rank * GOLDEN + <uint64_t>(k - start))
                rank += 1
                start = k
        cell_key = _mix(<uint64_t>sc[start] * CELL_MUL + sh[start])
        round_hash += _mix(cell_key + <uint64_t>rank * GOLDEN + <uint64_t>(n - start))
        trace = _mix(trace + round_hash)
        new_count = rank + 1
        rank = -1
        for k in range(n):
            if k == 0 or sc[k] != sc[k - 1] or sh[k] != sh[k - 1]:
                rank += 1
            col[order[k]] = rank
        if new_count == ncells:
            return np.asarray(col), int(trace), int(new_count)
        ncells = new_count


def permutes_matrix(weights, perm):
    cdef const int64_t[:, ::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef const int64_t[::1] p = np.ascontiguousarray(perm, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0]
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if w[p[i], p[j]] != w[i, j]:
                return False
    return True


def jacobi_eigh(a, double tol, int max_sweeps):
    cdef double[:, ::1] m = np.array(a, dtype=np.float64, copy=True, order="C")
    cdef Py_ssize_t n = m.shape[0]
    cdef double[:, ::1] v = np.eye(n)
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double norm2 = 0.0, off2, thresh, apq, theta, t, c, s, x, y
    for p in range(n):
        for q in range(n):
            norm2 += m[p, q] * m[p, q]
    thresh = tol * sqrt(norm2)
    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off2 += m[p, q] * m[p, q]
        if sqrt(off2) <= thresh:
            return np.array([m[k, k] for k in range(n)]), np.asarray(v), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    x = m[k, p]
                    y = m[k, q]
                    m[k, p] = c * x - s * y
                    m[k, q] = s * x + c * y
                for k in range(n):
                    x = m[p, k]
                    y = m[q, k]
                    m[p, k] = c * x - s * y
                    m[q, k] = s * x + c * y
                m[p, q] = 0.0
                m[q, p] = 0.0
                for k in range(n):
                    x = v[k, p]
                    y = v[k, q]
                    v[k, p] = c * x - s * y
                    v[k, q] = s * x + c * y
    return np.array([m[k, k] for k in range(n)]), np.asarray(v), -1
