"""Pure-Python (numpy) versions of the hot kernels.

Kept bit-for-bit compatible with the compiled ``_kernels`` extension: the
refinement hashes use the same constants and the same wrap-around uint64
arithmetic, so traces agree between the two back ends.
"""

import math

import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
COLOUR_MUL = np.uint64(0xD6E8FEB86659FD93)
CELL_MUL = np.uint64(0xA0761D6478BD642F)


def _mix(x):
    z = x + GOLDEN
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


def refine(colours, weights):
    """Refine a vertex colouring to the coarsest equitable one it contains.

    Returns ``(colours, trace, ncells)``.  Colours are ranks ``0..ncells-1``
    ordered first by the incoming colour, so the result is a refinement of the
    input as an ordered partition.  ``trace`` hashes every round and depends
    only on colours and weights, never on vertex names.
    """
    col = np.asarray(colours, dtype=np.int64).copy()
    w = np.asarray(weights, dtype=np.int64)
    n = col.shape[0]
    trace = np.zeros(1, dtype=np.uint64)
    if n == 0:
        return col, 0, 0
    nz = w != 0
    wkey = w.astype(np.uint64)
    ncells = int(col.max()) + 1
    while True:
        key = col.astype(np.uint64)[None, :] * COLOUR_MUL + wkey
        mixed = _mix(key)
        mixed[~nz] = 0
        h = mixed.sum(axis=1, dtype=np.uint64)
        order = np.lexsort((h, col))
        sc, sh = col[order], h[order]
        new_cell = np.empty(n, dtype=bool)
        new_cell[0] = True
        new_cell[1:] = (sc[1:] != sc[:-1]) | (sh[1:] != sh[:-1])
        ranks = np.cumsum(new_cell) - 1
        starts = np.flatnonzero(new_cell)
        sizes = np.diff(np.append(starts, n)).astype(np.uint64)
        cell_key = _mix(sc[starts].astype(np.uint64) * CELL_MUL + sh[starts])
        pos = np.arange(starts.size, dtype=np.uint64)
        round_hash = _mix(cell_key + pos * GOLDEN + sizes).sum(dtype=np.uint64)
        trace = _mix(trace + round_hash)
        col[order] = ranks
        new_count = int(starts.size)
        if new_count == ncells:
            return col, int(trace[0]), new_count
        ncells = new_count


def permutes_matrix(w, perm):
    """True when ``w[perm[i], perm[j]] == w[i, j]`` for all ``i, j``."""
    w = np.asarray(w)
    p = np.asarray(perm, dtype=np.intp)
    return bool(np.array_equal(w[np.ix_(p, p)], w))


def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Stops when the off-diagonal Frobenius norm falls to ``tol * ||a||_F``.
    Returns ``(eigenvalues, eigenvectors, sweeps)``; ``sweeps`` is ``-1`` if
    the cap was hit first.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    offdiag = 1.0 - v
    thresh = tol * math.sqrt(float(np.sum(a * a)))
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(float(np.sum(a * a * offdiag)))
        if off <= thresh:
            return np.diag(a).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return np.diag(a).copy(), v, -1
