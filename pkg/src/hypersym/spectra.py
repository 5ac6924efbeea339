"""Symmetric eigendecomposition and hypergraph spectra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import kernels
from .errors import NoConvergence, NotSymmetric
from .hypermodel import OrientedHypergraph
from .matrices import laplacians

TOL_EIG = 1e-8
TOL_RES = 1e-10
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with orthonormal eigenvectors as columns.

    ``eigenfunctions``, when present, holds the matching eigenvectors of the
    non-symmetric normalised Laplacian (unit-normalised columns).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    tol: float = TOL_EIG
    eigenfunctions: np.ndarray | None = None

    def __len__(self):
        return len(self.eigenvalues)

    def multiplicity_groups(self, tol: float | None = None) -> list[tuple[float, list[int]]]:
        """Cluster consecutive eigenvalues closer than ``tol``; returns (mean, indices) pairs."""
        tol = self.tol if tol is None else tol
        groups: list[list[int]] = []
        for k, lam in enumerate(self.eigenvalues):
            if groups and lam - self.eigenvalues[groups[-1][-1]] <= tol:
                groups[-1].append(k)
            else:
                groups.append([k])
        return [(float(np.mean(self.eigenvalues[g])), g) for g in groups]

    def distinct(self, tol: float | None = None) -> list[tuple[float, int]]:
        return [(lam, len(idx)) for lam, idx in self.multiplicity_groups(tol)]

    def eigenfunction(self, k: int, labels: Sequence[str]) -> dict:
        vecs = self.eigenvectors if self.eigenfunctions is None else self.eigenfunctions
        return {lab: float(x) for lab, x in zip(labels, vecs[:, k])}


def _canonical_sign(vecs: np.ndarray) -> np.ndarray:
    vecs = vecs.copy()
    for k in range(vecs.shape[1]):
        col = vecs[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size and col[nz[0]] < 0:
            vecs[:, k] = -col
    return vecs


def _order(values: np.ndarray, vecs: np.ndarray, tol: float) -> np.ndarray:
    """Ascending eigenvalue; within a cluster, lexicographic on rounded vectors."""
    idx = np.argsort(values, kind="stable")
    out: list[int] = []
    k = 0
    while k < len(idx):
        j = k + 1
        while j < len(idx) and values[idx[j]] - values[idx[j - 1]] <= tol:
            j += 1
        block = list(idx[k:j])
        block.sort(key=lambda c: tuple(np.round(vecs[:, c], 9)))
        out.extend(block)
        k = j
    return np.array(out, dtype=np.intp)


def eig_symmetric(
    matrix,
    tol: float = TOL_EIG,
    symmetry_tol: float = 1e-12,
    max_sweeps: int = MAX_SWEEPS,
) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Raises
    ------
    NotSymmetric
        if ``matrix`` differs from its transpose by more than ``symmetry_tol``.
    NoConvergence
        if the off-diagonal mass is not below ``1e-12 * ||M||_F`` after
        ``max_sweeps`` sweeps.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.T)) > symmetry_tol:
        raise NotSymmetric("matrix is not symmetric")
    m = (m + m.T) / 2
    values, vecs, sweeps = kernels.jacobi_eigh(m, JACOBI_TOL, max_sweeps)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    vecs = _canonical_sign(vecs)
    order = _order(values, vecs, tol)
    return Spectrum(values[order], vecs[:, order], tol)


def hypergraph_spectrum(g: OrientedHypergraph, tol: float = TOL_EIG) -> Spectrum:
    """Normalised-Laplacian spectrum, computed on the symmetrised Laplacian.

    Eigenfunctions of the normalised Laplacian are recovered as
    ``D^{-1/2} v`` for each eigenvector ``v`` of the symmetrised one.
    """
    bundle = laplacians(g)
    spec = eig_symmetric(bundle.symmetrised, tol=tol)
    inv_root = 1.0 / np.sqrt(np.diag(bundle.degree).astype(float))
    funcs = spec.eigenvectors * inv_root[:, None]
    funcs = _canonical_sign(funcs / np.linalg.norm(funcs, axis=0))
    return Spectrum(spec.eigenvalues, spec.eigenvectors, tol, funcs)


def _values(x: Union[Spectrum, Sequence[float], np.ndarray]) -> np.ndarray:
    if isinstance(x, Spectrum):
        return np.asarray(x.eigenvalues, dtype=float)
    return np.sort(np.asarray(x, dtype=float))


def multiset_equal(a, b, tol: float = TOL_EIG) -> bool:
    """Equality of eigenvalue multisets, compared pairwise after sorting."""
    va, vb = _values(a), _values(b)
    return va.shape == vb.shape and bool(np.all(np.abs(va - vb) <= tol))


def residuals(matrix, spec: Spectrum) -> np.ndarray:
    """``||M v_k - lambda_k v_k||_2`` for every eigenpair."""
    m = np.asarray(matrix, dtype=float)
    return np.linalg.norm(m @ spec.eigenvectors - spec.eigenvectors * spec.eigenvalues, axis=0)
