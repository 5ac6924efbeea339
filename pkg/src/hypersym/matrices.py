"""Matrix representations of an oriented hypergraph.

Incidence, degree, adjacency and Kirchhoff matrices are integer valued and
built exactly; only the two normalised Laplacians are floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeZeroVertex
from .hypermodel import OrientedHypergraph, VertexRef


@dataclass(frozen=True)
class MatrixBundle:
    incidence: np.ndarray
    degree: np.ndarray
    adjacency: np.ndarray
    kirchhoff: np.ndarray
    normalised: np.ndarray
    symmetrised: np.ndarray

    def get(self, which: str) -> np.ndarray:
        return {
            "I": self.incidence,
            "D": self.degree,
            "A": self.adjacency,
            "delta": self.kirchhoff,
            "L": self.normalised,
            "Lsym": self.symmetrised,
        }[which]


@dataclass(frozen=True)
class AuxiliaryGraph:
    n: int
    edges: tuple  # (i, j, weight) with i < j

    def weight(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        for u, v, w in self.edges:
            if (u, v) == (a, b):
                return w
        return 0


def _require_positive_degrees(g: OrientedHypergraph) -> np.ndarray:
    deg = g.degrees()
    zero = np.flatnonzero(deg == 0)
    if zero.size:
        names = [g.labels[i] for i in zero]
        raise DegreeZeroVertex(f"vertices of degree zero: {names}")
    return deg


def _incidence(g: OrientedHypergraph) -> np.ndarray:
    inc = np.zeros((g.n, g.m), dtype=np.int64)
    for k, h in enumerate(g.edges):
        for i in h.inputs:
            inc[i, k] = 1
        for i in h.outputs:
            inc[i, k] = -1
    return inc


def incidence_matrix(g: OrientedHypergraph) -> np.ndarray:
    _require_positive_degrees(g)
    return _incidence(g)


def codegree_matrices(g: OrientedHypergraph) -> tuple[np.ndarray, np.ndarray]:
    """Matrices of co-oriented and anti-oriented hyperedge counts.

    With incidence matrix ``I``, ``I @ I.T`` counts co-oriented minus
    anti-oriented memberships and ``|I| @ |I|.T`` counts both together.
    """
    inc = _incidence(g)
    signed = inc @ inc.T
    both = np.abs(inc) @ np.abs(inc).T
    plus = (both + signed) // 2
    minus = (both - signed) // 2
    return plus, minus


def codegrees(g: OrientedHypergraph, i: VertexRef, j: VertexRef) -> tuple[int, int]:
    a, b = g.index(i), g.index(j)
    plus = minus = 0
    for h in g.edges:
        sa, sb = h.sign(a), h.sign(b)
        if sa == 0 or sb == 0:
            continue
        if sa == sb:
            plus += 1
        else:
            minus += 1
    return plus, minus


def adjacency_matrix(g: OrientedHypergraph) -> np.ndarray:
    plus, minus = codegree_matrices(g)
    adj = minus - plus
    np.fill_diagonal(adj, 0)
    return adj


def kirchhoff_matrix(g: OrientedHypergraph) -> np.ndarray:
    inc = _incidence(g)
    return inc @ inc.T


def laplacians(g: OrientedHypergraph) -> MatrixBundle:
    deg = _require_positive_degrees(g)
    inc = _incidence(g)
    kirchhoff = inc @ inc.T
    adjacency = np.diag(deg) - kirchhoff
    degf = deg.astype(float)
    normalised = kirchhoff / degf[:, None]
    root = np.sqrt(degf)
    # entrywise rather than D^1/2 L D^-1/2 so the result is exactly symmetric
    symmetrised = kirchhoff / np.outer(root, root)
    return MatrixBundle(
        incidence=inc,
        degree=np.diag(deg),
        adjacency=adjacency,
        kirchhoff=kirchhoff,
        normalised=normalised,
        symmetrised=symmetrised,
    )


def auxiliary_graph(g: OrientedHypergraph) -> AuxiliaryGraph:
    adj = adjacency_matrix(g)
    rows, cols = np.nonzero(np.triu(adj, 1))
    edges = tuple((int(i), int(j), int(adj[i, j])) for i, j in zip(rows, cols))
    return AuxiliaryGraph(g.n, edges)
