"""Quotient matrices over vertex partitions and the resulting spectral split.

For an equitable partition with constant degree on each part, every
eigenspace of the normalised Laplacian splits into functions constant on the
parts (carried by the symmetric quotient matrix) and functions summing to zero
on every part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import NotOrbitPartition, PartitionInvalid, ToleranceFailure
from .hypermodel import OrientedHypergraph, check_sign_function, sigma_transform
from .matrices import laplacians
from .spectra import TOL_EIG, Spectrum, eig_symmetric, hypergraph_spectrum
from .symmetry import DEFAULT_KIND, automorphism_group, orbits

TOL_PRODUCT = 1e-12
TOL_EQUITABLE = 1e-9
TOL_RANK = 1e-8


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple
    n: int

    def __post_init__(self):
        parts = tuple(tuple(sorted(int(i) for i in p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        flat = [i for p in parts for i in p]
        if any(len(p) == 0 for p in parts):
            raise PartitionInvalid("empty part")
        if sorted(flat) != list(range(self.n)):
            raise PartitionInvalid(f"parts do not partition the {self.n} vertices")

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(tuple((i,) for i in range(n)), n)

    @property
    def l(self) -> int:
        return len(self.parts)

    @property
    def characteristic(self) -> np.ndarray:
        s = np.zeros((self.n, self.l))
        for a, part in enumerate(self.parts):
            s[list(part), a] = 1.0
        return s

    @property
    def sizes(self) -> np.ndarray:
        return np.diag([float(len(p)) for p in self.parts])

    def constant_projector(self) -> np.ndarray:
        s = self.characteristic
        return s @ np.diag(1.0 / np.diag(self.sizes)) @ s.T


def quotient_matrices(lsym: np.ndarray, part: VertexPartition) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and symmetric quotient matrices, each computed two ways and compared."""
    lsym = np.asarray(lsym, dtype=float)
    if lsym.shape != (part.n, part.n):
        raise PartitionInvalid(f"partition of {part.n} vertices for a {lsym.shape} matrix")
    s = part.characteristic
    k = np.diag(part.sizes)
    q_prod = np.diag(1.0 / k) @ s.T @ lsym @ s
    root = np.diag(1.0 / np.sqrt(k))
    qsym_prod = root @ s.T @ lsym @ s @ root
    q = np.empty((part.l, part.l))
    qsym = np.empty((part.l, part.l))
    for a, pa in enumerate(part.parts):
        for b, pb in enumerate(part.parts):
            block = lsym[np.ix_(pa, pb)].sum()
            q[a, b] = block / len(pa)
            qsym[a, b] = block / np.sqrt(len(pa) * len(pb))
    scale = max(1.0, float(np.max(np.abs(lsym)))) if lsym.size else 1.0
    if np.max(np.abs(q - q_prod)) > TOL_PRODUCT * scale or np.max(np.abs(qsym - qsym_prod)) > TOL_PRODUCT * scale:
        raise ToleranceFailure("entrywise and product forms of the quotient disagree")
    return q, qsym


def check_equitable(matrix: np.ndarray, part: VertexPartition, tol: float = TOL_EQUITABLE) -> bool:
    """Constant row sums inside every block of ``matrix``."""
    for pb in part.parts:
        sums = np.asarray(matrix)[:, list(pb)].sum(axis=1)
        for pa in part.parts:
            block = sums[list(pa)]
            if block.max() - block.min() > tol:
                return False
    return True


def orbit_vertex_partition(g: OrientedHypergraph, kind: str = DEFAULT_KIND) -> VertexPartition:
    return VertexPartition(orbits(automorphism_group(g, kind)).orbits, g.n)


@dataclass(frozen=True)
class QuotientNetwork:
    nodes: tuple
    adjacency: np.ndarray
    edges: tuple  # (a, b, weight) with a <= b; a == b is a self-loop


def _part_names(g: OrientedHypergraph, part: VertexPartition) -> tuple:
    names = []
    for p in part.parts:
        names.append(g.labels[p[0]] if len(p) == 1 else "{" + ",".join(g.labels[i] for i in p) + "}")
    return tuple(names)


def quotient_network(
    g: OrientedHypergraph,
    part: VertexPartition | None = None,
    names: Sequence[str] | None = None,
    kind: str = DEFAULT_KIND,
) -> QuotientNetwork:
    part = orbit_vertex_partition(g, kind) if part is None else part
    _, qsym = quotient_matrices(laplacians(g).symmetrised, part)
    names = tuple(names) if names is not None else _part_names(g, part)
    edges = []
    for a in range(part.l):
        for b in range(a, part.l):
            if qsym[a, b] != 0.0:
                edges.append((names[a], names[b], float(qsym[a, b])))
    return QuotientNetwork(names, qsym, tuple(edges))


@dataclass(frozen=True)
class SplitRow:
    eigenvalue: float
    mult: int
    quotient_mult: int
    zerosum_mult: int
    constant_basis: np.ndarray = field(repr=False)
    zerosum_basis: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SplitReport:
    partition: VertexPartition
    spectrum: Spectrum
    quotient_spectrum: Spectrum
    rows: tuple
    sigma: tuple | None = None

    @property
    def quotient_total(self) -> int:
        return sum(r.quotient_mult for r in self.rows)

    @property
    def zerosum_total(self) -> int:
        return sum(r.zerosum_mult for r in self.rows)


def _orth(m: np.ndarray, tol: float) -> np.ndarray:
    if m.size == 0:
        return np.zeros((m.shape[0], 0))
    u, sv, _ = np.linalg.svd(m, full_matrices=False)
    return u[:, sv > tol * max(1.0, sv[0] if sv.size else 1.0)]


def contained(sub: Sequence[float], full: Sequence[float], tol: float) -> bool:
    """Greedy matching of sorted values: is ``sub`` a sub-multiset of ``full`` within ``tol``?"""
    remaining = sorted(float(x) for x in full)
    for x in sorted(float(v) for v in sub):
        hit = next((k for k, y in enumerate(remaining) if abs(x - y) <= tol), None)
        if hit is None:
            return False
        remaining.pop(hit)
    return True


def spectral_split(
    g: OrientedHypergraph,
    part: VertexPartition | None = None,
    spec: Spectrum | None = None,
    tol: float = TOL_EIG,
    kind: str = DEFAULT_KIND,
) -> SplitReport:
    """Split every eigenspace into constant-on-parts and zero-sum-on-parts pieces.

    Raises
    ------
    NotOrbitPartition
        if the partition is not equitable on the symmetrised Laplacian or the
        degree is not constant on each part.
    ToleranceFailure
        if the two pieces do not add up to the multiplicity, or the quotient
        spectrum is not contained in the full spectrum.
    """
    bundle = laplacians(g)
    part = orbit_vertex_partition(g, kind) if part is None else part
    deg = np.diag(bundle.degree)
    for p in part.parts:
        if len(set(int(deg[i]) for i in p)) > 1:
            raise NotOrbitPartition("degree is not constant on a part")
    if not check_equitable(bundle.symmetrised, part):
        raise NotOrbitPartition("partition is not equitable on the symmetrised Laplacian")
    spec = hypergraph_spectrum(g, tol) if spec is None else spec
    _, qsym = quotient_matrices(bundle.symmetrised, part)
    qspec = eig_symmetric(qsym, tol=tol)
    if not contained(qspec.eigenvalues, spec.eigenvalues, tol):
        raise ToleranceFailure("quotient spectrum is not contained in the hypergraph spectrum")
    proj = part.constant_projector()
    inv_root = 1.0 / np.sqrt(deg.astype(float))
    rows = []
    for lam, idx in spec.multiplicity_groups(tol):
        funcs = spec.eigenvectors[:, idx] * inv_root[:, None]
        const = _orth(proj @ funcs, TOL_RANK)
        zero = _orth(funcs - proj @ funcs, TOL_RANK)
        if const.shape[1] + zero.shape[1] != len(idx):
            raise ToleranceFailure(f"eigenspace of {lam:.6g} does not split cleanly")
        rows.append(SplitRow(lam, len(idx), const.shape[1], zero.shape[1], const, zero))
    qcount = sum(r.quotient_mult for r in rows)
    if qcount != part.l:
        raise ToleranceFailure(f"constant-on-parts dimensions sum to {qcount}, expected {part.l}")
    for r in rows:
        matched = int(np.sum(np.abs(qspec.eigenvalues - r.eigenvalue) <= tol))
        if matched != r.quotient_mult:
            raise ToleranceFailure(f"quotient multiplicity mismatch at eigenvalue {r.eigenvalue:.6g}")
    return SplitReport(part, spec, qspec, tuple(rows))


def signed_spectral_split(
    g: OrientedHypergraph,
    sigma: Sequence[int],
    part: VertexPartition | None = None,
    tol: float = TOL_EIG,
    kind: str = DEFAULT_KIND,
) -> SplitReport:
    """Split on ``sigma(G)``, then carry eigenfunctions back by ``f -> sigma * f``."""
    sigma = check_sign_function(g, sigma)
    flipped = sigma_transform(g, sigma)
    report = spectral_split(flipped, part, tol=tol, kind=kind)
    s = np.asarray(sigma, dtype=float)[:, None]
    rows = tuple(
        SplitRow(r.eigenvalue, r.mult, r.quotient_mult, r.zerosum_mult, s * r.constant_basis, s * r.zerosum_basis)
        for r in report.rows
    )
    return SplitReport(report.partition, report.spectrum, report.quotient_spectrum, rows, sigma)
