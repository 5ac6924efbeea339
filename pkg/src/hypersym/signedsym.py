"""Signed automorphisms: symmetries that also reverse vertex roles.

For a sign function ``sigma`` the reference frame is ``sigma(G)``, the
hypergraph with the roles of all ``sigma = -1`` vertices reversed.  A
permutation ``p`` paired with ``sigma`` is a signed automorphism of ``G``
exactly when ``p`` is an ordinary automorphism of ``sigma(G)``.  As an element
of the hyperoctahedral group acting on ``G`` itself, that symmetry is
``(p, i -> sigma(i) * sigma(p(i)))``.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .errors import SearchCapExceeded
from .hypermodel import OrientedHypergraph, check_sign_function, sigma_transform
from .matrices import adjacency_matrix, codegree_matrices
from .symmetry import (
    DEFAULT_KIND,
    AutomorphismGroup,
    OrbitPartition,
    Permutation,
    _ranks,
    automorphism_group,
    is_automorphism,
    orbits,
)

DEFAULT_SIGN_CAP = 20


@dataclass(frozen=True)
class SignedPermutation:
    perm: Permutation
    sign: tuple

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(Permutation.identity(n), (1,) * n)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """``(p, s) * (q, t) == (p q, i -> t(i) * s(q(i)))``."""
        q = other.perm.images
        sign = tuple(other.sign[i] * self.sign[q[i]] for i in range(len(q)))
        return SignedPermutation(self.perm * other.perm, sign)

    def inverse(self) -> "SignedPermutation":
        inv = self.perm.inverse()
        return SignedPermutation(inv, tuple(self.sign[inv(i)] for i in range(inv.n)))

    def signed_image(self, i: int) -> int:
        """Image of vertex ``i`` in ``{+-1, ..., +-n}`` (1-based)."""
        return self.sign[i] * (self.perm(i) + 1)

    def format(self, labels: Sequence[str] | None = None) -> str:
        neg = [i for i, s in enumerate(self.sign) if s < 0]
        name = (lambda i: labels[i]) if labels is not None else (lambda i: str(i + 1))
        flips = ",".join(name(i) for i in neg)
        return f"{self.perm.format(labels)}[-{{{flips}}}]" if neg else self.perm.format(labels)


def action_preserves(g: OrientedHypergraph, ps: SignedPermutation) -> bool:
    """Does the signed action (vertex ``i`` to ``p(i)``, role times ``sign(i)``) map ``G`` onto itself?"""
    p, s = ps.perm.images, ps.sign
    moved = []
    for h in g.edges:
        ins = {p[i] for i in h.inputs if s[i] > 0} | {p[i] for i in h.outputs if s[i] < 0}
        outs = {p[i] for i in h.outputs if s[i] > 0} | {p[i] for i in h.inputs if s[i] < 0}
        moved.append((frozenset(ins), frozenset(outs)))
    return Counter(moved) == g.edge_counter()


def is_signed_automorphism(
    g: OrientedHypergraph,
    ps: SignedPermutation,
    kind: str = DEFAULT_KIND,
    fast: bool = True,
) -> bool:
    """Whether ``ps.perm`` is a ``kind`` automorphism of ``sigma(G)`` with ``sigma = ps.sign``.

    For the matrix kinds the fast path uses
    ``A(sigma(G))_ij = sigma(i) sigma(j) A(G)_ij`` instead of building
    ``sigma(G)``.
    """
    sigma = check_sign_function(g, ps.sign)
    if kind == "hypergraph" or not fast:
        return is_automorphism(sigma_transform(g, sigma), ps.perm, kind)
    s = np.asarray(sigma, dtype=np.int64)
    signed_adj = np.ascontiguousarray(adjacency_matrix(g) * np.outer(s, s), dtype=np.int64)
    p = np.asarray(ps.perm.images, dtype=np.int64)
    if kind == "laplacian":
        deg = g.degrees()
        if not np.array_equal(deg[p], deg):
            return False
    elif kind != "adjacency":
        raise ValueError(f"unknown automorphism kind {kind!r}")
    return kernels.permutes_matrix(signed_adj, p)


@dataclass(frozen=True)
class SignedOrbitPartition:
    orbits: tuple
    sigma: tuple
    n: int

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def redundancy(self) -> Fraction:
        return Fraction(len(self.orbits) - 1, self.n)

    def relative_signs(self) -> list[tuple]:
        """Per orbit, the sign of each member relative to the orbit's first vertex."""
        return [tuple(self.sigma[orb[0]] * self.sigma[i] for i in orb) for orb in self.orbits]

    def named(self, labels: Sequence[str]) -> list[list[str]]:
        return [[labels[i] for i in orb] for orb in self.orbits]

    def signed_named(self, labels: Sequence[str]) -> list[list[str]]:
        out = []
        for orb, rel in zip(self.orbits, self.relative_signs()):
            out.append([("+" if s > 0 else "-") + labels[i] for i, s in zip(orb, rel)])
        return out


@dataclass(frozen=True)
class SignedAutomorphismGroup:
    """Automorphisms of ``sigma(G)``, read as signed automorphisms of ``G``."""

    sigma: tuple
    group: AutomorphismGroup

    @property
    def kind(self) -> str:
        return self.group.kind

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def generators(self) -> tuple:
        s = self.sigma
        return tuple(
            SignedPermutation(p, tuple(s[i] * s[p(i)] for i in range(p.n))) for p in self.group.generators
        )

    def orbits(self) -> SignedOrbitPartition:
        return SignedOrbitPartition(orbits(self.group).orbits, self.sigma, self.group.n)


def signed_automorphism_group(
    g: OrientedHypergraph,
    sigma: Sequence[int],
    kind: str = DEFAULT_KIND,
    cap: int | None = None,
) -> SignedAutomorphismGroup:
    sigma = check_sign_function(g, sigma)
    return SignedAutomorphismGroup(sigma, automorphism_group(sigma_transform(g, sigma), kind, cap))


@dataclass(frozen=True)
class SignedRedundancy:
    r_signed: Fraction
    sigma: tuple
    orbits: SignedOrbitPartition
    group: SignedAutomorphismGroup
    r_unsigned: Fraction
    examined: int
    floor: int


def orbit_floor(g: OrientedHypergraph, kind: str = DEFAULT_KIND) -> int:
    """Lower bound on the orbit count valid for every sign function.

    Role reversal leaves degrees, hyperedge cardinalities and the absolute
    adjacency weights unchanged, so the coarsest equitable colouring of those
    data is refined by the orbits of every ``sigma(G)``.
    """
    if kind == "hypergraph":
        plus, minus = codegree_matrices(g)
        w = plus + minus
        np.fill_diagonal(w, 0)
        cards: list[list[int]] = [[] for _ in range(g.n)]
        for h in g.edges:
            for i in h.vertices:
                cards[i].append(h.cardinality())
        colours = _ranks([tuple(sorted(c)) for c in cards])
    else:
        w = np.abs(adjacency_matrix(g))
        if kind == "laplacian":
            colours = _ranks([int(d) for d in g.degrees()])
        else:
            colours = np.zeros(g.n, dtype=np.int64)
    return kernels.refine(colours, np.ascontiguousarray(w, dtype=np.int64))[2]


def sign_candidates(n: int, reduce_flip: bool = True):
    """Sign functions in search order: fewest -1 entries first, then lexicographic (+1 < -1)."""
    start = 1 if reduce_flip else 0
    for k in range(0, n - start + 1):
        block = []
        for neg in itertools.combinations(range(start, n), k):
            s = [1] * n
            for i in neg:
                s[i] = -1
            block.append(tuple(s))
        block.sort(key=lambda s: tuple(x < 0 for x in s))
        yield from block


def _orbit_count(args) -> int:
    g, sigma, kind, cap = args
    return orbits(automorphism_group(sigma_transform(g, sigma), kind, cap)).count


def signed_redundancy(
    g: OrientedHypergraph,
    kind: str = DEFAULT_KIND,
    sign_cap: int | None = None,
    reduce_flip: bool = True,
    workers: int = 1,
    cap: int | None = None,
) -> SignedRedundancy:
    """Minimise the orbit count over all sign functions.

    Up to ``sign_cap`` vertices the search is exhaustive unless it reaches the
    sign-independent lower bound of :func:`orbit_floor`, where it stops early.
    Larger inputs are accepted only if that bound is reached within the number
    of candidates a ``sign_cap``-vertex search would examine.

    Ties go to the first minimiser in :func:`sign_candidates` order.  With
    ``reduce_flip`` the first vertex is held at +1, which loses nothing because
    ``sigma`` and ``-sigma`` give the same hypergraph up to reversing every
    hyperedge, and so the same automorphisms.
    """
    limit = sign_cap if sign_cap is not None else int(os.environ.get("HYPERSYM_MAX_N", DEFAULT_SIGN_CAP))
    floor = orbit_floor(g, kind)
    # Past the cap the search may still finish exactly by reaching the floor
    # within the budget of a cap-sized exhaustive search.
    budget = None if g.n <= limit else 2 ** max(limit - 1, 0)
    best = None
    examined = 0
    candidates = sign_candidates(g.n, reduce_flip)
    chunk = max(1, workers * 8)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        done = False
        while not done:
            block = list(itertools.islice(candidates, chunk))
            if not block:
                break
            jobs = [(g, s, kind, cap) for s in block]
            counts = list(pool.map(_orbit_count, jobs)) if pool else [_orbit_count(j) for j in jobs]
            for s, count in zip(block, counts):
                examined += 1
                if best is None or count < best[0]:
                    best = (count, s)
                if count <= floor:
                    done = True
                    break
                if budget is not None and examined >= budget:
                    raise SearchCapExceeded(
                        f"{g.n} vertices exceeds the sign-search cap {limit} and no sign function "
                        f"among the first {budget} reached the orbit floor"
                    )
    finally:
        if pool:
            pool.shutdown()
    count, sigma = best
    group = signed_automorphism_group(g, sigma, kind, cap)
    unsigned = orbits(automorphism_group(g, kind, cap)).redundancy
    return SignedRedundancy(
        r_signed=Fraction(count - 1, g.n),
        sigma=sigma,
        orbits=group.orbits(),
        group=group,
        r_unsigned=unsigned,
        examined=examined,
        floor=floor,
    )
