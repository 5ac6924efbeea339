"""Vertex relations, automorphism groups, orbits and redundancy.

Three notions of automorphism are supported, from strongest to weakest:

``hypergraph``
    the permutation maps the multiset of hyperedges onto itself;
``laplacian``
    it preserves the adjacency matrix and all degrees;
``adjacency``
    it preserves the adjacency matrix only.

Groups are found by backtracking over individualised vertices with colour
refinement pruning.  At every level of the search the orbit of the chosen
base vertex under the pointwise stabiliser of the earlier base vertices is
completed, so the group order is the product of those orbit lengths.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import SearchCapExceeded
from .hypermodel import OrientedHypergraph, VertexRef
from .matrices import adjacency_matrix, codegree_matrices

KINDS = ("hypergraph", "laplacian", "adjacency")
DEFAULT_KIND = "hypergraph"
DEFAULT_CAP = 64


def search_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("HYPERSYM_MAX_N", DEFAULT_CAP))


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1`` in one-line notation."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(p * q)(i) == p(q(i))``."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def support(self) -> frozenset:
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple]:
        seen, out = set(), []
        for i in range(self.n):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def format(self, labels: Sequence[str] | None = None) -> str:
        name = (lambda i: labels[i]) if labels is not None else (lambda i: str(i + 1))
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(name(i) for i in c) + ")" for c in cyc)

    def __str__(self):
        return self.format()


# -- structures the search works on -------------------------------------------


def _ranks(keys: Sequence) -> np.ndarray:
    order = sorted(set(keys))
    pos = {k: r for r, k in enumerate(order)}
    return np.array([pos[k] for k in keys], dtype=np.int64)


@dataclass
class _Structure:
    weights: np.ndarray
    colours: np.ndarray
    verify: Callable[[Sequence[int]], bool]


def _hypergraph_structure(g: OrientedHypergraph) -> _Structure:
    plus, minus = codegree_matrices(g)
    base = g.m + 1
    w = np.where((plus + minus) > 0, 1 + plus * base + minus, 0)
    np.fill_diagonal(w, 0)
    deg = g.degrees()
    roles: list[list] = [[] for _ in range(g.n)]
    for h in g.edges:
        shape = (len(h.inputs), len(h.outputs))
        for i in h.inputs:
            roles[i].append(shape + (1,))
        for i in h.outputs:
            roles[i].append(shape + (-1,))
    colours = _ranks([(int(deg[i]), tuple(sorted(roles[i]))) for i in range(g.n)])
    target = g.edge_counter()

    def verify(perm):
        img = Counter(
            (frozenset(perm[i] for i in h.inputs), frozenset(perm[i] for i in h.outputs))
            for h in g.edges
        )
        return img == target

    return _Structure(w.astype(np.int64), colours, verify)


def _matrix_structure(g: OrientedHypergraph, with_degrees: bool) -> _Structure:
    adj = np.ascontiguousarray(adjacency_matrix(g), dtype=np.int64)
    deg = g.degrees()
    if with_degrees:
        colours = _ranks([int(d) for d in deg])

        def verify(perm):
            p = np.asarray(perm, dtype=np.int64)
            return bool(np.array_equal(deg[p], deg)) and kernels.permutes_matrix(adj, p)

    else:
        colours = np.zeros(g.n, dtype=np.int64)

        def verify(perm):
            return kernels.permutes_matrix(adj, np.asarray(perm, dtype=np.int64))

    return _Structure(adj, colours, verify)


def _structure(g: OrientedHypergraph, kind: str) -> _Structure:
    if kind == "hypergraph":
        return _hypergraph_structure(g)
    if kind == "laplacian":
        return _matrix_structure(g, with_degrees=True)
    if kind == "adjacency":
        return _matrix_structure(g, with_degrees=False)
    raise ValueError(f"unknown automorphism kind {kind!r}; expected one of {KINDS}")


def is_automorphism(g: OrientedHypergraph, p: Permutation | Sequence[int], kind: str = DEFAULT_KIND) -> bool:
    images = p.images if isinstance(p, Permutation) else tuple(p)
    if sorted(images) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    return _structure(g, kind).verify(images)


# -- backtracking search --------------------------------------------------------


def _individualise(col: np.ndarray, v: int) -> np.ndarray:
    c = col[v]
    new = col + (col > c)
    new[col == c] = c + 1
    new[v] = c
    return new


def _target_cell(col: np.ndarray) -> np.ndarray | None:
    counts = np.bincount(col)
    big = np.flatnonzero(counts > 1)
    if big.size == 0:
        return None
    return np.flatnonzero(col == big[0])


class _Search:
    def __init__(self, structure: _Structure):
        self.w = structure.weights
        self.verify = structure.verify
        self.gens: list[tuple] = []
        self.base: list[int] = []
        self.orbit_sizes: list[int] = []
        self.root = kernels.refine(structure.colours, self.w)[:2]

    def refine(self, col):
        out = kernels.refine(col, self.w)
        return out[0], out[1]

    def run(self):
        self._level(*self.root)
        self.base.reverse()
        self.orbit_sizes.reverse()
        return self

    def _orbit(self, b: int) -> set:
        orbit, frontier = {b}, [b]
        while frontier:
            x = frontier.pop()
            for gen in self.gens:
                y = gen[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return orbit

    def _leftmost(self, col, trace):
        path = [(col, trace)]
        cell = _target_cell(col)
        while cell is not None:
            col, trace = self.refine(_individualise(col, int(cell[0])))
            path.append((col, trace))
            cell = _target_cell(col)
        return path

    def _level(self, col, trace):
        cell = _target_cell(col)
        if cell is None:
            return
        b = int(cell[0])
        child = self.refine(_individualise(col, b))
        self._level(*child)
        path = self._leftmost(*child)
        orbit = self._orbit(b)
        for v in cell[1:]:
            v = int(v)
            if v in orbit:
                continue
            cand = self.refine(_individualise(col, v))
            if cand[1] != child[1]:
                continue
            perm = self._find(path, 0, cand[0])
            if perm is not None:
                self.gens.append(perm)
                orbit = self._orbit(b)
        self.base.append(b)
        self.orbit_sizes.append(len(orbit))

    def _find(self, path, depth, col):
        ref_col = path[depth][0]
        cell = _target_cell(col)
        if depth == len(path) - 1:
            if cell is not None:
                return None
            perm = np.empty(len(col), dtype=np.int64)
            perm[np.argsort(ref_col)] = np.argsort(col)
            perm = tuple(int(x) for x in perm)
            return perm if self.verify(perm) else None
        if cell is None:
            return None
        want = path[depth + 1][1]
        for w in cell:
            cand_col, cand_trace = self.refine(_individualise(col, int(w)))
            if cand_trace != want:
                continue
            found = self._find(path, depth + 1, cand_col)
            if found is not None:
                return found
        return None


# -- groups, orbits, redundancy -------------------------------------------------


def _group_order(gens: Sequence[Permutation], n: int) -> int:
    gens = [p for p in gens if not p.is_identity()]
    if not gens:
        return 1
    if len(gens) == 1:
        return gens[0].order()
    from sympy.combinatorics import Permutation as SymPerm
    from sympy.combinatorics import PermutationGroup

    return int(PermutationGroup([SymPerm(list(p.images)) for p in gens]).order())


@dataclass(frozen=True)
class Factor:
    generators: tuple
    support: frozenset
    order: int


@dataclass(frozen=True)
class AutomorphismGroup:
    kind: str
    n: int
    generators: tuple
    order: int
    base: tuple = ()
    basic_orbit_sizes: tuple = ()

    @cached_property
    def factors(self) -> tuple:
        """Support-disjoint grouping of the generators (direct factors of the group)."""
        gens = list(self.generators)
        parent = list(range(len(gens)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        owner: dict[int, int] = {}
        for k, p in enumerate(gens):
            for i in p.support():
                if i in owner:
                    parent[find(k)] = find(owner[i])
                else:
                    owner[i] = k
        blocks: dict[int, list] = {}
        for k in range(len(gens)):
            blocks.setdefault(find(k), []).append(gens[k])
        out = []
        for members in blocks.values():
            support = frozenset().union(*(p.support() for p in members))
            out.append(Factor(tuple(members), support, _group_order(members, self.n)))
        out.sort(key=lambda f: min(f.support))
        return tuple(out)

    @property
    def fixed_points(self) -> frozenset:
        moved = frozenset().union(*(p.support() for p in self.generators)) if self.generators else frozenset()
        return frozenset(range(self.n)) - moved

    def elements(self, limit: int = 100_000) -> set:
        """All group elements as image tuples (closure under the generators)."""
        if self.order > limit:
            raise ValueError(f"group of order {self.order} exceeds enumeration limit {limit}")
        ident = tuple(range(self.n))
        seen = {ident}
        frontier = [ident]
        gens = [p.images for p in self.generators]
        while frontier:
            x = frontier.pop()
            for gimg in gens:
                y = tuple(gimg[j] for j in x)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple
    n: int

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def redundancy(self) -> Fraction:
        return Fraction(len(self.orbits) - 1, self.n)

    def orbit_of(self, i: int) -> tuple:
        for orb in self.orbits:
            if i in orb:
                return orb
        raise KeyError(i)

    def named(self, labels: Sequence[str]) -> list[list[str]]:
        return [[labels[i] for i in orb] for orb in self.orbits]


def automorphism_group(
    g: OrientedHypergraph,
    kind: str = DEFAULT_KIND,
    cap: int | None = None,
) -> AutomorphismGroup:
    """The complete automorphism group of the given kind.

    Raises
    ------
    SearchCapExceeded
        if ``g`` has more vertices than the search cap (default 64, or the
        ``HYPERSYM_MAX_N`` environment variable).
    """
    limit = search_cap(cap)
    if g.n > limit:
        raise SearchCapExceeded(f"{g.n} vertices exceeds the automorphism search cap {limit}")
    search = _Search(_structure(g, kind)).run()
    order = math.prod(search.orbit_sizes)
    gens = tuple(Permutation(p) for p in search.gens)
    return AutomorphismGroup(kind, g.n, gens, order, tuple(search.base), tuple(search.orbit_sizes))


def orbit_partition(generators: Iterable, n: int) -> OrbitPartition:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in generators:
        images = p.images if isinstance(p, Permutation) else p
        for i, j in enumerate(images):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return OrbitPartition(tuple(tuple(v) for v in sorted(groups.values())), n)


def orbits(grp: AutomorphismGroup, n: int | None = None) -> OrbitPartition:
    return orbit_partition(grp.generators, grp.n if n is None else n)


def redundancy(g: OrientedHypergraph, kind: str = DEFAULT_KIND) -> Fraction:
    return orbits(automorphism_group(g, kind)).redundancy


# -- pairwise relations -----------------------------------------------------------

RELATIONS = ("duplicate", "twin", "anti_duplicate", "anti_twin")


def classify_pair(g: OrientedHypergraph, i: VertexRef, j: VertexRef) -> frozenset:
    """Which of duplicate / twin / anti-duplicate / anti-twin hold for ``i, j``.

    Returns ``frozenset({"none"})`` when no relation holds.
    """
    a, b = g.index(i), g.index(j)
    if a == b:
        raise ValueError("classify_pair needs two distinct vertices")
    adj = adjacency_matrix(g)
    found = set()
    if np.array_equal(adj[a], adj[b]):
        found.add("duplicate")
    if np.array_equal(adj[a], -adj[b]):
        found.add("anti_duplicate")
    signs_a = [h.sign(a) for h in g.edges]
    signs_b = [h.sign(b) for h in g.edges]
    if signs_a == signs_b:
        found.add("twin")
    if signs_a == [-s for s in signs_b]:
        found.add("anti_twin")
    return frozenset(found) if found else frozenset({"none"})
