"""Generators and pinned fixtures: hyperflowers, the enzyme system, small
worked examples, and seeded random hypergraphs with planted vertex pairs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationFailed, InvalidParams
from .hypermodel import Hyperedge, OrientedHypergraph, from_edges

MAX_RETRIES = 1000


@dataclass(frozen=True)
class HyperflowerParams:
    """``l`` petals of ``t`` peripheral vertices each around a core of ``c`` vertices."""

    l: int
    t: int
    c: int

    def __post_init__(self):
        for name in ("l", "t", "c"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise InvalidParams(f"hyperflower parameter {name} must be a positive integer, got {value!r}")

    @property
    def n(self) -> int:
        return self.c + self.t * self.l


def hyperflower(params: HyperflowerParams, flip_one: bool = False) -> OrientedHypergraph:
    """Hyperedges ``h_j = W u V_j``, every vertex an input.

    With ``flip_one`` the first peripheral vertex ``p1_1`` is an output instead.
    """
    core = [f"core_{k}" for k in range(1, params.c + 1)]
    petals = [[f"p{j}_{k}" for k in range(1, params.t + 1)] for j in range(1, params.l + 1)]
    edges = []
    for j, petal in enumerate(petals, start=1):
        ins = core + petal
        outs: list[str] = []
        if flip_one and j == 1:
            ins = core + petal[1:]
            outs = [petal[0]]
        edges.append((f"h{j}", ins, outs))
    return from_edges(core + [v for p in petals for v in p], edges)


def enzyme_fixtures() -> tuple[OrientedHypergraph, OrientedHypergraph]:
    """Forward enzyme system and its extension by the reverse of the binding step."""
    labels = ["E", "S", "ES", "P"]
    forward = [("h1", ["E", "S"], ["ES"]), ("h2", ["ES"], ["E", "P"])]
    reverse = forward + [("h3", ["ES"], ["E", "S"])]
    return from_edges(labels, forward), from_edges(labels, reverse)


def fig1() -> OrientedHypergraph:
    return from_edges(["1", "2", "3", "4", "5"], [("h1", ["1", "2"], ["3"]), ("h2", ["3", "4"], ["5"])])


def example1() -> tuple[OrientedHypergraph, OrientedHypergraph]:
    """A hypergraph and a graph sharing one adjacency matrix."""
    labels = ["1", "2", "3"]
    g = from_edges(labels, [("h1", ["1"], ["2"]), ("h2", ["1", "2"], ["3"])])
    g2 = from_edges(labels, [("h1'", ["1"], ["3"]), ("h2'", ["2"], ["3"])])
    return g, g2


def adjacency_counterexample(literal: bool = False) -> OrientedHypergraph:
    """Three vertices, zero adjacency matrix, unequal degrees on 1 and 3.

    The ``literal`` variant uses a mutually reversed pair ``({1},{2})`` and
    ``({2},{1})``, whose adjacency entry ``A_12`` is 2, not 0.  The default
    replaces the second hyperedge with ``({1,2}, {})`` so that the co- and
    anti-oriented counts of 1 and 2 cancel and ``A`` vanishes.
    """
    second = ("h2", ["2"], ["1"]) if literal else ("h2", ["1", "2"], [])
    return from_edges(["1", "2", "3"], [("h1", ["1"], ["2"]), second, ("h3", ["3"], [])])


def random_hypergraph(
    n: int,
    m: int,
    max_card: int = 3,
    seed: int | None = None,
    rng: np.random.Generator | None = None,
) -> OrientedHypergraph:
    """``m`` distinct hyperedges on ``v1..vn`` with no vertex of degree zero.

    Each hyperedge draws a size in ``1..max_card``, that many distinct vertices,
    and an independent side for each.  Whole draws are repeated until every
    vertex is covered.

    Raises
    ------
    GenerationFailed
        after ``MAX_RETRIES`` unsuccessful draws.
    """
    if n < 1 or m < 1 or max_card < 1:
        raise InvalidParams("n, m and max_card must be positive")
    if m * min(max_card, n) < n:
        raise GenerationFailed(f"{m} hyperedges of size <= {max_card} cannot cover {n} vertices")
    rng = np.random.default_rng(seed) if rng is None else rng
    k_max = min(max_card, n)
    for _ in range(MAX_RETRIES):
        keys: set = set()
        edges = []
        attempts = 0
        while len(edges) < m and attempts < 50 * m:
            attempts += 1
            k = int(rng.integers(1, k_max + 1))
            chosen = rng.choice(n, size=k, replace=False)
            sides = rng.integers(0, 2, size=k)
            ins = frozenset(int(v) for v, s in zip(chosen, sides) if s == 0)
            outs = frozenset(int(v) for v, s in zip(chosen, sides) if s == 1)
            if (ins, outs) in keys:
                continue
            keys.add((ins, outs))
            edges.append((ins, outs))
        if len(edges) < m:
            continue
        covered = set().union(*(a | b for a, b in edges))
        if len(covered) == n:
            labels = [f"v{i + 1}" for i in range(n)]
            return OrientedHypergraph(
                tuple(labels),
                tuple(Hyperedge(a, b, f"h{k + 1}") for k, (a, b) in enumerate(edges)),
            )
    raise GenerationFailed(f"no valid hypergraph with n={n}, m={m} after {MAX_RETRIES} draws")


PLANTS = ("twin", "anti_twin", "duplicate", "anti_duplicate")


def plant_pair(g: OrientedHypergraph, i: int, relation: str) -> tuple[OrientedHypergraph, int]:
    """Add a new vertex standing in ``relation`` to vertex ``i``; returns the graph and its index.

    Twins join every hyperedge of ``i`` on the same side (anti-twins on the
    opposite side).  Duplicates instead receive a copy of each hyperedge of
    ``i`` with ``i`` replaced by the new vertex (anti-duplicates on the
    opposite side), so the two never share a hyperedge and their adjacency
    rows agree (are negatives) everywhere.
    """
    if relation not in PLANTS:
        raise InvalidParams(f"unknown relation {relation!r}")
    j = g.n
    label = f"v{j + 1}"
    while label in g.labels:
        label += "'"
    edges = list(g.edges)
    same = relation in ("twin", "duplicate")
    if relation in ("twin", "anti_twin"):
        for k, h in enumerate(edges):
            if i in h.inputs:
                edges[k] = Hyperedge(h.inputs | {j} if same else h.inputs, h.outputs if same else h.outputs | {j}, h.name)
            elif i in h.outputs:
                edges[k] = Hyperedge(h.inputs if same else h.inputs | {j}, h.outputs | {j} if same else h.outputs, h.name)
    else:
        count = len(edges)
        for h in g.edges:
            if i not in h.vertices:
                continue
            count += 1
            ins, outs = h.inputs - {i}, h.outputs - {i}
            on_input = (i in h.inputs) == same
            edges.append(Hyperedge(ins | {j} if on_input else ins, outs if on_input else outs | {j}, f"h{count}"))
    return OrientedHypergraph(g.labels + (label,), tuple(edges)), j
