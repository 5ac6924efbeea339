"""Oriented hypergraphs: data model, validation, serialization and role reversal.

Vertices are addressed by their position ``0..n-1`` internally.  Every public
function that takes a vertex also accepts its label or its 1-based number,
see :meth:`OrientedHypergraph.index`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import (
    DisjointnessViolation,
    DuplicateHyperedge,
    DuplicateLabel,
    EmptyHyperedge,
    HypergraphInvalid,
    UnknownVertex,
    ValidationError,
)

VertexRef = Union[int, str]


@dataclass(frozen=True)
class Hyperedge:
    """One oriented hyperedge: a pair of disjoint vertex sets."""

    inputs: frozenset
    outputs: frozenset
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "inputs", frozenset(self.inputs))
        object.__setattr__(self, "outputs", frozenset(self.outputs))

    @property
    def vertices(self) -> frozenset:
        return self.inputs | self.outputs

    @property
    def key(self) -> tuple:
        """Identity of the edge as an (inputs, outputs) pair, ignoring the name."""
        return (self.inputs, self.outputs)

    def cardinality(self) -> int:
        return len(self.inputs) + len(self.outputs)

    def sign(self, i: int) -> int:
        if i in self.inputs:
            return 1
        if i in self.outputs:
            return -1
        return 0

    def reversed(self, name: str | None = None) -> "Hyperedge":
        return Hyperedge(self.outputs, self.inputs, self.name if name is None else name)


def cardinality(h: Hyperedge) -> int:
    return h.cardinality()


@dataclass(frozen=True)
class OrientedHypergraph:
    labels: tuple
    edges: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, ref: VertexRef) -> int:
        """Resolve a vertex label or 1-based vertex number to its position."""
        if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
            if 1 <= ref <= self.n:
                return int(ref) - 1
            raise UnknownVertex(f"vertex number {ref} outside 1..{self.n}")
        try:
            return self._label_index[ref]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {ref!r}") from None

    @property
    def _label_index(self) -> dict:
        cached = self.__dict__.get("_lab")
        if cached is None:
            cached = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_lab", cached)
        return cached

    def degree(self, ref: VertexRef) -> int:
        i = self.index(ref)
        return sum(1 for h in self.edges if i in h.inputs or i in h.outputs)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for h in self.edges:
            for i in h.vertices:
                deg[i] += 1
        return deg

    def edge_counter(self) -> Counter:
        return Counter(h.key for h in self.edges)

    def has_multi_edges(self) -> bool:
        return any(c > 1 for c in self.edge_counter().values())

    def with_edges(self, edges: Iterable[Hyperedge]) -> "OrientedHypergraph":
        return OrientedHypergraph(self.labels, tuple(edges))

    def describe_edge(self, h: Hyperedge) -> str:
        ins = ",".join(self.labels[i] for i in sorted(h.inputs))
        outs = ",".join(self.labels[i] for i in sorted(h.outputs))
        return f"({{{ins}}},{{{outs}}})"

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.labels),
            "hyperedges": [
                {
                    "name": h.name,
                    "inputs": [self.labels[i] for i in sorted(h.inputs)],
                    "outputs": [self.labels[i] for i in sorted(h.outputs)],
                }
                for h in self.edges
            ],
        }


def degree(g: OrientedHypergraph, i: VertexRef) -> int:
    return g.degree(i)


def validate(raw: Mapping, allow_multi: bool = False) -> OrientedHypergraph:
    """Build a hypergraph from its JSON-shaped description.

    All problems are collected before raising, so the resulting
    :class:`HypergraphInvalid` lists every violation at once.  With
    ``allow_multi`` repeated hyperedges are kept (degrees then count
    multiplicity) instead of being reported.
    """
    if not isinstance(raw, Mapping) or not isinstance(raw.get("vertices"), list) or not raw["vertices"]:
        raise HypergraphInvalid([ValidationError("expected an object with a non-empty 'vertices' list")])
    violations: list[ValidationError] = []
    labels = [str(v) for v in raw["vertices"]]
    seen: dict[str, int] = {}
    for pos, lab in enumerate(labels):
        if lab in seen:
            violations.append(DuplicateLabel(f"vertex label {lab!r} repeated"))
        else:
            seen[lab] = pos

    def resolve(ref, edge_name):
        if isinstance(ref, int) and not isinstance(ref, bool):
            if 1 <= ref <= len(labels):
                return ref - 1
        elif str(ref) in seen:
            return seen[str(ref)]
        violations.append(UnknownVertex(f"hyperedge {edge_name!r} references unknown vertex {ref!r}"))
        return None

    edges = []
    keys: Counter = Counter()
    for k, spec in enumerate(raw.get("hyperedges", [])):
        name = str(spec.get("name", f"h{k + 1}"))
        ins = [resolve(r, name) for r in spec.get("inputs", [])]
        outs = [resolve(r, name) for r in spec.get("outputs", [])]
        if None in ins or None in outs:
            continue
        both = set(ins) & set(outs)
        if both:
            names = sorted(labels[i] for i in both)
            violations.append(DisjointnessViolation(f"hyperedge {name!r} has {names} as input and output"))
            continue
        if not ins and not outs:
            violations.append(EmptyHyperedge(f"hyperedge {name!r} contains no vertices"))
            continue
        h = Hyperedge(frozenset(ins), frozenset(outs), name)
        keys[h.key] += 1
        if keys[h.key] > 1 and not allow_multi:
            violations.append(DuplicateHyperedge(f"hyperedge {name!r} repeats an earlier hyperedge"))
            continue
        edges.append(h)
    if violations:
        raise HypergraphInvalid(violations)
    return OrientedHypergraph(tuple(labels), tuple(edges))


def from_edges(
    labels: Sequence[str],
    edges: Iterable[tuple],
    allow_multi: bool = False,
) -> OrientedHypergraph:
    """Convenience constructor: ``edges`` holds ``(inputs, outputs)`` or ``(name, inputs, outputs)``."""
    spec = []
    for k, e in enumerate(edges):
        if len(e) == 3:
            name, ins, outs = e
        else:
            (ins, outs), name = e, f"h{k + 1}"
        spec.append({"name": name, "inputs": list(ins), "outputs": list(outs)})
    return validate({"vertices": list(labels), "hyperedges": spec}, allow_multi=allow_multi)


def sign_function(g: OrientedHypergraph, negative: Iterable[VertexRef] = ()) -> tuple:
    """The sign function that is -1 exactly on ``negative``."""
    s = [1] * g.n
    for ref in negative:
        s[g.index(ref)] = -1
    return tuple(s)


def check_sign_function(g: OrientedHypergraph, sigma: Sequence[int]) -> tuple:
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != g.n or any(x not in (1, -1) for x in sigma):
        raise ValueError(f"sign function must assign +1 or -1 to each of the {g.n} vertices")
    return sigma


def sigma_transform(g: OrientedHypergraph, sigma: Sequence[int]) -> OrientedHypergraph:
    """Reverse the input/output role of every vertex with sign -1."""
    sigma = check_sign_function(g, sigma)
    flipped = frozenset(i for i, s in enumerate(sigma) if s < 0)
    if not flipped:
        return g
    edges = []
    for h in g.edges:
        ins = (h.inputs - flipped) | (h.outputs & flipped)
        outs = (h.outputs - flipped) | (h.inputs & flipped)
        edges.append(Hyperedge(ins, outs, h.name))
    return OrientedHypergraph(g.labels, tuple(edges))


def canonical_serialize(g: OrientedHypergraph) -> bytes:
    """Deterministic JSON bytes; vertex sets sorted, vertex and edge order kept."""
    return json.dumps(g.to_dict(), separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def loads(data: Union[str, bytes], allow_multi: bool = False) -> OrientedHypergraph:
    return validate(json.loads(data), allow_multi=allow_multi)


def load(path: Union[str, Path], allow_multi: bool = False) -> OrientedHypergraph:
    """Load a ``.json`` hypergraph or a ``.rxn`` reaction file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".rxn":
        from .reactions import parse_reactions

        return parse_reactions(text, allow_multi=allow_multi)
    return loads(text, allow_multi=allow_multi)


def dumps(g: OrientedHypergraph, indent: int | None = 2) -> str:
    return json.dumps(g.to_dict(), indent=indent, ensure_ascii=False)
