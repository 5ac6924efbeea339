"""Plain-text reaction files (``.rxn``).

One reaction per line::

    # Michaelis-Menten, forward only
    bind: E + S -> ES   @ kf
    ES -> E + P         @ kcat
    0 -> X              # source: empty input side

``<->`` yields the forward hyperedge followed by its reversal.  Rate
annotations after ``@`` and comments after ``#`` are dropped.  A line of the
form ``#!species A B C`` fixes the vertex order (and may declare species that
occur in no reaction); otherwise vertices are numbered by first appearance.
"""

from __future__ import annotations

import re

from .errors import (
    DisjointnessViolation,
    DuplicateSpeciesOnSide,
    EmptyHyperedge,
    ReactionSyntaxError,
)
from .hypermodel import OrientedHypergraph, validate

SPECIES = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
EDGE_NAME = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*:")
PRAGMA = "#!species"


def _side(text: str, line: int, col0: int) -> list[str]:
    stripped = text.strip()
    if stripped == "0":
        return []
    if not stripped:
        raise ReactionSyntaxError("empty reaction side (write 0 for no species)", line, col0 + 1)
    species = []
    offset = 0
    for token in text.split("+"):
        tok = token.strip()
        col = col0 + offset + (len(token) - len(token.lstrip())) + 1
        offset += len(token) + 1
        if not SPECIES.match(tok):
            raise ReactionSyntaxError(f"bad species token {tok!r}", line, col)
        if tok in species:
            raise DuplicateSpeciesOnSide(f"line {line}: species {tok!r} repeated on one side")
        species.append(tok)
    return species


def parse_reactions(text: str, allow_multi: bool = False) -> OrientedHypergraph:
    """Parse reaction text into an oriented hypergraph (one hyperedge per direction)."""
    order: list[str] = []
    known: set[str] = set()

    def note(sp):
        if sp not in known:
            known.add(sp)
            order.append(sp)

    edges = []
    counter = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith(PRAGMA):
            for sp in raw.lstrip()[len(PRAGMA):].split():
                if not SPECIES.match(sp):
                    raise ReactionSyntaxError(f"bad species {sp!r} in pragma", lineno, raw.find(sp) + 1)
                note(sp)
            continue
        body = raw.split("#", 1)[0].split("@", 1)[0]
        if not body.strip():
            continue
        name = None
        start = 0
        m = EDGE_NAME.match(body)
        if m:
            name = m.group(1)
            start = m.end()
        rest = body[start:]
        if "<->" in rest:
            arrow, reversible = "<->", True
        elif "->" in rest:
            arrow, reversible = "->", False
        else:
            raise ReactionSyntaxError("missing arrow '->' or '<->'", lineno, len(body.rstrip()) + 1)
        pos = rest.index(arrow)
        if arrow in rest[pos + len(arrow):] or "->" in rest[pos + len(arrow):]:
            raise ReactionSyntaxError("more than one arrow", lineno, start + rest.rindex("->") + 1)
        lhs = _side(rest[:pos], lineno, start)
        rhs = _side(rest[pos + len(arrow):], lineno, start + pos + len(arrow))
        if not lhs and not rhs:
            raise EmptyHyperedge(f"line {lineno}: reaction has no species")
        clash = sorted(set(lhs) & set(rhs))
        if clash:
            raise DisjointnessViolation(f"line {lineno}: {clash} on both sides")
        for sp in lhs + rhs:
            note(sp)
        counter += 1
        fwd = name or f"h{counter}"
        edges.append({"name": fwd, "inputs": lhs, "outputs": rhs})
        if reversible:
            counter += 1
            rev = f"{name}_rev" if name else f"h{counter}"
            edges.append({"name": rev, "inputs": rhs, "outputs": lhs})
    return validate({"vertices": order, "hyperedges": edges}, allow_multi=allow_multi)


def unparse(g: OrientedHypergraph) -> str:
    """Emit reaction text that parses back to ``g`` (vertex order and edge names included)."""
    lines = [f"{PRAGMA} " + " ".join(g.labels)]
    for h in g.edges:
        lhs = " + ".join(g.labels[i] for i in sorted(h.inputs)) or "0"
        rhs = " + ".join(g.labels[i] for i in sorted(h.outputs)) or "0"
        prefix = f"{h.name}: " if h.name else ""
        lines.append(f"{prefix}{lhs} -> {rhs}")
    return "\n".join(lines) + "\n"
