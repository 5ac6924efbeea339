import pytest
from hypothesis import given, settings, strategies as st

from hypersym.corpus import enzyme_fixtures, random_hypergraph
from hypersym.errors import (
    DisjointnessViolation,
    DuplicateSpeciesOnSide,
    EmptyHyperedge,
    ReactionSyntaxError,
)
from hypersym.hypermodel import canonical_serialize, load
from hypersym.reactions import parse_reactions, unparse


def edge_keys(g):
    return [(sorted(g.labels[i] for i in h.inputs), sorted(g.labels[i] for i in h.outputs)) for h in g.edges]


def test_enzyme_text_matches_fixture():
    forward, _ = enzyme_fixtures()
    g = parse_reactions("E + S -> ES\nES -> E + P")
    assert canonical_serialize(g) == canonical_serialize(forward)


def test_enzyme_files(data_dir):
    g = load(data_dir / "enzyme.rxn")
    assert g.labels == ("E", "S", "ES", "P")
    assert edge_keys(g) == [(["E", "S"], ["ES"]), (["ES"], ["E", "P"])]
    g3 = load(data_dir / "enzyme-reversible.rxn")
    assert edge_keys(g3)[2] == (["ES"], ["E", "S"])


def test_reversible_arrow_and_names():
    g = parse_reactions("bind: E + S <-> ES @ kf, kr\nES -> E + P")
    assert [h.name for h in g.edges] == ["bind", "bind_rev", "h3"]
    assert edge_keys(g)[1] == (["ES"], ["E", "S"])


def test_empty_side_and_pragma():
    g = parse_reactions("#!species X Y\n0 -> X\nX -> 0\nX + Y -> 0")
    assert g.labels == ("X", "Y")
    assert edge_keys(g)[0] == ([], ["X"])


@pytest.mark.parametrize(
    "text, error",
    [
        ("A + -> B", ReactionSyntaxError),
        ("A B", ReactionSyntaxError),
        ("A + A -> B", DuplicateSpeciesOnSide),
        ("A -> A + B", DisjointnessViolation),
        ("0 -> 0", EmptyHyperedge),
    ],
)
def test_errors(text, error):
    with pytest.raises(error):
        parse_reactions(text)


def test_syntax_error_position():
    with pytest.raises(ReactionSyntaxError) as info:
        parse_reactions("A -> B\nA + 3x -> B")
    assert info.value.line == 2 and info.value.column > 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 10_000))
def test_rxn_round_trip(n, m, seed):
    n = max(n, 2)
    m = max(m, (n + 2) // 3)
    g = random_hypergraph(n, m, 3, seed)
    assert canonical_serialize(parse_reactions(unparse(g))) == canonical_serialize(g)
