import pytest
from hypothesis import given, settings, strategies as st

from hypersym.corpus import fig1, random_hypergraph
from hypersym.errors import (
    DisjointnessViolation,
    DuplicateHyperedge,
    EmptyHyperedge,
    HypergraphInvalid,
    UnknownVertex,
)
from hypersym.hypermodel import (
    canonical_serialize,
    degree,
    from_edges,
    load,
    loads,
    sigma_transform,
    sign_function,
    validate,
)


def test_disjointness_rejected():
    with pytest.raises(HypergraphInvalid) as info:
        validate({"vertices": [1, 2], "hyperedges": [{"inputs": [1], "outputs": [1]}]})
    assert isinstance(info.value.violations[0], DisjointnessViolation)


def test_all_violations_collected():
    raw = {
        "vertices": ["a", "b"],
        "hyperedges": [
            {"name": "x", "inputs": ["a"], "outputs": ["a"]},
            {"name": "y", "inputs": ["zz"], "outputs": []},
            {"name": "z", "inputs": [], "outputs": []},
            {"name": "u", "inputs": ["a"], "outputs": ["b"]},
            {"name": "v", "inputs": ["a"], "outputs": ["b"]},
        ],
    }
    with pytest.raises(HypergraphInvalid) as info:
        validate(raw)
    kinds = [type(v) for v in info.value.violations]
    assert kinds == [DisjointnessViolation, UnknownVertex, EmptyHyperedge, DuplicateHyperedge]


def test_multi_edges_behind_flag():
    raw = {"vertices": ["a", "b"], "hyperedges": [{"inputs": ["a"], "outputs": ["b"]}] * 2}
    g = validate(raw, allow_multi=True)
    assert g.m == 2 and g.has_multi_edges and degree(g, "a") == 2


def test_one_sided_edge_is_valid():
    g = from_edges(["1", "2", "3"], [(["3"], [])])
    assert g.m == 1 and g.degree(3) == 1


def test_fig1_degrees(data_dir):
    g = load(data_dir / "fig1.json")
    assert [g.degree(i) for i in range(1, 6)] == [1, 1, 2, 1, 1]
    assert g.edges[0].cardinality() == 3


def test_unknown_vertex_lookup():
    with pytest.raises(UnknownVertex):
        fig1().degree(9)


def test_sigma_transform_fig1():
    g = fig1()
    flipped = sigma_transform(g, sign_function(g, ["3"]))
    h1, h2 = flipped.edges
    assert h1.inputs == {0, 1, 2} and h1.outputs == frozenset()
    assert h2.inputs == {3} and h2.outputs == {2, 4}


def test_sign_function_validation():
    with pytest.raises(ValueError):
        sigma_transform(fig1(), (1, 1, 0, 1, 1))


graphs = st.builds(
    lambda n, m, seed: random_hypergraph(n, m, 3, seed),
    st.integers(2, 7),
    st.integers(3, 7),
    st.integers(0, 10_000),
)


@settings(max_examples=60, deadline=None)
@given(graphs, st.data())
def test_sigma_is_an_involution_and_keeps_degrees(g, data):
    sigma = tuple(data.draw(st.lists(st.sampled_from([1, -1]), min_size=g.n, max_size=g.n)))
    once = sigma_transform(g, sigma)
    assert canonical_serialize(sigma_transform(once, sigma)) == canonical_serialize(g)
    assert list(once.degrees()) == list(g.degrees())


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_json_round_trip(g):
    assert canonical_serialize(loads(canonical_serialize(g))) == canonical_serialize(g)
