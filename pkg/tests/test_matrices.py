import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hypersym.corpus import adjacency_counterexample, example1, fig1, random_hypergraph
from hypersym.errors import DegreeZeroVertex
from hypersym.hypermodel import from_edges, sigma_transform
from hypersym.matrices import (
    adjacency_matrix,
    auxiliary_graph,
    codegrees,
    incidence_matrix,
    kirchhoff_matrix,
    laplacians,
)


def test_fig1_incidence():
    i = incidence_matrix(fig1())
    assert i[:, 0].tolist() == [1, 1, -1, 0, 0]
    assert i[:, 1].tolist() == [0, 0, 1, 1, -1]


def test_fig1_codegrees():
    g = fig1()
    assert codegrees(g, 1, 2) == (1, 0)
    assert codegrees(g, 1, 3) == (0, 1)
    assert codegrees(g, 3, 5) == (0, 1)


def test_example1_shared_adjacency():
    g, g2 = example1()
    expected = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]
    assert adjacency_matrix(g).tolist() == expected
    assert adjacency_matrix(g2).tolist() == expected
    assert codegrees(g, 1, 2) == (1, 1)


def test_counterexample_adjacency_vanishes():
    assert not adjacency_matrix(adjacency_counterexample()).any()
    assert adjacency_matrix(adjacency_counterexample(literal=True))[0, 1] == 2


def test_fig1_auxiliary_graph():
    aux = auxiliary_graph(fig1())
    expected = {(0, 1): -1, (0, 2): 1, (1, 2): 1, (2, 3): -1, (2, 4): 1, (3, 4): 1}
    assert {(i, j): w for i, j, w in aux.edges} == expected


def test_kirchhoff_is_incidence_gram():
    g = fig1()
    i = incidence_matrix(g)
    assert np.array_equal(kirchhoff_matrix(g), i @ i.T)


def test_laplacian_forms_enzyme(enzyme):
    b = laplacians(enzyme)
    assert np.allclose(b.normalised, np.linalg.inv(b.degree) @ b.kirchhoff)
    root = np.diag(np.sqrt(np.diag(b.degree)))
    assert np.allclose(b.symmetrised, root @ b.normalised @ np.linalg.inv(root))
    assert np.allclose(b.symmetrised, b.symmetrised.T, atol=0)


def test_degree_zero_rejected():
    g = from_edges(["a", "b", "c"], [(["a"], ["b"])])
    with pytest.raises(DegreeZeroVertex):
        laplacians(g)
    assert adjacency_matrix(g).shape == (3, 3)


graphs = st.builds(lambda n, seed: random_hypergraph(n, n, 4, seed), st.integers(2, 8), st.integers(0, 10_000))


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_against_entrywise_definitions(g):
    assert np.array_equal(adjacency_matrix(g), oracles.adjacency(g))
    assert np.allclose(laplacians(g).symmetrised, oracles.normalised_symmetric(g), atol=1e-14)


@settings(max_examples=60, deadline=None)
@given(graphs, st.data())
def test_switching_law(g, data):
    sigma = np.array(data.draw(st.lists(st.sampled_from([1, -1]), min_size=g.n, max_size=g.n)))
    switched = adjacency_matrix(sigma_transform(g, sigma))
    assert np.array_equal(switched, adjacency_matrix(g) * np.outer(sigma, sigma))
