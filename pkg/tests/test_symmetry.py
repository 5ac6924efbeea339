import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hypersym.corpus import HyperflowerParams, adjacency_counterexample, hyperflower, random_hypergraph
from hypersym.errors import SearchCapExceeded
from hypersym.symmetry import (
    KINDS,
    Permutation,
    automorphism_group,
    classify_pair,
    is_automorphism,
    orbits,
    redundancy,
)


def test_permutation_algebra():
    p = Permutation.from_cycles(4, (0, 1))
    q = Permutation.from_cycles(4, (1, 2))
    assert (p * q)(1) == p(q(1)) == 2
    assert (p * p).is_identity() and p.inverse() == p
    assert Permutation.from_cycles(5, (0, 1, 2), (3, 4)).order() == 6
    assert p.format(["a", "b", "c", "d"]) == "(a b)"


def test_enzyme_groups(enzyme):
    assert automorphism_group(enzyme, "hypergraph").order == 1
    assert redundancy(enzyme) == Fraction(3, 4)
    swap_sp = Permutation.from_cycles(4, (1, 3))
    for kind in ("laplacian", "adjacency"):
        grp = automorphism_group(enzyme, kind)
        assert grp.order == 2 and grp.generators == (swap_sp,)


def test_counterexample_strictness():
    g = adjacency_counterexample()
    p = Permutation.from_cycles(3, (0, 2))
    assert is_automorphism(g, p, "adjacency")
    assert not is_automorphism(g, p, "laplacian")
    assert automorphism_group(g, "adjacency").order == 6


def test_literal_counterexample_is_not_one():
    g = adjacency_counterexample(literal=True)
    assert not is_automorphism(g, Permutation.from_cycles(3, (0, 2)), "adjacency")


def test_hyperflower_group(flower):
    grp = automorphism_group(flower, "hypergraph")
    expected = 1
    for k in range(1, 11):
        expected *= k
    expected *= 6**5 * 120
    assert grp.order == expected
    orb = orbits(grp)
    assert orb.count == 2 and orb.redundancy == Fraction(1, 25)
    assert [len(f.support) for f in grp.factors] == [10, 15]
    assert grp.factors[0].order * grp.factors[1].order == grp.order


def test_pair_classification(enzyme):
    assert classify_pair(enzyme, "S", "P") == {"duplicate"}
    assert classify_pair(enzyme, "E", "ES") == {"anti_twin"}
    assert classify_pair(enzyme, "E", "S") == {"none"}


def test_search_cap(monkeypatch, enzyme):
    monkeypatch.setenv("HYPERSYM_MAX_N", "3")
    with pytest.raises(SearchCapExceeded):
        automorphism_group(enzyme)


def test_hyperflower_flip_breaks_the_group():
    g = hyperflower(HyperflowerParams(3, 2, 2), flip_one=True)
    assert orbits(automorphism_group(g)).count == 4


def _graph(n, m, seed):
    return random_hypergraph(n, max(m, (n + 2) // 3), 3, seed)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.integers(0, 10_000))
def test_matches_brute_force(n, m, seed):
    g = _graph(n, m, seed)
    for kind in KINDS:
        grp = automorphism_group(g, kind)
        brute = oracles.brute_group(g, kind)
        assert grp.order == len(brute)
        assert grp.elements() == brute
        assert orbits(grp).count == oracles.orbit_count(brute, g.n)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.integers(0, 10_000))
def test_inclusion_chain(n, m, seed):
    g = _graph(n, m, seed)
    for p in itertools.permutations(range(g.n)):
        if is_automorphism(g, p, "hypergraph"):
            assert is_automorphism(g, p, "laplacian")
        if is_automorphism(g, p, "laplacian"):
            assert is_automorphism(g, p, "adjacency")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(2, 7), st.integers(0, 10_000))
def test_generators_close_into_a_group(n, m, seed):
    g = _graph(n, m, seed)
    grp = automorphism_group(g, "laplacian")
    elems = grp.elements()
    for a in list(elems)[:20]:
        for b in list(elems)[:20]:
            assert tuple(a[i] for i in b) in elems
        assert is_automorphism(g, a, "laplacian")
