from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import path, relabel_randomly, star, trees
from treeid.canon import canonical_form, canonical_order, centers, is_isomorphic, isomorphism
from treeid.constructive import FamilySpec, generate
from treeid.enumeration import free_trees
from treeid.errors import NotATree
from treeid.graph import Graph


def test_relabelled_paths_isomorphic():
    a = path(5)
    b = Graph(5, [(3, 0), (0, 4), (4, 1), (1, 2)])
    assert is_isomorphic(a, b)


def test_star_vs_path():
    assert not is_isomorphic(star(3), path(4))


def test_t5_vs_t7():
    t5 = generate(FamilySpec("exceptional_T3", (5,)))[0]
    t7 = generate(FamilySpec("exceptional_T3", (7,)))[0]
    assert sorted(t5.degrees) != sorted(t7.degrees)
    assert not is_isomorphic(t5, t7)


def test_not_a_tree():
    with pytest.raises(NotATree):
        canonical_form(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(NotATree):
        canonical_form(Graph(4, [(0, 1), (2, 3)]))


def test_centers():
    assert centers(path(5)) == [2]
    assert sorted(centers(path(6))) == [2, 3]
    assert centers(Graph(1)) == [0]


@given(trees(max_n=18))
@settings(max_examples=200, deadline=None)
def test_invariant_under_relabelling(t):
    u = relabel_randomly(t, random.Random(t.n))
    assert canonical_form(t) == canonical_form(u)
    phi = isomorphism(t, u)
    assert phi is not None
    assert sorted(tuple(sorted((phi[a], phi[b]))) for a, b in t.edges()) == sorted(u.edges())


def test_canonical_order_is_a_permutation():
    g = generate(FamilySpec("exceptional_T3", (11,)))[0]
    assert sorted(canonical_order(g)) == list(range(g.n))


@pytest.mark.parametrize("n", [7, 9, 10])
def test_agrees_with_networkx_on_all_pairs(n):
    ts = list(free_trees(n))
    forms = [canonical_form(t) for t in ts]
    assert len(set(forms)) == len(ts)
    rng = random.Random(n)
    for t in ts:
        u = relabel_randomly(t, rng)
        g1 = nx.Graph(t.edges())
        g2 = nx.Graph(u.edges())
        assert nx.is_isomorphic(g1, g2) and is_isomorphic(t, u)
    for a, b in zip(ts, ts[1:]):
        assert is_isomorphic(a, b) == nx.is_isomorphic(nx.Graph(a.edges()), nx.Graph(b.edges()))
    assert isomorphism(ts[0], ts[1]) is None
