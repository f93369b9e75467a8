from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import path, star, trees
from treeid.codes import (
    certify,
    forced_vertices,
    identifying_constraints,
    is_identifying_code,
    lower_bound,
    separates_within_two,
)
from treeid.enumeration import free_trees
from treeid.errors import NotIdentifiable
from treeid.graph import Graph, VertexSet, has_closed_twins, mask_of
from treeid.oracles import brute_identifying_code


def _closed(g, v):
    return {v, *g.adjacency[v]}


def _all_codes(g):
    """Every identifying code, by definition (all pairs)."""
    out = []
    for k in range(1, g.n + 1):
        for c in combinations(range(g.n), k):
            cs = set(c)
            sigs = [frozenset(_closed(g, v) & cs) for v in range(g.n)]
            if all(sigs) and len(set(sigs)) == g.n:
                out.append(cs)
    return out


def _forced_oracle(g):
    out = set()
    for u, v in combinations(range(g.n), 2):
        d = _closed(g, u) ^ _closed(g, v)
        if len(d) == 1:
            out |= d
    return out


class TestCertify:
    def test_p3_whole_set(self):
        c = certify(path(3), [0, 1, 2])
        assert c.valid and c.size == 3

    def test_star_leaves(self):
        c = certify(star(3), [1, 2, 3])
        assert c.valid and c.size == 3

    def test_p4_inner_pair(self):
        c = certify(path(4), [1, 2])
        assert c.dominating and not c.separating and not c.valid
        # no 2-subset of P4 identifies
        assert not any(certify(path(4), s).valid for s in combinations(range(4), 2))

    def test_signatures(self):
        c = certify(path(3), VertexSet.of(3, [0, 2]))
        assert [set(s) for s in c.signatures] == [{0}, {0, 2}, {2}]
        assert c.to_record() == {"code": [0, 2], "size": 2, "dominating": True, "separating": True, "valid": True}

    def test_closed_twins_rejected(self):
        with pytest.raises(NotIdentifiable):
            certify(path(2), [0])

    def test_out_of_range_code(self):
        with pytest.raises(ValueError):
            certify(path(3), [0, 5])

    def test_non_dominating_far_collision(self):
        # 0 and 6 both see nothing but sit at distance 6
        g = path(7)
        code = mask_of([2, 3, 4])
        assert separates_within_two(g, code)
        assert not certify(g, code).separating
        assert certify(g, code).separating == certify(g, code, all_pairs=True).separating


class TestForced:
    def test_p4(self):
        assert set(forced_vertices(path(4))) == {1, 2} == _forced_oracle(path(4))

    def test_star(self):
        assert set(forced_vertices(star(3))) == set()

    def test_p5(self):
        assert _forced_oracle(path(5)) == {2}
        assert set(forced_vertices(path(5))) == {2}

    def test_every_code_contains_forced_p4(self):
        assert all({1, 2} <= c for c in _all_codes(path(4)))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_forced_in_every_code(self, n):
        for t in free_trees(n):
            if has_closed_twins(t):
                continue
            forced = set(forced_vertices(t))
            assert forced == _forced_oracle(t)
            for c in _all_codes(t):
                assert forced <= c
                for w in forced:
                    assert not certify(t, c - {w}).valid


class TestLowerBound:
    def test_log_term(self):
        assert lower_bound(path(7)) >= 3

    def test_twin_term(self):
        for d in range(3, 9):
            assert lower_bound(star(d)) >= d - 1

    def test_p4(self):
        assert brute_identifying_code(path(4))[0] == 3
        assert lower_bound(path(4)) == 3

    @pytest.mark.parametrize("n", range(3, 13))
    def test_never_exceeds_optimum(self, n):
        for t in free_trees(n):
            if has_closed_twins(t):
                continue
            assert lower_bound(t) <= brute_identifying_code(t)[0]


@given(trees(min_n=3, max_n=12), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_restricted_pairs_match_definition_on_dominating_codes(t, rnd):
    if has_closed_twins(t):
        return
    code = mask_of(v for v in range(t.n) if rnd.random() < 0.5)
    full = certify(t, code, all_pairs=True)
    fast = certify(t, code)
    assert fast == full
    if full.dominating:
        assert separates_within_two(t, code) == full.separating


@given(trees(min_n=3, max_n=12), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_supersets_of_codes_stay_valid(t, rnd):
    if has_closed_twins(t):
        return
    assert certify(t, range(t.n)).valid
    c = brute_identifying_code(t)[1]
    extra = {v for v in range(t.n) if rnd.random() < 0.3}
    assert certify(t, set(c) | extra).valid


def test_constraints_characterize_codes():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)])
    cons = identifying_constraints(g)
    for k in range(7):
        for c in combinations(range(6), k):
            m = mask_of(c)
            assert all(x & m for x in cons) == is_identifying_code(g, m) == certify(g, m).valid
