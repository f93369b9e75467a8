from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import path, relabel_randomly, star, trees
from treeid.codes import certify
from treeid.constructive import (
    FAMILY_KINDS,
    FamilySpec,
    append_star,
    classify_exceptional,
    construct_domination_bound_code,
    construct_main_bound_code,
    extend_code_through_star,
    generate,
)
from treeid.errors import (
    DegreeDomain,
    DomainError,
    ExcludedInstance,
    InvalidInputCertificate,
    NotATree,
    ParameterDomain,
)
from treeid.graph import Graph, diameter, has_closed_twins
from treeid.solvers import min_dominating_set_tree, min_identifying_code
from treeid.canon import is_isomorphic


def T(i):
    return generate(FamilySpec("exceptional_T3", (i,)))


class TestAppend:
    def test_t1_from_two_stars(self):
        g, rec = append_star(star(3), 1, 3)
        assert g.n == 7 and is_isomorphic(g, T(1)[0])
        assert rec.universal_vertex == 4 and set(rec.new_leaves) == {5, 6}

    def test_t2_from_p4(self):
        g, _ = append_star(path(4), 0, 3)
        assert g.n == 7 and is_isomorphic(g, T(2)[0])

    def test_order_grows_by_star_degree(self):
        g, _ = append_star(path(2), 0, 4)
        assert g.n == 6

    def test_degree_domain(self):
        with pytest.raises(DegreeDomain):
            append_star(path(3), 0, 2)

    def test_vertex_domain(self):
        with pytest.raises(ParameterDomain):
            append_star(path(3), 3, 3)

    def test_extend_p4_to_t2(self):
        g, rec = append_star(path(4), 0, 3)
        c = extend_code_through_star(certify(path(4), [0, 1, 2]), rec)
        assert c.valid and c.size == 5 == min_identifying_code(g).optimum

    def test_extend_t2_to_t3(self):
        t2, code = T(2)
        g, rec = append_star(t2, _z_of_t2(t2), 3)
        c = extend_code_through_star(certify(t2, code), rec)
        assert c.valid and c.size == 7
        assert is_isomorphic(g, T(3)[0])

    def test_invalid_certificate_rejected(self):
        _, rec = append_star(path(4), 0, 3)
        with pytest.raises(InvalidInputCertificate):
            extend_code_through_star(certify(path(4), [1, 2]), rec)

    def test_wrong_graph_certificate_rejected(self):
        _, rec = append_star(path(4), 0, 3)
        with pytest.raises(InvalidInputCertificate):
            extend_code_through_star(certify(path(5), [0, 2, 4]), rec)


def _z_of_t2(t2: Graph) -> int:
    # z: the degree-2 vertex adjacent to both the twin-leaf support and the long arm
    return next(v for v in range(t2.n) if t2.degree(v) == 2 and all(t2.degree(w) >= 2 for w in t2.adjacency[v]))


@given(trees(min_n=3, max_n=14), st.integers(0, 10_000), st.integers(3, 6))
@settings(max_examples=500, deadline=None)
def test_extension_property(t, pick, degree):
    if has_closed_twins(t):
        return
    base = min_identifying_code(t, canonical=False).witness
    g, rec = append_star(t, pick % t.n, degree)
    out = extend_code_through_star(base, rec)
    assert out.valid and out.size == base.size + degree - 1
    assert certify(g, out.code).valid


class TestGenerate:
    def test_t0(self):
        g, code = T(0)
        assert is_isomorphic(g, star(3)) and len(code) == 3

    def test_graph_z(self):
        g, code = generate(FamilySpec("graph_Z"))
        assert g.n == 13 and len(code) == 8 and diameter(g) == 8

    def test_big_construction(self):
        g, code = generate(FamilySpec("big_construction", (3, 4)))
        assert g.n == 30 and len(code) == 21 and g.max_degree == 4

    @pytest.mark.parametrize("t_,d", [(3, 5), (4, 4), (3, 6)])
    def test_big_construction_sizes(self, t_, d):
        g, code = generate(FamilySpec("big_construction", (t_, d)))
        assert g.n == t_ * ((d - 2) * d + 2)
        assert len(code) == t_ * ((d - 2) * (d - 1) + 1)
        assert g.max_degree == d

    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_double_star(self, d):
        g, code = generate(FamilySpec("double_star", (d,)))
        assert g.n == 2 * d and len(code) == 2 * d - 2 and g.max_degree == d

    @pytest.mark.parametrize("k", range(1, 7))
    def test_two_corona(self, k):
        g, code = generate(FamilySpec("two_corona", (k,)))
        assert g.n == 3 * k and len(code) == 2 * k

    def test_complete_ary_shape(self):
        g, _ = generate(FamilySpec("complete_ary", (4, 3)))
        assert g.n == 1 + 3 + 9 + 27 and g.max_degree == 4

    def test_appended_star(self):
        g, code = generate(FamilySpec.parse("appended_star", ["3", "1:3", "2:3"]))
        assert g.n == 10 and len(code) == 3 + 2 + 2

    @pytest.mark.parametrize(
        "spec",
        [
            FamilySpec("star", (2,)),
            FamilySpec("double_star", (2,)),
            FamilySpec("two_corona", (0,)),
            FamilySpec("big_construction", (2, 4)),
            FamilySpec("big_construction", (3, 3)),
            FamilySpec("complete_ary", (3, 0)),
            FamilySpec("exceptional_T3", (12,)),
            FamilySpec("graph_Z", (1,)),
            FamilySpec("appended_star", (3, 1)),
            FamilySpec("appended_star", (3, 9, 3)),
            FamilySpec("nonsense", ()),
        ],
    )
    def test_parameter_domain(self, spec):
        with pytest.raises(ParameterDomain):
            generate(spec)

    def test_parse_rejects_bad_words(self):
        with pytest.raises(ParameterDomain):
            FamilySpec.parse("star", ["x"])
        with pytest.raises(ParameterDomain):
            FamilySpec.parse("hexagon", [])

    def test_deterministic_labels(self):
        for kind in FAMILY_KINDS:
            spec = {
                "exceptional_T3": (5,),
                "star": (4,),
                "double_star": (3,),
                "two_corona": (3,),
                "graph_Z": (),
                "big_construction": (3, 4),
                "complete_ary": (3, 2),
                "appended_star": (3, 0, 3),
            }[kind]
            assert generate(FamilySpec(kind, spec)) == generate(FamilySpec(kind, spec))

    def test_reference_codes_optimal_for_small_families(self):
        for i in range(12):
            g, code = T(i)
            assert min_identifying_code(g).optimum == len(code)
        g, code = generate(FamilySpec("graph_Z"))
        assert min_identifying_code(g).optimum == len(code)


class TestClassify:
    def test_star(self):
        assert classify_exceptional(star(5)) == "Star(5)"

    def test_relabelled_t4(self, rng):
        assert classify_exceptional(relabel_randomly(T(4)[0], rng)) == "T4"

    def test_two_corona_p2(self):
        g = generate(FamilySpec("two_corona", (2,)))[0]
        # the 2-corona of P2 is P6, outside the Δ >= 3 domain
        assert g.max_degree == 2
        with pytest.raises(DegreeDomain):
            classify_exceptional(g)

    def test_nonmember(self):
        g = generate(FamilySpec("two_corona", (3,)))[0]
        assert classify_exceptional(g) is None
        assert classify_exceptional(generate(FamilySpec("graph_Z"))[0]) is None

    def test_all_members(self):
        assert [classify_exceptional(T(i)[0]) for i in range(12)] == [f"T{i}" for i in range(12)]

    def test_errors(self):
        with pytest.raises(NotATree):
            classify_exceptional(Graph(3, [(0, 1), (1, 2), (0, 2)]))
        with pytest.raises(DegreeDomain):
            classify_exceptional(path(5))


class TestMainBuilder:
    def test_t2(self):
        c = construct_main_bound_code(T(2)[0])
        assert c.valid and c.size == 5

    def test_double_star_4(self):
        g = generate(FamilySpec("double_star", (4,)))[0]
        c = construct_main_bound_code(g)
        assert c.valid and c.size <= 6 and min_identifying_code(g).optimum == 6

    def test_p4_with_6_star_at_inner_vertex(self):
        g, _ = append_star(path(4), 1, 6)
        c = construct_main_bound_code(g)
        assert g.n == 10 and c.valid and c.size <= 7 and 7 < 5 * 10 / 6

    def test_paths(self):
        for n in range(3, 12):
            c = construct_main_bound_code(path(n))
            assert c.valid and c.size == n // 2 + 1

    def test_errors(self):
        with pytest.raises(NotATree):
            construct_main_bound_code(Graph(4, [(0, 1), (2, 3), (1, 2), (0, 3)]))
        with pytest.raises(DegreeDomain):
            construct_main_bound_code(path(2))

    def test_big_construction(self):
        g = generate(FamilySpec("big_construction", (3, 4)))[0]
        c = construct_main_bound_code(g)
        assert c.valid and c.size <= 3 * 30 // 4


class TestDominationBuilder:
    def test_k13(self):
        assert construct_domination_bound_code(star(3)).size <= 3

    def test_p8(self):
        c = construct_domination_bound_code(path(8))
        assert c.valid and c.size <= 5

    def test_exceptional_trees_are_tight(self):
        for i in range(12):
            g = T(i)[0]
            c = construct_domination_bound_code(g)
            assert c.valid and c.size == g.n - min_dominating_set_tree(g).optimum

    def test_p4_excluded(self):
        with pytest.raises(ExcludedInstance):
            construct_domination_bound_code(path(4))

    def test_small(self):
        with pytest.raises(DomainError):
            construct_domination_bound_code(path(2))

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            construct_domination_bound_code(Graph(3, [(0, 1), (1, 2), (0, 2)]))

    @given(trees(min_n=9, max_n=30))
    @settings(max_examples=150, deadline=None)
    def test_larger_random_trees(self, t):
        c = construct_domination_bound_code(t)
        assert c.valid and c.size <= t.n - min_dominating_set_tree(t).optimum


@given(trees(min_n=5, max_n=30, max_degree=5))
@settings(max_examples=150, deadline=None)
def test_main_builder_on_random_trees(t):
    if t.max_degree < 3:
        return
    c = construct_main_bound_code(t)
    d = t.max_degree
    assert c.valid
    if classify_exceptional(t) is None:
        assert c.size * d <= (d - 1) * t.n
    else:
        assert c.size * d == (d - 1) * t.n + 1


@given(st.lists(st.integers(0, 10_000), min_size=0, max_size=6))
@settings(max_examples=200, deadline=None)
def test_subcubic_appended_three_stars_have_even_diameter(picks):
    g = star(3)
    for p in picks:
        candidates = [v for v in range(g.n) if g.degree(v) == 1]
        g, _ = append_star(g, candidates[p % len(candidates)], 3)
        assert g.max_degree == 3
        assert diameter(g) % 2 == 0
