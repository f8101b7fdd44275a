"""The structural nullity engine and the theorem-shaped special cases."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import eta_by_poly
from pernull.corpus import random_unicyclic
from pernull.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from pernull.nullity import (
    MIXED_CASES,
    NullityCase,
    ZeroNullityCase,
    line_graph_matching_check,
    line_graph_nullity_check,
    per_nullity_structural,
    unicyclic_nullity,
    unicyclic_zero_check,
    zero_nullity_characterization,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    order = draw(st.permutations(range(n)))
    for i in range(1, n):
        j = draw(st.integers(min_value=0, max_value=i - 1))
        u, v = order[i], order[j]
        edges.add((min(u, v), max(u, v)))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8)))
    return Graph(n, edges)


class TestStructuralEngine:
    @given(graphs())
    @settings(max_examples=150, deadline=None)
    def test_equals_polynomial_definition(self, g):
        assert per_nullity_structural(g).eta_structural == eta_by_poly(g)

    def test_examples(self):
        assert per_nullity_structural(cycle_graph(3)).eta_structural == 0
        assert per_nullity_structural(path_graph(3)).eta_structural == 1
        assert per_nullity_structural(empty_graph(4)).eta_structural == 4
        assert per_nullity_structural(star_graph(4)).eta_structural == 3
        assert per_nullity_structural(petersen_graph()).eta_structural == 0

    def test_case_perfect_matching(self):
        rep = per_nullity_structural(cycle_graph(4))
        assert rep.case_fired == NullityCase.PERFECT_MATCHING.value

    def test_case_f_empty(self):
        rep = per_nullity_structural(star_graph(3))
        assert rep.case_fired == NullityCase.F_EMPTY.value
        assert rep.eta_structural == 4 - 2 * 1

    def test_case_general(self):
        rep = per_nullity_structural(cycle_graph(5))
        assert rep.case_fired == NullityCase.GENERAL.value

    def test_case_mixed_across_components(self):
        g = Graph(7, [(0, 1), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)])
        rep = per_nullity_structural(g)
        assert rep.case_fired == MIXED_CASES

    def test_component_sum(self):
        g = Graph(6, [(0, 1), (2, 3), (3, 4)])
        rep = per_nullity_structural(g)
        assert rep.eta_structural == sum(c.eta for c in rep.components)
        assert [c.vertices.sorted() for c in rep.components] == [
            [0, 1],
            [2, 3, 4],
            [5],
        ]

    def test_with_oracle_included(self):
        rep = per_nullity_structural(path_graph(4), with_oracle=True)
        assert rep.eta_oracle == rep.eta_structural == 0

    def test_oracle_method_spellings(self):
        for m in ("sachs", "interp"):
            rep = per_nullity_structural(cycle_graph(5), with_oracle=True, oracle_method=m)
            assert rep.eta_oracle == 0

    def test_json_key_order(self):
        rep = per_nullity_structural(path_graph(3), with_oracle=True)
        d = rep.to_json_dict()
        assert list(d) == [
            "graph6",
            "n",
            "nu",
            "m_stat",
            "eta_structural",
            "eta_oracle",
            "case_fired",
            "components",
        ]

    def test_json_omits_absent_oracle(self):
        rep = per_nullity_structural(path_graph(3))
        assert "eta_oracle" not in rep.to_json_dict()

    def test_json_line_compact(self):
        line = per_nullity_structural(path_graph(3)).to_json_line()
        assert ": " not in line and ", " not in line
        assert json.loads(line)["eta_structural"] == 1

    def test_n_zero(self):
        rep = per_nullity_structural(empty_graph(0))
        assert rep.eta_structural == 0 and rep.components == ()


class TestZeroCharacterization:
    @given(connected_graphs())
    @settings(max_examples=100, deadline=None)
    def test_matches_oracle(self, g):
        verdict, _ = zero_nullity_characterization(g)
        assert verdict == (eta_by_poly(g) == 0)

    def test_cases(self):
        v, case = zero_nullity_characterization(cycle_graph(4))
        assert v and case == ZeroNullityCase.PERFECT_MATCHING
        v, case = zero_nullity_characterization(cycle_graph(5))
        assert v and case == ZeroNullityCase.NO_SINGLETONS
        v, case = zero_nullity_characterization(path_graph(3))
        assert not v and case is None

    def test_singletons_coverable_case(self):
        # triangle, then a path of two more vertices off it: no perfect
        # matching, one singleton in G[D], and the boundary can absorb it
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
        v, case = zero_nullity_characterization(g)
        assert v and case == ZeroNullityCase.SINGLETONS_COVERABLE

    def test_requires_connected_and_n2(self):
        with pytest.raises(ValueError):
            zero_nullity_characterization(empty_graph(1))
        with pytest.raises(ValueError):
            zero_nullity_characterization(Graph(4, [(0, 1), (2, 3)]))


class TestUnicyclic:
    @given(st.integers(3, 12), st.integers(0, 2**32))
    @settings(max_examples=120, deadline=None)
    def test_closed_form_equals_engine(self, n, seed):
        g = random_unicyclic(n, seed)
        assert unicyclic_nullity(g) == per_nullity_structural(g).eta_structural

    @given(st.integers(3, 9), st.integers(0, 2**32))
    @settings(max_examples=80, deadline=None)
    def test_zero_check_matches(self, n, seed):
        g = random_unicyclic(n, seed)
        assert unicyclic_zero_check(g) == (
            per_nullity_structural(g).eta_structural == 0
        )

    def test_cycles_themselves(self):
        # odd cycle: nullity 0; even cycle: perfect matching, nullity 0
        for k in range(3, 10):
            assert unicyclic_nullity(cycle_graph(k)) == 0

    def test_deficiency_branch(self):
        # triangle with two pendants on distinct vertices: eta = n - 2nu - 1
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
        assert unicyclic_nullity(g) == 5 - 2 * 2
        g2 = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
        assert unicyclic_nullity(g2) == per_nullity_structural(g2).eta_structural

    def test_rejects_non_unicyclic(self):
        with pytest.raises(ValueError):
            unicyclic_nullity(path_graph(4))
        with pytest.raises(ValueError):
            unicyclic_zero_check(complete_graph(4))


class TestLineGraphChecks:
    def test_nullity_in_zero_one(self):
        for g in (path_graph(4), cycle_graph(5), complete_graph(4), star_graph(5)):
            assert line_graph_nullity_check(g) in (0, 1)

    @given(connected_graphs(max_n=7))
    @settings(max_examples=80, deadline=None)
    def test_nullity_always_small(self, g):
        assert line_graph_nullity_check(g) in (0, 1)

    def test_matching_parity(self):
        rep = line_graph_matching_check(complete_graph(3))  # 3 edges, odd
        assert not rep.lg_perfect and rep.lg_near_perfect and rep.lg_factor_critical
        rep = line_graph_matching_check(path_graph(3))  # 2 edges, even
        assert rep.lg_perfect

    @given(connected_graphs(max_n=7))
    @settings(max_examples=80, deadline=None)
    def test_perfect_iff_even_edges(self, g):
        rep = line_graph_matching_check(g)
        assert rep.lg_perfect == (g.edge_count() % 2 == 0)

    def test_requires_connected(self):
        with pytest.raises(ValueError):
            line_graph_matching_check(Graph(4, [(0, 1), (2, 3)]))
