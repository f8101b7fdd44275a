"""Exact polynomial routes, the permanent, and maximum witness search."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import eta_by_poly, perm_by_permutations, poly_by_permutations
from pernull.errors import InvariantViolationError, ScaleLimitError
from pernull.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from pernull.permanental import (
    PermPolynomial,
    max_sachs_subgraph,
    per_nullity_oracle,
    perm_polynomial_interpolation,
    perm_polynomial_sachs,
    permanent,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


class TestPermanent:
    @given(
        st.integers(min_value=0, max_value=5).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-50, 50), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    def test_against_permutation_expansion(self, m):
        assert permanent(m) == perm_by_permutations(m)

    def test_empty_matrix(self):
        assert permanent([]) == 1

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            permanent([[1, 2], [3]])

    def test_scale_guard(self):
        with pytest.raises(ScaleLimitError):
            permanent([[1] * 25 for _ in range(25)])

    def test_all_ones_is_factorial(self):
        import math

        assert permanent([[1] * 8 for _ in range(8)]) == math.factorial(8)


class TestPolynomial:
    def test_golden_triangle(self):
        assert perm_polynomial_sachs(cycle_graph(3)).coeffs == (1, 0, 3, -2)

    def test_golden_k2(self):
        assert perm_polynomial_sachs(complete_graph(2)).coeffs == (1, 0, 1)

    def test_golden_p3(self):
        assert perm_polynomial_sachs(path_graph(3)).coeffs == (1, 0, 2, 0)

    def test_empty_graph_power_of_x(self):
        for n in range(6):
            coeffs = perm_polynomial_sachs(empty_graph(n)).coeffs
            assert coeffs == (1,) + (0,) * n

    @given(graphs())
    @settings(max_examples=100, deadline=None)
    def test_sachs_equals_symbolic_expansion(self, g):
        assert perm_polynomial_sachs(g).coeffs == poly_by_permutations(g)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_interpolation_equals_sachs(self, g):
        assert (
            perm_polynomial_interpolation(g).coeffs
            == perm_polynomial_sachs(g).coeffs
        )

    def test_petersen_cross_route(self):
        a = perm_polynomial_sachs(petersen_graph())
        b = perm_polynomial_interpolation(petersen_graph())
        assert a.coeffs == b.coeffs
        assert a.nullity() == 0

    def test_evaluate_matches_permanent(self):
        g = cycle_graph(5)
        poly = perm_polynomial_sachs(g)
        for x in (-2, -1, 0, 1, 2, 3):
            m = [
                [(x if i == j else 0) - (1 if g.has_edge(i, j) else 0) for j in range(5)]
                for i in range(5)
            ]
            assert poly.evaluate(x) == perm_by_permutations(m)

    def test_interpolation_guard(self):
        with pytest.raises(ScaleLimitError):
            perm_polynomial_interpolation(empty_graph(15))

    def test_sachs_guard(self):
        with pytest.raises(ScaleLimitError):
            perm_polynomial_sachs(empty_graph(21))

    def test_guard_override_works(self):
        coeffs = perm_polynomial_interpolation(
            empty_graph(15), unsafe_override_guards=True
        ).coeffs
        assert coeffs == (1,) + (0,) * 15


class TestPermPolynomialType:
    # a malformed polynomial can only come from a broken route, so the
    # type reports it as an invariant violation rather than a ValueError

    def test_rejects_non_monic(self):
        with pytest.raises(InvariantViolationError):
            PermPolynomial((2, 0, 1))

    def test_rejects_nonzero_second(self):
        with pytest.raises(InvariantViolationError):
            PermPolynomial((1, 3, 1))

    def test_rejects_bad_sign(self):
        with pytest.raises(InvariantViolationError):
            PermPolynomial((1, 0, -1))

    def test_nullity_counts_trailing_zeros(self):
        assert PermPolynomial((1, 0, 2, 0)).nullity() == 1
        assert PermPolynomial((1, 0, 0, 0)).nullity() == 3
        assert PermPolynomial((1,)).nullity() == 0


class TestNullityOracle:
    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_both_methods_match_definition(self, g):
        want = eta_by_poly(g)
        assert per_nullity_oracle(g, method="sachs") == want
        assert per_nullity_oracle(g, method="interp") == want

    def test_bad_method(self):
        with pytest.raises(ValueError):
            per_nullity_oracle(cycle_graph(3), method="magic")

    def test_star_nullity(self):
        # K_{1,k}: one edge is the best cover, so nullity is k - 1
        for k in (2, 3, 4, 5):
            assert per_nullity_oracle(star_graph(k)) == k - 1


class TestMaxSachsSubgraph:
    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_order_complements_nullity(self, g):
        s = max_sachs_subgraph(g)
        assert s.order == g.n - per_nullity_oracle(g)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_witness_is_valid(self, g):
        s = max_sachs_subgraph(g)
        seen = 0
        for u, v in s.edges:
            assert g.has_edge(u, v)
            assert not seen & ((1 << u) | (1 << v))
            seen |= (1 << u) | (1 << v)
        for cyc in s.cycles:
            vs = cyc.vertices
            assert len(vs) >= 3
            for i, u in enumerate(vs):
                assert g.has_edge(u, vs[(i + 1) % len(vs)])
            m = sum(1 << u for u in vs)
            assert not seen & m
            seen |= m
        assert seen == s.covered.mask
        assert s.order == seen.bit_count()

    def test_perfect_matching_graph_covered(self):
        s = max_sachs_subgraph(cycle_graph(6))
        assert s.order == 6

    def test_empty_graph(self):
        s = max_sachs_subgraph(empty_graph(4))
        assert s.order == 0 and not s.edges and not s.cycles
