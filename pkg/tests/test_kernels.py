"""Both kernel lanes against brute force, and against each other.

The compiled lane must agree bit-for-bit with the pure lane on anything
inside its dispatch envelope; the pure lane must agree with the
from-definitions oracles in tests/oracles.py.
"""

import random

import pytest

from oracles import (
    exposed_by_some_maximum_matching,
    nu_by_subsets,
    perm_by_permutations,
    sachs_counts_by_edge_subsets,
)
from pernull import _kernels
from pernull._kernels import pure
from pernull.graphs import Graph

ext = pytest.importorskip("pernull._kernels._core") if _kernels.COMPILED else None

needs_ext = pytest.mark.skipif(
    not _kernels.COMPILED, reason="compiled kernels unavailable"
)


def rand_graph(rng, n, p=0.4):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


class TestPureAgainstDefinitions:
    def test_matching_size_exhaustive_n4(self):
        for code in range(1 << 6):
            pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
            edges = [pairs[i] for i in range(6) if (code >> i) & 1]
            g = Graph(4, edges)
            assert pure.matching_size(g.masks, 4) == nu_by_subsets(g)

    def test_matching_size_random(self):
        rng = random.Random(11)
        for _ in range(60):
            g = rand_graph(rng, rng.randint(1, 8))
            assert pure.matching_size(g.masks, g.n) == nu_by_subsets(g)

    def test_matching_mates_consistent(self):
        rng = random.Random(5)
        for _ in range(40):
            g = rand_graph(rng, rng.randint(1, 9))
            mate = pure.matching_mates(g.masks, g.n)
            size = 0
            for v, w in enumerate(mate):
                if w >= 0:
                    assert mate[w] == v and g.has_edge(v, w)
                    size += v < w
            assert size == pure.matching_size(g.masks, g.n)

    def test_ryser_small(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(0, 6)
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            assert pure.ryser_permanent(m, n) == perm_by_permutations(m)

    def test_ryser_empty_matrix_is_one(self):
        assert pure.ryser_permanent([], 0) == 1

    def test_sachs_counts_vs_edge_subsets(self):
        rng = random.Random(17)
        for _ in range(30):
            g = rand_graph(rng, rng.randint(1, 7), p=0.5)
            assert pure.sachs_counts(g.masks, g.n) == sachs_counts_by_edge_subsets(g)

    def test_max_sachs_order_matches_counts(self):
        rng = random.Random(23)
        for _ in range(40):
            g = rand_graph(rng, rng.randint(1, 8), p=0.5)
            counts = pure.sachs_counts(g.masks, g.n)
            want = max(k for k, c in enumerate(counts) if c != 0)
            assert pure.max_sachs_order(g.masks, g.n) == want

    def test_mstat_scan_exposed_union(self):
        rng = random.Random(29)
        for _ in range(30):
            g = rand_graph(rng, rng.randint(1, 7), p=0.4)
            _, _, _, _, exposed = pure.mstat_scan(g.masks, g.n, 0, [])
            assert exposed == sum(
                1 << v for v in exposed_by_some_maximum_matching(g)
            )

    def test_canon_form_is_relabeling_invariant(self):
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(1, 6)
            g = rand_graph(rng, n, p=0.5)
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
            assert pure.canon_form(g.masks, n) == pure.canon_form(h.masks, n)

    def test_canon_form_separates_nonisomorphic(self):
        a = Graph(4, [(0, 1), (1, 2), (2, 3)])  # P4
        b = Graph(4, [(0, 1), (0, 2), (0, 3)])  # K_{1,3}
        assert pure.canon_form(a.masks, 4) != pure.canon_form(b.masks, 4)


@needs_ext
class TestLaneEquivalence:
    def test_matching(self):
        rng = random.Random(41)
        for _ in range(80):
            g = rand_graph(rng, rng.randint(0, 10))
            assert ext.matching_size(g.masks, g.n) == pure.matching_size(g.masks, g.n)
            assert ext.matching_mates(g.masks, g.n) == pure.matching_mates(g.masks, g.n)

    def test_matching_with_sub_mask(self):
        rng = random.Random(43)
        for _ in range(60):
            g = rand_graph(rng, 9)
            sub = rng.getrandbits(9)
            assert ext.matching_size(g.masks, g.n, sub) == pure.matching_size(
                g.masks, g.n, sub
            )

    def test_ryser(self):
        rng = random.Random(47)
        for _ in range(60):
            n = rng.randint(0, 7)
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert ext.ryser_permanent(m, n) == pure.ryser_permanent(m, n)

    def test_sachs(self):
        rng = random.Random(53)
        for _ in range(40):
            g = rand_graph(rng, rng.randint(0, 9), p=0.5)
            assert ext.sachs_counts(g.masks, g.n) == pure.sachs_counts(g.masks, g.n)
            assert ext.max_sachs_order(g.masks, g.n) == pure.max_sachs_order(
                g.masks, g.n
            )

    def test_mstat(self):
        from pernull.matching import gallai_edmonds

        rng = random.Random(59)
        for _ in range(25):
            g = rand_graph(rng, rng.randint(1, 8), p=0.4)
            # drive both lanes with the same component split
            dec = gallai_edmonds(g)
            singles = sum(1 << vs.sorted()[0] for vs in dec.singleton_components)
            f_masks = [vs.mask for vs in dec.factor_components]
            assert ext.mstat_scan(g.masks, g.n, singles, f_masks) == pure.mstat_scan(
                g.masks, g.n, singles, f_masks
            )

    def test_canon(self):
        rng = random.Random(61)
        for _ in range(50):
            g = rand_graph(rng, rng.randint(1, 7), p=0.5)
            assert ext.canon_form(g.masks, g.n) == pure.canon_form(g.masks, g.n)

    def test_int128_selftest(self):
        assert ext._selftest_int128()

    def test_ext_rejects_oversize(self):
        with pytest.raises(ValueError):
            ext.matching_size((0,) * 63, 63)
        with pytest.raises(ValueError):
            ext.ryser_permanent([[0] * 25 for _ in range(25)], 25)


class TestDispatcher:
    def test_reports_a_lane(self):
        assert _kernels.impl_name() in ("pure", "ext")

    def test_big_n_falls_back_to_pure(self):
        # 70 vertices exceeds every compiled envelope; must still answer
        masks = [0] * 70
        masks[0], masks[1] = 2, 1
        assert _kernels.matching_size(tuple(masks), 70) == 1

    def test_huge_entries_fall_back_to_pure(self):
        big = 1 << 80
        m = [[big, 1], [1, big]]
        assert _kernels.ryser_permanent(m, 2) == big * big + 1

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("PERNULL_KERNELS", "pure")
        import importlib

        import pernull._kernels as k

        k2 = importlib.reload(k)
        try:
            assert k2.impl_name() == "pure"
        finally:
            monkeypatch.delenv("PERNULL_KERNELS")
            importlib.reload(k2)
