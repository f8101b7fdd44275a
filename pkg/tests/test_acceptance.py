"""Acceptance gate: one test and one printed verdict line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines
as they complete. The whole suite is a few minutes of serial compute; set
PERNULL_ACCEPT_EXTENDED=1 to extend criterion 1 to every labeled graph on
7 vertices (a couple of million graphs, several extra minutes).
"""

import json
import os

import pytest

from pernull.corpus import CorpusKind, CorpusSpec
from pernull.graphs import complete_graph, cycle_graph, empty_graph, path_graph
from pernull.nullity import per_nullity_structural
from pernull.permanental import (
    per_nullity_oracle,
    perm_polynomial_interpolation,
    perm_polynomial_sachs,
)
from pernull.verify import run_verification

SEED = 20260823
EXTENDED = os.environ.get("PERNULL_ACCEPT_EXTENDED", "") not in ("", "0")


def verdict(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    assert ok, f"criterion {num}: {detail}"


def run(kind, n_range, checks, **kw):
    return run_verification(CorpusSpec(kind=kind, n_range=n_range, **kw), checks)


@pytest.fixture(scope="module")
def connected7():
    """Shared sweep over every connected labeled graph with n <= 7,
    feeding criteria 4, 6, and 9."""
    return run(
        CorpusKind.ALL_CONNECTED_LABELED,
        (1, 7),
        ["ge_soundness", "zero_nullity_char", "factor_critical_zero"],
    )


def test_criterion_1_exhaustive_oracle_equivalence():
    top = 7 if EXTENDED else 6
    res = run(CorpusKind.ALL_LABELED, (0, top), ["oracle_equivalence"])
    st = res.checks["oracle_equivalence"]
    ok = res.ok and st.failed == 0 and st.skipped == 0 and st.passed == res.graphs
    extra = "" if EXTENDED else " (extended n=7 run off)"
    verdict(
        1,
        ok,
        f"structural nullity == oracle nullity on all {res.graphs} labeled "
        f"graphs n <= {top}{extra}",
    )


def test_criterion_2_polynomial_cross_check():
    res = run(CorpusKind.ALL_LABELED, (0, 6), ["sachs_vs_interpolation"])
    st = res.checks["sachs_vs_interpolation"]
    ok = res.ok and st.failed == 0 and st.skipped == 0
    verdict(
        2,
        ok,
        f"subgraph-count and interpolation coefficients identical on all "
        f"{res.graphs} labeled graphs n <= 6",
    )


def test_criterion_3_fixed_golden_values():
    ok = True
    for route in (perm_polynomial_sachs, perm_polynomial_interpolation):
        ok &= route(cycle_graph(3)).coeffs == (1, 0, 3, -2)
        ok &= route(complete_graph(2)).coeffs == (1, 0, 1)
        ok &= route(path_graph(3)).coeffs == (1, 0, 2, 0)
    for n in range(13):
        ok &= per_nullity_structural(empty_graph(n)).eta_structural == n
        ok &= per_nullity_oracle(empty_graph(n)) == n
    for n in range(13, 40):
        ok &= per_nullity_structural(empty_graph(n)).eta_structural == n
    verdict(3, ok, "triangle, single-edge, two-path polynomials and edgeless nullity exact")


def test_criterion_4_decomposition_soundness(connected7):
    st = connected7.checks["ge_soundness"]
    ok = st.failed == 0 and st.skipped == 0 and st.passed == connected7.graphs
    verdict(
        4,
        ok,
        f"all four decomposition clauses (incl. the matching-number formula) "
        f"hold on all {connected7.graphs} connected graphs n <= 7",
    )


def test_criterion_5_m_statistic_everywhere():
    exhaustive = run(CorpusKind.ALL_CONNECTED_NONISO, (1, 9), ["m_stat_equivalence"])
    st_a = exhaustive.checks["m_stat_equivalence"]
    random_part = run(
        CorpusKind.RANDOM_TREE_PLUS,
        (10, 14),
        ["m_stat_equivalence"],
        count=2000,
        seed=SEED,
        p=0.25,
    )
    st_b = random_part.checks["m_stat_equivalence"]
    ok = (
        exhaustive.ok
        and random_part.ok
        and st_a.failed == st_a.skipped == 0
        and st_b.failed == st_b.skipped == 0
        and random_part.graphs == 10000
    )
    verdict(
        5,
        ok,
        f"coverage statistic == enumeration oracle on {exhaustive.graphs} "
        f"connected classes n <= 9 plus {random_part.graphs} seeded random "
        f"connected graphs n <= 14; constancy assertion never fired",
    )


def test_criterion_6_zero_nullity_characterization(connected7):
    st = connected7.checks["zero_nullity_char"]
    # the single n = 1 graph is outside the statement and is skipped
    ok = st.failed == 0 and st.skipped == 1 and st.passed == connected7.graphs - 1
    verdict(
        6,
        ok,
        f"zero-nullity verdict matches the oracle on all {st.passed} "
        f"connected graphs 2 <= n <= 7",
    )


def test_criterion_7_unicyclic_theorems():
    res = run(
        CorpusKind.RANDOM_UNICYCLIC,
        (5, 14),
        ["unicyclic_sandwich", "unicyclic_thm", "oracle_equivalence"],
        count=1000,
        seed=SEED,
    )
    ok = res.ok and res.graphs == 10000
    for name in ("unicyclic_sandwich", "unicyclic_thm", "oracle_equivalence"):
        st = res.checks[name]
        ok &= st.failed == 0 and st.skipped == 0
    verdict(
        7,
        ok,
        f"deficiency sandwich, closed form, and zero test all hold on "
        f"{res.graphs} seeded one-cycle graphs, 1000 per n in 5..14",
    )


def test_criterion_8_line_graph_theorems():
    exhaustive = run(
        CorpusKind.ALL_CONNECTED_LABELED,
        (1, 6),
        ["line_graph_nullity", "line_graph_matching"],
    )
    random_part = run(
        CorpusKind.RANDOM_TREE_PLUS,
        (7, 10),
        ["line_graph_nullity", "line_graph_matching"],
        count=125,
        seed=SEED,
        p=0.3,
    )
    ok = exhaustive.ok and random_part.ok and random_part.graphs == 500
    verdict(
        8,
        ok,
        f"line-graph nullity in {{0,1}}, perfect matching iff even edge "
        f"count, factor-critical when 2-edge-connected with odd edges: all "
        f"{exhaustive.graphs} connected graphs n <= 6 plus "
        f"{random_part.graphs} random connected n <= 10",
    )


def test_criterion_9_factor_critical(connected7):
    st = connected7.checks["factor_critical_zero"]
    ok = st.failed == 0 and st.passed > 0
    verdict(
        9,
        ok,
        f"every factor-critical graph with 3 <= n <= 7 ({st.passed} found) "
        f"has nullity 0 both ways and a spanning maximum witness",
    )


def test_criterion_10_determinism():
    spec = CorpusSpec(
        kind=CorpusKind.RANDOM_UNICYCLIC, n_range=(6, 10), count=50, seed=SEED
    )
    checks = ["unicyclic_thm", "oracle_equivalence"]
    a = run_verification(spec, checks).to_json()
    b = run_verification(spec, checks).to_json()
    reports = []
    for _ in range(2):
        g = cycle_graph(5)
        reports.append(per_nullity_structural(g, with_oracle=True).to_json_line())
    ok = a == b and reports[0] == reports[1] and json.loads(a)["ok"]
    verdict(10, ok, "repeated seeded runs produce byte-identical JSON")
