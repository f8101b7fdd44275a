"""Structural nullity of the permanental polynomial, and its consequences.

The multiplicity of the zero root is computed here without touching a
permanent: per connected component it is the vertex count minus twice the
matching number, lowered further by the count of large exposable components
that stay exposed under coverage-optimal maximum matchings (the general
case). Components add up. The brute-force counterpart lives in
``permanental``; the two must always agree, and the harness checks that
they do.

Also here: the structural zero-nullity test, the closed forms for graphs
with exactly one cycle, and the line-graph matching and nullity checkers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .errors import InvariantViolationError
from .graphs import (
    Graph,
    VertexSet,
    component_masks,
    find_unique_cycle,
    is_connected,
    is_unicyclic,
    line_graph,
    to_graph6,
)
from .matching import _d_mask, _saturate_components, is_factor_critical
from .permanental import per_nullity_oracle


class NullityCase(str, Enum):
    """Which branch of the component formula produced the value."""

    PERFECT_MATCHING = "PERFECT_MATCHING"
    F_EMPTY = "F_EMPTY"
    GENERAL = "GENERAL"


MIXED_CASES = "MIXED"


@dataclass(frozen=True)
class ComponentReport:
    vertices: VertexSet
    nu: int
    m_stat: int
    eta: int
    case_fired: NullityCase

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertices.sorted(),
            "n": len(self.vertices),
            "nu": self.nu,
            "m_stat": self.m_stat,
            "eta": self.eta,
            "case_fired": self.case_fired.value,
        }


@dataclass(frozen=True)
class NullityReport:
    """Whole-graph result with per-component breakdown.

    ``case_fired`` repeats the single component's case, or ``MIXED`` when
    components fired different branches (edgeless input, having no
    components with edges, reads F_EMPTY throughout).
    """

    graph6: str
    n: int
    nu: int
    m_stat: int
    eta_structural: int
    case_fired: str
    components: tuple[ComponentReport, ...]
    eta_oracle: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "graph6": self.graph6,
            "n": self.n,
            "nu": self.nu,
            "m_stat": self.m_stat,
            "eta_structural": self.eta_structural,
        }
        if self.eta_oracle is not None:
            out["eta_oracle"] = self.eta_oracle
        out["case_fired"] = self.case_fired
        out["components"] = [c.to_json_dict() for c in self.components]
        return out

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _component_report(masks: tuple[int, ...], n: int, comp: int) -> ComponentReport:
    cn = comp.bit_count()
    nu, d = _d_mask(masks, n, comp)
    if 2 * nu == cn:
        return ComponentReport(
            VertexSet.from_mask(comp, n), nu, 0, 0, NullityCase.PERFECT_MATCHING
        )
    dcomps = component_masks(masks, d)
    f_idx = tuple(i for i, cm in enumerate(dcomps) if cm.bit_count() >= 3)
    if not f_idx:
        return ComponentReport(
            VertexSet.from_mask(comp, n),
            nu,
            0,
            cn - 2 * nu,
            NullityCase.F_EMPTY,
        )
    b = 0
    rem = d
    while rem:
        low = rem & -rem
        b |= masks[low.bit_length() - 1]
        rem ^= low
    b &= comp & ~d
    d0_idx = tuple(i for i, cm in enumerate(dcomps) if cm.bit_count() == 1)
    match_b, _ = _saturate_components(masks, b, dcomps, d0_idx)
    assigned = set(match_b.values())
    m_stat = sum(1 for i in f_idx if i not in assigned)
    eta = cn - 2 * nu - m_stat
    return ComponentReport(
        VertexSet.from_mask(comp, n), nu, m_stat, eta, NullityCase.GENERAL
    )


def per_nullity_structural(
    g: Graph,
    *,
    with_oracle: bool = False,
    oracle_method: str = "sachs",
    unsafe_override_guards: bool = False,
) -> NullityReport:
    """Nullity by matching structure alone; polynomial-time throughout.

    Per connected component H: with a perfect matching, or with no
    exposable component of order >= 3, the value is |H| - 2 nu(H);
    otherwise the coverage statistic is subtracted as well. Isolated
    vertices contribute 1 each. ``with_oracle`` additionally runs the
    exponential polynomial route and raises if the two disagree.
    """
    masks, n = g.masks, g.n
    comps = component_masks(masks, (1 << n) - 1)
    reports = tuple(_component_report(masks, n, c) for c in comps)
    eta = sum(r.eta for r in reports)
    if not (0 <= eta <= n) or (g.edge_count() > 0 and n >= 2 and eta > n - 2):
        raise InvariantViolationError(
            f"structural nullity {eta} escapes its proven range",
            graph6=to_graph6(g),
        )
    cases = {r.case_fired for r in reports}
    case = cases.pop().value if len(cases) == 1 else (
        MIXED_CASES if cases else NullityCase.F_EMPTY.value
    )
    eta_oracle = None
    if with_oracle:
        eta_oracle = per_nullity_oracle(
            g, method=oracle_method, unsafe_override_guards=unsafe_override_guards
        )
        if eta_oracle != eta:
            raise InvariantViolationError(
                f"structural nullity {eta} != oracle nullity {eta_oracle}",
                graph6=to_graph6(g),
            )
    return NullityReport(
        graph6=to_graph6(g),
        n=n,
        nu=sum(r.nu for r in reports),
        m_stat=sum(r.m_stat for r in reports),
        eta_structural=eta,
        case_fired=case,
        components=reports,
        eta_oracle=eta_oracle,
    )


class ZeroNullityCase(str, Enum):
    PERFECT_MATCHING = "PERFECT_MATCHING"
    NO_SINGLETONS = "NO_SINGLETONS"
    SINGLETONS_COVERABLE = "SINGLETONS_COVERABLE"


def zero_nullity_characterization(
    g: Graph,
) -> tuple[bool, ZeroNullityCase | None]:
    """Decide nullity zero structurally, reporting which condition fired.

    True iff the graph has a perfect matching, or no exposable vertex is
    isolated among the exposable ones, or the isolated ones can all be
    covered by one maximum matching (a bipartite feasibility question, not
    a matching enumeration). Connected graphs on at least two vertices
    only.
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("connected graph on >= 2 vertices required")
    masks, n = g.masks, g.n
    full = (1 << n) - 1
    nu, d = _d_mask(masks, n, full)
    if 2 * nu == n:
        return True, ZeroNullityCase.PERFECT_MATCHING
    dcomps = component_masks(masks, d)
    d0_idx = tuple(i for i, cm in enumerate(dcomps) if cm.bit_count() == 1)
    if not d0_idx:
        return True, ZeroNullityCase.NO_SINGLETONS
    b = 0
    rem = d
    while rem:
        low = rem & -rem
        b |= masks[low.bit_length() - 1]
        rem ^= low
    b &= ~d
    _, s1 = _saturate_components(masks, b, dcomps, d0_idx)
    if s1 == len(d0_idx):
        return True, ZeroNullityCase.SINGLETONS_COVERABLE
    return False, None


def unicyclic_nullity(g: Graph) -> int:
    """Closed form for graphs with exactly one cycle.

    The deficiency n - 2 nu drops by one exactly when the cycle is odd and
    a maximum matching splits into a near-perfect matching of the cycle
    plus a maximum matching of the rest.
    """
    if not is_unicyclic(g):
        raise ValueError("unicyclic graph required")
    cyc = find_unique_cycle(g)
    nu = _kernels.matching_size(g.masks, g.n)
    cyc_mask = 0
    for v in cyc.vertices:
        cyc_mask |= 1 << v
    if cyc.is_odd:
        rest = _kernels.matching_size(g.masks, g.n, ((1 << g.n) - 1) ^ cyc_mask)
        if nu == (cyc.length - 1) // 2 + rest:
            return g.n - 2 * nu - 1
    return g.n - 2 * nu


def unicyclic_zero_check(g: Graph) -> bool:
    """Zero nullity for one-cycle graphs, via the three-way criterion:
    the graph is an odd cycle, or has a perfect matching, or removing the
    cycle's vertices leaves a perfectly matchable graph.
    """
    if not is_unicyclic(g):
        raise ValueError("unicyclic graph required")
    cyc = find_unique_cycle(g)
    if cyc.length == g.n and cyc.is_odd:
        return True
    nu = _kernels.matching_size(g.masks, g.n)
    if 2 * nu == g.n:
        return True
    cyc_mask = 0
    for v in cyc.vertices:
        cyc_mask |= 1 << v
    rest = ((1 << g.n) - 1) ^ cyc_mask
    return 2 * _kernels.matching_size(g.masks, g.n, rest) == rest.bit_count()


@dataclass(frozen=True)
class LineGraphMatchingReport:
    lg_perfect: bool
    lg_near_perfect: bool
    lg_factor_critical: bool


def line_graph_matching_check(g: Graph) -> LineGraphMatchingReport:
    """Measure matching properties of the line graph.

    Caller compares against the predictions: a perfect matching exists iff
    the edge count is even; an odd edge count >= 3 forces a near-perfect
    matching; with two-edge-connectivity on top, factor-criticality.
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("connected graph on >= 2 vertices required")
    lg, _ = line_graph(g)
    nu = _kernels.matching_size(lg.masks, lg.n)
    perfect = 2 * nu == lg.n
    near = lg.n % 2 == 1 and 2 * nu == lg.n - 1
    return LineGraphMatchingReport(perfect, near, is_factor_critical(lg))


def line_graph_nullity_check(g: Graph) -> int:
    """Structural nullity of the line graph; 0 or 1 for connected input.

    A value outside {0, 1} for a connected graph would contradict what the
    rest of this package is built on, so it raises rather than returns.
    """
    if g.n < 2:
        raise ValueError("graph on >= 2 vertices required")
    lg, _ = line_graph(g)
    eta = per_nullity_structural(lg).eta_structural
    if is_connected(g) and eta not in (0, 1):
        raise InvariantViolationError(
            f"line-graph nullity {eta} outside {{0, 1}}", graph6=to_graph6(g)
        )
    return eta
