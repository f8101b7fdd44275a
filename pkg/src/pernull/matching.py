"""Maximum matchings and the structure of their exposed vertices.

Builds on the blossom kernel: matching construction, the decomposition of a
graph into vertices missable by some maximum matching (``D``), their outside
neighbors (``B``) and the rest (``C``), factor-criticality, and the count of
large ``D``-components that stay one-short of covered once exposed singleton
coverage is maximized. That count is what the nullity engine subtracts from
the matching deficiency, so both a structural computation and an exhaustive
oracle for it live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import InvariantViolationError, ScaleLimitError
from .graphs import Graph, VertexSet, component_masks, is_connected, to_graph6
from .limits import MSTAT_ORACLE_MAX_N

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """A matching given by its mate array; ``mate[v] == UNMATCHED`` for exposed v."""

    n: int
    mate: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(1 for m in self.mate if m != UNMATCHED) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v, m) for v, m in enumerate(self.mate) if m != UNMATCHED and v < m
        )

    @property
    def covered(self) -> VertexSet:
        return VertexSet.from_mask(self.covered_mask(), self.n)

    @property
    def exposed(self) -> VertexSet:
        return VertexSet.from_mask(
            ((1 << self.n) - 1) ^ self.covered_mask(), self.n
        )

    def covered_mask(self) -> int:
        m = 0
        for v, w in enumerate(self.mate):
            if w != UNMATCHED:
                m |= 1 << v
        return m

    @property
    def is_perfect(self) -> bool:
        return 2 * self.size == self.n

    @property
    def is_near_perfect(self) -> bool:
        return self.n % 2 == 1 and 2 * self.size == self.n - 1


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``.

    Deterministic: the blossom search scans vertices and neighbors in
    ascending label order, so equal inputs give equal matchings.
    """
    return Matching(g.n, tuple(_kernels.matching_mates(g.masks, g.n)))


def matching_number(g: Graph) -> int:
    return _kernels.matching_size(g.masks, g.n)


def has_perfect_matching(g: Graph) -> bool:
    return 2 * matching_number(g) == g.n


def has_near_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 1 and 2 * matching_number(g) == g.n - 1


def is_factor_critical(g: Graph) -> bool:
    """True iff deleting any one vertex leaves a perfectly matchable graph.

    Requires odd order; the single vertex K1 qualifies vacuously. Checked by
    n vertex-deleted matching runs.
    """
    if g.n == 0 or g.n % 2 == 0:
        return False
    want = (g.n - 1) // 2
    full = (1 << g.n) - 1
    return all(
        _kernels.matching_size(g.masks, g.n, full ^ (1 << v)) == want
        for v in range(g.n)
    )


@dataclass(frozen=True)
class GEDecomposition:
    """Partition of the vertices by maximum-matching coverage.

    ``d`` holds the vertices exposed by at least one maximum matching, ``b``
    their neighbors outside ``d``, ``c`` everything else. ``d_components``
    are the connected components induced by ``d`` in ascending order of
    their smallest vertex; ``d0`` and ``f`` index the singleton components
    and the components of order >= 3 within that list. No component ever has
    order 2 (they are all factor-critical, hence odd).
    """

    d: VertexSet
    b: VertexSet
    c: VertexSet
    d_components: tuple[VertexSet, ...]
    d0: tuple[int, ...]
    f: tuple[int, ...]

    @property
    def singleton_components(self) -> tuple[VertexSet, ...]:
        return tuple(self.d_components[i] for i in self.d0)

    @property
    def factor_components(self) -> tuple[VertexSet, ...]:
        return tuple(self.d_components[i] for i in self.f)

    @property
    def deficiency(self) -> int:
        """Number of vertices exposed by every maximum matching."""
        return len(self.d_components) - len(self.b)


def _d_mask(masks: tuple[int, ...], n: int, sub: int) -> tuple[int, int]:
    nu = _kernels.matching_size(masks, n, sub)
    d = 0
    rem = sub
    while rem:
        low = rem & -rem
        if _kernels.matching_size(masks, n, sub ^ low) == nu:
            d |= low
        rem ^= low
    return nu, d


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Decompose ``g`` by the vertex-deletion criterion.

    A vertex belongs to ``d`` iff deleting it does not drop the matching
    number. One blossom run per vertex plus one for the base value; ample at
    the orders this package targets, and trivially correct against the
    definition. Disconnected input is fine (the definition is global).
    """
    n = g.n
    full = (1 << n) - 1
    _, d = _d_mask(g.masks, n, full)
    b = 0
    rem = d
    while rem:
        low = rem & -rem
        b |= g.masks[low.bit_length() - 1]
        rem ^= low
    b &= ~d
    c = full & ~d & ~b
    comps = component_masks(g.masks, d)
    for cm in comps:
        if cm.bit_count() % 2 == 0:
            raise InvariantViolationError(
                "even-order component among maximum-matching-exposable vertices",
                graph6=to_graph6(g),
            )
    d0 = tuple(i for i, cm in enumerate(comps) if cm.bit_count() == 1)
    f = tuple(i for i, cm in enumerate(comps) if cm.bit_count() >= 3)
    return GEDecomposition(
        d=VertexSet.from_mask(d, n),
        b=VertexSet.from_mask(b, n),
        c=VertexSet.from_mask(c, n),
        d_components=tuple(VertexSet.from_mask(cm, n) for cm in comps),
        d0=d0,
        f=f,
    )


@dataclass(frozen=True)
class MStatistic:
    """Count of order->=3 exposable components left exposed at the optimum.

    Over the maximum matchings that cover as many singleton ``d``-components
    as possible, ``value`` components of order >= 3 keep exactly one exposed
    vertex each (the count does not depend on the matching chosen).
    ``saturated_singletons`` is that maximal singleton coverage, and
    ``witness`` assigns each ``b``-vertex the distinct component it absorbs,
    realizing both optima, as sorted (vertex, component index) pairs.
    """

    value: int
    saturated_singletons: int
    witness: tuple[tuple[int, int], ...]


def _kuhn_augment(
    b: int,
    adj: dict[int, list[int]],
    match_comp: dict[int, int],
    match_b: dict[int, int],
    seen: set[int],
    allowed: frozenset[int],
) -> bool:
    for k in adj[b]:
        if k in allowed and k not in seen:
            seen.add(k)
            owner = match_comp.get(k)
            if owner is None or _kuhn_augment(
                owner, adj, match_comp, match_b, seen, allowed
            ):
                match_comp[k] = b
                match_b[b] = k
                return True
    return False


def _saturate_components(
    masks: tuple[int, ...],
    b_mask: int,
    comp_masks_: list[int],
    d0_indices: tuple[int, ...],
) -> tuple[dict[int, int], int]:
    """Assign each vertex of ``b_mask`` a distinct component, singletons first.

    Round one runs augmentation restricted to the singleton components, so
    their matched count is the true coverage optimum; round two opens up the
    remaining components and only adds assignments, never undoing round
    one's coverage. Returns the assignment and the optimum. Raises if some
    vertex stays unassigned, which the decomposition theory rules out.
    """
    b_list = [v for v in range(len(masks)) if (b_mask >> v) & 1]
    adj: dict[int, list[int]] = {
        bv: [k for k, cm in enumerate(comp_masks_) if masks[bv] & cm]
        for bv in b_list
    }
    match_comp: dict[int, int] = {}
    match_b: dict[int, int] = {}
    singles = frozenset(d0_indices)
    for bv in b_list:
        _kuhn_augment(bv, adj, match_comp, match_b, set(), singles)
    s1 = len(match_comp)
    everything = frozenset(range(len(comp_masks_)))
    for bv in b_list:
        if bv not in match_b:
            _kuhn_augment(bv, adj, match_comp, match_b, set(), everything)
    if len(match_b) != len(b_list):
        raise InvariantViolationError(
            "could not assign every boundary vertex a distinct component"
        )
    if sum(1 for k in match_comp if k in singles) != s1:
        raise InvariantViolationError(
            "singleton coverage lost while saturating boundary vertices"
        )
    return match_b, s1


def m_statistic(g: Graph, dec: GEDecomposition | None = None) -> MStatistic:
    """Structural computation, no matching enumeration.

    Two rounds of bipartite augmentation between ``b``-vertices and the
    components they can absorb: first restricted to singleton components
    (their matched count is the coverage optimum), then opened up to all
    components until every ``b``-vertex is assigned. The components of order
    >= 3 that end up unassigned are exactly the ones a coverage-optimal
    maximum matching leaves exposed.

    Pass ``dec`` to reuse a decomposition you already computed.
    """
    if not is_connected(g):
        raise ValueError("connected graph required")
    if dec is None:
        dec = gallai_edmonds(g)
    _check_consistent(g, dec)
    comp_masks_ = [vs.mask for vs in dec.d_components]
    try:
        match_b, s1 = _saturate_components(
            g.masks, dec.b.mask, comp_masks_, dec.d0
        )
    except InvariantViolationError as exc:
        raise InvariantViolationError(str(exc), graph6=to_graph6(g)) from None
    assigned = set(match_b.values())
    value = sum(1 for k in dec.f if k not in assigned)
    witness = tuple(sorted(match_b.items()))
    return MStatistic(value=value, saturated_singletons=s1, witness=witness)


def _check_consistent(g: Graph, dec: GEDecomposition) -> None:
    full = (1 << g.n) - 1
    d, b, c = dec.d.mask, dec.b.mask, dec.c.mask
    if d | b | c != full or d & b or d & c or b & c:
        raise ValueError("decomposition does not partition the vertex set")
    nb = 0
    rem = d
    while rem:
        low = rem & -rem
        nb |= g.masks[low.bit_length() - 1]
        rem ^= low
    if (nb & ~d) != b:
        raise ValueError("decomposition does not match the graph")
    if [vs.mask for vs in dec.d_components] != component_masks(g.masks, d):
        raise ValueError("decomposition does not match the graph")


def m_statistic_oracle(g: Graph) -> int:
    """Exhaustive reference for :func:`m_statistic`.

    Enumerates every maximum matching, keeps those with maximal singleton
    coverage, and counts order->=3 exposable components having exactly one
    exposed vertex. Exponential; guarded. Raises if the count varies across
    qualifying matchings, since everything downstream relies on it being
    well defined.
    """
    if g.n > MSTAT_ORACLE_MAX_N:
        raise ScaleLimitError(
            f"matching enumeration capped at {MSTAT_ORACLE_MAX_N} vertices"
        )
    dec = gallai_edmonds(g)
    singles_mask = 0
    for vs in dec.singleton_components:
        singles_mask |= vs.mask
    f_masks = [vs.mask for vs in dec.factor_components]
    _, _, f_min, f_max, _ = _kernels.mstat_scan(
        g.masks, g.n, singles_mask, f_masks
    )
    if f_min != f_max:
        raise InvariantViolationError(
            "exposed-component count varies across coverage-optimal matchings",
            graph6=to_graph6(g),
        )
    return f_min
