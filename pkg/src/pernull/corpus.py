"""Deterministic graph corpora for the verification harness.

Exhaustive streams enumerate labeled graphs in ascending edge-bitmask
order. Random streams use splitmix64 -- a published, constant-defined
64-bit generator -- rather than Python's Mersenne Twister, so a (kind, n,
seed) triple pins down the byte-identical corpus in any language:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output = z ^ (z >> 31)

Bounded draws use rejection sampling (no modulo bias); probability-p coin
flips compare the raw draw against floor(p * 2^64). Graph i of size n in a
corpus seeded s is generated from a fresh stream seeded with the first
output of splitmix64(s XOR (n * 2^32 + i)), so any single graph can be
regenerated without replaying the stream.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from . import _kernels
from .errors import ScaleLimitError
from .graphs import Graph, is_connected, line_graph
from .limits import ENUM_LABELED_MAX_N, ENUM_NONISO_MAX_N
from .matching import is_factor_critical

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """The splitmix64 generator; see module docstring for the exact recipe."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        """Uniform draw from [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next64()
            if r < limit:
                return r % bound

    def chance(self, p: float) -> bool:
        return self.next64() < int(p * 2.0**64)


def graph_seed(seed: int, n: int, index: int) -> int:
    """Seed of the per-graph stream; see module docstring."""
    return SplitMix64((seed ^ ((n << 32) + index)) & _MASK64).next64()


# -- pair indexing: lexicographic (i, j) with i < j -----------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _pair_at(n: int, k: int) -> tuple[int, int]:
    i = 0
    while k >= n - 1 - i:
        k -= n - 1 - i
        i += 1
    return i, i + 1 + k


# -- exhaustive streams ---------------------------------------------------


def enumerate_labeled_graphs(
    n: int, *, unsafe_override_guards: bool = False
) -> Iterator[Graph]:
    """All 2^C(n,2) labeled simple graphs on vertices 0..n-1.

    Edge set e of graph number t: pair k (lexicographic order) is present
    iff bit k of t is set; t runs ascending. Guarded: the count doubles per
    pair.
    """
    if n > ENUM_LABELED_MAX_N and not unsafe_override_guards:
        raise ScaleLimitError(
            f"labeled enumeration capped at {ENUM_LABELED_MAX_N} vertices"
        )
    pairs = _pairs(n)
    for t in range(1 << len(pairs)):
        masks = [0] * n
        rem = t
        while rem:
            low = rem & -rem
            i, j = pairs[low.bit_length() - 1]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
            rem ^= low
        yield Graph._from_masks_trusted(n, tuple(masks))


def enumerate_connected_labeled(
    n: int, *, unsafe_override_guards: bool = False
) -> Iterator[Graph]:
    for g in enumerate_labeled_graphs(
        n, unsafe_override_guards=unsafe_override_guards
    ):
        if is_connected(g):
            yield g


# -- one representative per isomorphism class -----------------------------
#
# Level n is built from level n-1 by attaching a new highest-numbered
# vertex with every nonempty neighborhood, then deduplicating on the
# canonical form. Complete because every connected graph has a vertex
# whose removal keeps it connected (any leaf of a spanning tree). Classes
# are yielded in ascending canonical-form order, decoded straight from the
# form, so the output does not depend on discovery order.

_noniso_cache: dict[int, list[int]] = {}


def _canon_to_masks(form: int, n: int) -> tuple[int, ...]:
    masks = [0] * n
    total = n * (n - 1) // 2
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (form >> (total - 1 - pos)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos += 1
    return tuple(masks)


def _noniso_forms(n: int) -> list[int]:
    if n in _noniso_cache:
        return _noniso_cache[n]
    if n == 1:
        forms = [0]
    else:
        forms_set = set()
        for prev in _noniso_forms(n - 1):
            base = _canon_to_masks(prev, n - 1)
            for nb in range(1, 1 << (n - 1)):
                masks = [
                    m | (1 << (n - 1)) if (nb >> v) & 1 else m
                    for v, m in enumerate(base)
                ]
                masks.append(nb)
                forms_set.add(_kernels.canon_form(masks, n))
        forms = sorted(forms_set)
    _noniso_cache[n] = forms
    return forms


def enumerate_connected_noniso(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class, ascending canonical form."""
    if n > ENUM_NONISO_MAX_N:
        raise ScaleLimitError(
            f"class enumeration capped at {ENUM_NONISO_MAX_N} vertices"
        )
    if n < 1:
        return
    for form in _noniso_forms(n):
        yield Graph._from_masks_trusted(n, _canon_to_masks(form, n))


# -- random families ------------------------------------------------------


def _tree_edges_from_prufer(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def random_tree(n: int, rng: SplitMix64) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, _tree_edges_from_prufer(seq, n))


def random_unicyclic(n: int, seed: int) -> Graph:
    """Random connected graph with exactly one cycle.

    A uniform labeled tree plus one uniformly chosen non-edge. Every
    unicyclic graph arises this way (drop any cycle edge to get the tree),
    though not with exactly uniform probability.
    """
    if n < 3:
        raise ValueError("unicyclic graph needs at least 3 vertices")
    rng = SplitMix64(seed)
    tree = random_tree(n, rng)
    total = n * (n - 1) // 2
    while True:
        i, j = _pair_at(n, rng.randrange(total))
        if not tree.has_edge(i, j):
            return Graph(n, tree.edges() + [(i, j)])


def random_gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    edges = [(i, j) for i, j in _pairs(n) if rng.chance(p)]
    return Graph(n, edges)


def random_tree_plus(n: int, p: float, rng: SplitMix64) -> Graph:
    """A uniform labeled tree with each remaining pair added independently.

    Always connected; edge density is tunable without losing that.
    """
    tree = random_tree(n, rng)
    extra = [
        (i, j) for i, j in _pairs(n)
        if not tree.has_edge(i, j) and rng.chance(p)
    ]
    return Graph(n, tree.edges() + extra)


# -- corpus descriptions and streaming -------------------------------------


class CorpusKind(str, Enum):
    ALL_LABELED = "ALL_LABELED"
    ALL_CONNECTED_LABELED = "ALL_CONNECTED_LABELED"
    ALL_CONNECTED_NONISO = "ALL_CONNECTED_NONISO"
    RANDOM_GNP = "RANDOM_GNP"
    RANDOM_UNICYCLIC = "RANDOM_UNICYCLIC"
    RANDOM_TREE_PLUS = "RANDOM_TREE_PLUS"
    LINE_GRAPHS_OF = "LINE_GRAPHS_OF"
    FACTOR_CRITICAL_FILTER = "FACTOR_CRITICAL_FILTER"


_RANDOM_KINDS = {
    CorpusKind.RANDOM_GNP,
    CorpusKind.RANDOM_UNICYCLIC,
    CorpusKind.RANDOM_TREE_PLUS,
}


@dataclass(frozen=True)
class CorpusSpec:
    """What to stream: a family, an inclusive size range, and parameters.

    ``count`` graphs are generated per size for the random kinds and
    ignored for exhaustive ones. ``p`` is the edge probability where the
    family has one.
    """

    kind: CorpusKind
    n_range: tuple[int, int]
    count: int = 0
    seed: int = 0
    p: float = 0.0

    def describe(self) -> dict:
        out: dict = {
            "kind": self.kind.value,
            "n_range": list(self.n_range),
        }
        if self.kind in _RANDOM_KINDS:
            out["count"] = self.count
            out["seed"] = self.seed
        if self.kind in (CorpusKind.RANDOM_GNP, CorpusKind.RANDOM_TREE_PLUS):
            out["p"] = self.p
        return out


def _iter_random(spec: CorpusSpec, n: int) -> Iterator[Graph]:
    for i in range(spec.count):
        gseed = graph_seed(spec.seed, n, i)
        if spec.kind is CorpusKind.RANDOM_UNICYCLIC:
            yield random_unicyclic(n, gseed)
        elif spec.kind is CorpusKind.RANDOM_GNP:
            yield random_gnp(n, spec.p, SplitMix64(gseed))
        else:
            yield random_tree_plus(n, spec.p, SplitMix64(gseed))


def iter_corpus(
    spec: CorpusSpec, *, unsafe_override_guards: bool = False
) -> Iterator[Graph]:
    lo, hi = spec.n_range
    if lo < 0 or hi < lo:
        raise ValueError(f"bad size range {spec.n_range}")
    for n in range(lo, hi + 1):
        if spec.kind is CorpusKind.ALL_LABELED:
            yield from enumerate_labeled_graphs(
                n, unsafe_override_guards=unsafe_override_guards
            )
        elif spec.kind is CorpusKind.ALL_CONNECTED_LABELED:
            yield from enumerate_connected_labeled(
                n, unsafe_override_guards=unsafe_override_guards
            )
        elif spec.kind is CorpusKind.ALL_CONNECTED_NONISO:
            yield from enumerate_connected_noniso(n)
        elif spec.kind in _RANDOM_KINDS:
            yield from _iter_random(spec, n)
        elif spec.kind is CorpusKind.LINE_GRAPHS_OF:
            for g in enumerate_connected_labeled(
                n, unsafe_override_guards=unsafe_override_guards
            ):
                if g.n >= 2:
                    yield line_graph(g)[0]
        elif spec.kind is CorpusKind.FACTOR_CRITICAL_FILTER:
            if n % 2 == 1:
                for g in enumerate_connected_labeled(
                    n, unsafe_override_guards=unsafe_override_guards
                ):
                    if is_factor_critical(g):
                        yield g
        else:
            raise ValueError(f"unknown corpus kind {spec.kind!r}")
