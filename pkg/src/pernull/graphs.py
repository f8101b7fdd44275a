"""Simple undirected graphs: representation, formats, structure utilities.

Vertices are dense integer labels ``0..n-1``. Adjacency is stored as one
Python-int bitmask per vertex, which doubles as the set representation: fixed
width in practice for small graphs, arbitrary width above 62 vertices with no
code change. Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphFormatError, ScaleLimitError
from .limits import GRAPH6_MAX_N

__all__ = [
    "Graph",
    "VertexSet",
    "CycleInfo",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "connected_components",
    "is_connected",
    "induced_subgraph",
    "line_graph",
    "is_unicyclic",
    "find_unique_cycle",
    "bridges",
    "is_two_edge_connected",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "star_graph",
    "empty_graph",
    "petersen_graph",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph.

    ``masks[v]`` is the neighbor bitmask of vertex ``v``; symmetry and
    no-self-loop invariants are enforced at construction.
    """

    __slots__ = ("n", "masks", "_hash")

    n: int
    masks: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from per-vertex neighbor bitmasks (validated)."""
        masks = tuple(masks)
        n = len(masks)
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "masks", masks)
        object.__setattr__(g, "_hash", None)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"mask of vertex {v} references vertices >= n")
            if (m >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(m):
                if not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def _from_masks_trusted(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # Fast path for internal call sites that construct valid masks.
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "masks", masks)
        object.__setattr__(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.masks))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbor list of ``v``."""
        return list(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        out = []
        for u in range(self.n):
            m = self.masks[u] >> (u + 1)
            for d in iter_bits(m):
                out.append((u, u + 1 + d))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph on ``n`` vertices."""

    members: frozenset[int]
    n: int

    def __post_init__(self):
        for v in self.members:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} outside universe 0..{self.n - 1}")

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "VertexSet":
        return cls(frozenset(iter_bits(mask)), n)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self):
        return iter(self.sorted())


@dataclass(frozen=True)
class CycleInfo:
    """A cycle given as its vertex sequence (consecutive vertices adjacent)."""

    vertices: tuple[int, ...]
    length: int
    parity: str  # "odd" | "even"

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "CycleInfo":
        vs = tuple(vertices)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        return cls(vs, len(vs), "odd" if len(vs) % 2 else "even")

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"


# -- graph6 ---------------------------------------------------------------
#
# Standard encoding: every byte is value+63 in the printable range 63..126.
# The size header N(n) is one byte for n <= 62, '~' + 3 bytes for n <= 2^18-1,
# '~~' + 6 bytes above. The body R(x) packs the upper adjacency triangle in
# column-major order -- bit (i, j), i < j, appears at position j(j-1)/2 + i --
# six bits per byte, most significant bit first, zero-padded.


def _g6_sequence_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a :class:`Graph`."""
    s = text.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("graph6 must be printable ASCII", offset=exc.start) from None
    if not data:
        raise GraphFormatError("empty graph6 string", offset=0)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte value {byte} outside graph6 range 63..126", offset=pos)

    # Size header.
    if data[0] != 126:
        n = data[0] - 63
        body = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphFormatError("truncated 3-byte size header", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise GraphFormatError("non-canonical multi-byte size header", offset=0)
        body = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated 6-byte size header", offset=len(data))
        n = 0
        for k in range(2, 8):
            n = (n << 6) | (data[k] - 63)
        if n < (1 << 18):
            raise GraphFormatError("non-canonical multi-byte size header", offset=0)
        body = 8

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - body
    if have < need:
        raise GraphFormatError(
            f"adjacency data truncated: need {need} bytes, have {have}", offset=len(data)
        )
    if have > need:
        raise GraphFormatError("trailing garbage after adjacency data", offset=body + need)

    masks = [0] * n
    pairs = _g6_sequence_pairs(n)
    pos = 0
    for k in range(need):
        group = data[body + k] - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (group >> shift) & 1
            if pos < nbits:
                if bit:
                    i, j = next(pairs)
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                else:
                    next(pairs)
                pos += 1
            elif bit:
                raise GraphFormatError("nonzero padding bit", offset=body + k)
    return Graph._from_masks_trusted(n, tuple(masks))


def to_graph6(g: Graph) -> str:
    """Encode as a canonical single-line graph6 string (``n <= 62``)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ScaleLimitError(f"graph6 single-byte size encoding supports n <= {GRAPH6_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    val = 0
    for i, j in _g6_sequence_pairs(n):
        val = (val << 1) | ((g.masks[i] >> j) & 1)
    pad = (-nbits) % 6
    val <<= pad
    nbytes = (nbits + 5) // 6
    out = bytearray([63 + n])
    for k in range(nbytes):
        out.append(63 + ((val >> (6 * (nbytes - 1 - k))) & 63))
    return out.decode("ascii")


# -- edge-list format -----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the human-written fixture format: first line ``n``, then ``u v`` lines.

    Duplicate edges are collapsed; self-loops and out-of-range labels are
    rejected with the offending line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphFormatError("expected a single vertex-count token", line=lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphFormatError(f"vertex count {tokens[0]!r} is not an integer", line=lineno) from None
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", line=lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {len(tokens)} tokens", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex label in {line!r}", line=lineno) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex label out of range 0..{n - 1}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing vertex count", line=1)
    return Graph(n, edges)


# -- structure ------------------------------------------------------------


def component_masks(masks: tuple[int, ...], sub: int) -> list[int]:
    """Connected components of the subgraph induced by bitmask ``sub``.

    Returned as bitmasks ordered by smallest member.
    """
    comps = []
    remaining = sub
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & sub & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition of the vertices into maximal connected sets."""
    return [VertexSet.from_mask(m, g.n) for m in component_masks(g.masks, g.full_mask)]


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component (so false for n=0)."""
    return len(component_masks(g.masks, g.full_mask)) == 1


def induced_subgraph(g: Graph, t: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``t``, relabeled to ``0..|t|-1``; also the old-to-new map."""
    members = sorted(t.members if isinstance(t, VertexSet) else set(t))
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    relabel = {old: new for new, old in enumerate(members)}
    sub_masks = []
    tmask = 0
    for v in members:
        tmask |= 1 << v
    for v in members:
        m = 0
        for u in iter_bits(g.masks[v] & tmask):
            m |= 1 << relabel[u]
        sub_masks.append(m)
    return Graph._from_masks_trusted(len(members), tuple(sub_masks)), relabel


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` plus the map from new vertices to original edges.

    Vertex ``i`` of the line graph is ``edges[i]`` in lexicographic order; two
    vertices are adjacent iff the edges share an endpoint.
    """
    edge_list = g.edges()
    m = len(edge_list)
    masks = [0] * m
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edge_list):
        incident[u].append(idx)
        incident[v].append(idx)
    for idxs in incident:
        for a_pos, a in enumerate(idxs):
            for b in idxs[a_pos + 1:]:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return Graph._from_masks_trusted(m, tuple(masks)), edge_list


def is_unicyclic(g: Graph) -> bool:
    """True iff ``g`` is connected with equally many vertices and edges."""
    return is_connected(g) and g.edge_count() == g.n


def find_unique_cycle(g: Graph) -> CycleInfo:
    """The single cycle of a unicyclic graph, as an ordered vertex list.

    Found by peeling degree-1 vertices; the surviving 2-core is the cycle. The
    walk starts at the smallest cycle vertex and moves to its smaller neighbor
    first, so the output is deterministic.
    """
    if not is_unicyclic(g):
        raise ValueError("find_unique_cycle requires a unicyclic graph")
    alive = g.full_mask
    degs = [g.degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if degs[v] == 1]
    while queue:
        v = queue.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.masks[v] & alive):
            degs[u] -= 1
            if degs[u] == 1:
                queue.append(u)
    start = (alive & -alive).bit_length() - 1
    first = min(iter_bits(g.masks[start] & alive))
    order = [start, first]
    seen = (1 << start) | (1 << first)
    cur = first
    while True:
        nxt_mask = g.masks[cur] & alive & ~seen
        if not nxt_mask:
            break
        cur = (nxt_mask & -nxt_mask).bit_length() - 1
        order.append(cur)
        seen |= 1 << cur
    return CycleInfo.from_vertices(order)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """All bridges (cut edges), sorted lexicographically."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # Iterative DFS; stack holds (vertex, parent, neighbor iterator).
        stack = [(root, -1, iter_bits(g.masks[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter_bits(g.masks[u])))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append((min(v, parent), max(v, parent)))
    return sorted(out)


def is_two_edge_connected(g: Graph) -> bool:
    """Connected, at least 2 vertices, and bridgeless."""
    return g.n >= 2 and is_connected(g) and not bridges(g)


# -- small constructors ---------------------------------------------------


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
