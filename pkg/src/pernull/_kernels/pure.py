"""Pure-Python kernels.

Reference implementations of the hot inner loops. The compiled extension in
``_core`` ports these one-to-one (same scan orders, same outputs); the
dispatcher in ``__init__`` picks a lane per call. Everything here works on
per-vertex neighbor bitmasks and an optional ``sub`` bitmask restricting the
operation to an induced subgraph, with no width limit (Python ints).
"""

from __future__ import annotations

from typing import Sequence


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- maximum matching (Edmonds blossom, unweighted) -----------------------
#
# Classic O(V^3) formulation: repeated BFS from each exposed vertex with
# blossom contraction tracked through a `base` array. Vertices and neighbor
# bits are always scanned in ascending order and the BFS queue is FIFO, so
# the returned matching is deterministic.


def _mark_path(mate, base, parent, in_blossom, v, b, child):
    while base[v] != b:
        in_blossom[base[v]] = True
        in_blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _lca(mate, base, parent, a, b):
    seen = set()
    v = a
    while True:
        v = base[v]
        seen.add(v)
        if mate[v] == -1:
            break
        v = parent[mate[v]]
    v = b
    while True:
        v = base[v]
        if v in seen:
            return v
        v = parent[mate[v]]


def _try_augment(masks, sub, mate, root, n):
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in _iter_bits(masks[v] & sub):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur_base = _lca(mate, base, parent, v, to)
                in_blossom = [False] * n
                _mark_path(mate, base, parent, in_blossom, v, cur_base, to)
                _mark_path(mate, base, parent, in_blossom, to, cur_base, v)
                for i in _iter_bits(sub):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[pv] = to
                        mate[to] = pv
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def matching_mates(masks: Sequence[int], n: int, sub: int | None = None) -> list[int]:
    """Mate array of a maximum matching of the subgraph induced by ``sub``.

    ``mate[v] == -1`` for unmatched vertices and vertices outside ``sub``.
    """
    if sub is None:
        sub = (1 << n) - 1
    mate = [-1] * n
    for v in _iter_bits(sub):
        if mate[v] == -1:
            for u in _iter_bits(masks[v] & sub):
                if mate[u] == -1:
                    mate[u] = v
                    mate[v] = u
                    break
    for root in _iter_bits(sub):
        if mate[root] == -1:
            _try_augment(masks, sub, mate, root, n)
    return mate


def matching_size(masks: Sequence[int], n: int, sub: int | None = None) -> int:
    """Matching number of the subgraph induced by ``sub``."""
    mate = matching_mates(masks, n, sub)
    return sum(1 for v in mate if v != -1) // 2


# -- exact permanent (Ryser / Gray code) ----------------------------------


def ryser_permanent(rows: Sequence[Sequence[int]], n: int) -> int:
    """Exact permanent of an n-by-n integer matrix.

    Ryser's inclusion-exclusion over column subsets, walked in Gray-code
    order so each step updates the row sums by a single column.
    """
    if n == 0:
        return 1
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    odd = False
    prev_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        diff = gray ^ prev_gray
        j = diff.bit_length() - 1
        col = cols[j]
        if gray & diff:
            for i in range(n):
                sums[i] += col[i]
        else:
            for i in range(n):
                sums[i] -= col[i]
        odd = not odd
        prev_gray = gray
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        total -= prod if odd else -prod
    return -total if n % 2 else total


# -- Sachs-subgraph enumeration -------------------------------------------
#
# A Sachs subgraph is a vertex-disjoint union of single edges and cycles.
# Enumeration is by components in increasing order of their minimum vertex:
# at each step the next component either is an edge {v, w} with w > v, or a
# cycle whose minimum vertex is v, generated as a path from v through
# vertices > v and closed back to v, keeping only the orientation whose
# second vertex is smaller than its last. Each subgraph is produced exactly
# once, and every intermediate state is itself a valid Sachs subgraph.


def sachs_counts(masks: Sequence[int], n: int) -> list[int]:
    """``counts[k]`` = sum of ``2**cycles(H)`` over Sachs subgraphs on k vertices."""
    counts = [0] * (n + 1)
    counts[0] = 1

    def close_or_extend(v, above, uncovered, k, weight, cur, visited, length, first):
        for w in _iter_bits(masks[cur] & above & ~visited):
            nvis = visited | (1 << w)
            if length >= 2 and (masks[w] >> v) & 1 and first < w:
                ncov = uncovered & ~nvis
                counts[k + length + 1] += 2 * weight
                place_next(v + 1, ncov, k + length + 1, 2 * weight)
            close_or_extend(v, above, uncovered, k, weight, w, nvis, length + 1,
                            w if length == 1 else first)

    def place_next(start, uncovered, k, weight):
        cand = uncovered >> start << start
        for v in _iter_bits(cand):
            above = uncovered >> (v + 1) << (v + 1)
            for w in _iter_bits(masks[v] & above):
                ncov = uncovered & ~(1 << v) & ~(1 << w)
                counts[k + 2] += weight
                place_next(v + 1, ncov, k + 2, weight)
            close_or_extend(v, above, uncovered, k, weight, v, 1 << v, 1, n)

    place_next(0, (1 << n) - 1, 0, 1)
    return counts


def max_sachs_order(masks: Sequence[int], n: int) -> int:
    """Largest vertex count of a Sachs subgraph (branch and bound)."""
    best = 0

    def close_or_extend(v, above, uncovered, k, cur, visited, length, first):
        nonlocal best
        for w in _iter_bits(masks[cur] & above & ~visited):
            nvis = visited | (1 << w)
            if length >= 2 and (masks[w] >> v) & 1 and first < w:
                if place_next(v + 1, uncovered & ~nvis, k + length + 1):
                    return True
            if close_or_extend(v, above, uncovered, k, w, nvis, length + 1,
                               w if length == 1 else first):
                return True
        return False

    def place_next(start, uncovered, k):
        nonlocal best
        if k > best:
            best = k
            if best == n:
                return True
        cand = uncovered >> start << start
        for v in _iter_bits(cand):
            rest = uncovered >> v << v
            if k + rest.bit_count() <= best:
                break
            above = uncovered >> (v + 1) << (v + 1)
            for w in _iter_bits(masks[v] & above):
                if place_next(v + 1, uncovered & ~(1 << v) & ~(1 << w), k + 2):
                    return True
            if close_or_extend(v, above, uncovered, k, v, 1 << v, 1, n):
                return True
        return False

    place_next(0, (1 << n) - 1, 0)
    return best


# -- exhaustive maximum-matching scan -------------------------------------


def mstat_scan(
    masks: Sequence[int],
    n: int,
    singles_mask: int,
    f_masks: Sequence[int],
) -> tuple[int, int, int, int, int]:
    """Enumerate every maximum matching and aggregate coverage statistics.

    Returns ``(total, best_singles, f_min, f_max, uncovered_union)`` where
    ``total`` counts maximum matchings, ``best_singles`` is the largest
    number of ``singles_mask`` vertices covered by any of them, ``f_min`` /
    ``f_max`` bound -- over the matchings attaining ``best_singles`` -- the
    number of ``f_masks`` components with exactly one uncovered vertex, and
    ``uncovered_union`` is the union of uncovered vertices over all maximum
    matchings.

    The enumeration walks vertices in ascending order, branching on "lowest
    available vertex stays exposed" versus "is matched to each neighbor",
    pruning branches that cannot complete to a maximum matching (checked by
    matching numbers of residual induced subgraphs, memoized per submask).
    So each leaf is a distinct maximum matching and every maximum matching
    appears exactly once.
    """
    full = (1 << n) - 1
    memo: dict[int, int] = {}

    def nu_of(sub: int) -> int:
        v = memo.get(sub)
        if v is None:
            v = matching_size(masks, n, sub)
            memo[sub] = v
        return v

    target = nu_of(full)
    total = 0
    uncovered_union = 0
    best_singles = -1
    f_min = 0
    f_max = 0

    def leaf(covered: int):
        nonlocal total, uncovered_union, best_singles, f_min, f_max
        total += 1
        uncovered_union |= full & ~covered
        singles = (singles_mask & covered).bit_count()
        if singles < best_singles:
            return
        fcnt = 0
        for fm in f_masks:
            if (fm & ~covered).bit_count() == 1:
                fcnt += 1
        if singles > best_singles:
            best_singles = singles
            f_min = f_max = fcnt
        else:
            f_min = min(f_min, fcnt)
            f_max = max(f_max, fcnt)

    def rec(avail: int, size: int, covered: int):
        if avail == 0:
            leaf(covered)
            return
        v_bit = avail & -avail
        v = v_bit.bit_length() - 1
        rest = avail ^ v_bit
        if nu_of(rest) == target - size:
            rec(rest, size, covered)
        for w in _iter_bits(masks[v] & avail):
            pair = v_bit | (1 << w)
            rest2 = avail & ~pair
            if nu_of(rest2) == target - size - 1:
                rec(rest2, size + 1, covered | pair)

    rec(full, 0, 0)
    return total, best_singles, f_min, f_max, uncovered_union


# -- canonical form -------------------------------------------------------


def canon_form(masks: Sequence[int], n: int) -> int:
    """Canonical adjacency bitstring: the lexicographic maximum, over all
    vertex orderings, of the upper triangle packed in column-major order.

    Isomorphic graphs (and only those) share this value. Exact branch and
    bound over orderings with prefix pruning; exponential in the worst case
    but fast at the small orders the enumeration harness uses.
    """
    if n <= 1:
        return 0
    total_bits = n * (n - 1) // 2
    best = -1
    perm = [0] * n

    def rec(pos: int, used: int, prefix: int, bits_done: int):
        nonlocal best
        if pos == n:
            if prefix > best:
                best = prefix
            return
        for v in range(n):
            if (used >> v) & 1:
                continue
            chunk = 0
            mv = masks[v]
            for j in range(pos):
                chunk = (chunk << 1) | ((mv >> perm[j]) & 1)
            nprefix = (prefix << pos) | chunk
            nbits = bits_done + pos
            if best >= 0 and nprefix < (best >> (total_bits - nbits)):
                continue
            perm[pos] = v
            rec(pos + 1, used | (1 << v), nprefix, nbits)

    rec(0, 0, 0, 0)
    return best
