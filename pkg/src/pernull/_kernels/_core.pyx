# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels.

One-to-one port of ``pure.py`` to C-width arithmetic: vertex sets are uint64
bitmasks (so n <= 62 after the two graph6-style spare bits; callers enforce
tighter bounds per kernel), counters that can exceed 64 bits use __int128
with overflow bounds checked by the dispatcher before it picks this lane.
Scan orders match the pure lane exactly so both produce identical output.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    ctypedef long long int128 "__int128"
    ctypedef unsigned long long uint128 "unsigned __int128"
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef object _int128_to_py(int128 x):
    cdef bint neg = x < 0
    cdef uint128 ux
    if neg:
        ux = <uint128> (-x)
    else:
        ux = <uint128> x
    cdef unsigned long long hi = <unsigned long long> (ux >> 64)
    cdef unsigned long long lo = <unsigned long long> ux
    val = ((<object> hi) << 64) | (<object> lo)
    return -val if neg else val


def _selftest_int128():
    cdef int128 x = 1
    cdef int i
    for i in range(100):
        x *= 2
    return _int128_to_py(x - 7)


cdef int _fill_masks(object masks, int n, unsigned long long *out) except -1:
    cdef int i
    if n > 62:
        raise ValueError("compiled kernels support at most 62 vertices")
    for i in range(n):
        out[i] = masks[i]
    return 0


# -- maximum matching -----------------------------------------------------


cdef void _mark_path_c(int *mate, int *base, int *parent,
                       unsigned long long *blossom, int v, int b,
                       int child) noexcept nogil:
    while base[v] != b:
        blossom[0] |= 1ULL << base[v]
        blossom[0] |= 1ULL << base[mate[v]]
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


cdef int _lca_c(int *mate, int *base, int *parent, int a, int b) noexcept nogil:
    cdef unsigned long long seen = 0
    cdef int v = a
    while True:
        v = base[v]
        seen |= 1ULL << v
        if mate[v] == -1:
            break
        v = parent[mate[v]]
    v = b
    while True:
        v = base[v]
        if (seen >> v) & 1:
            return v
        v = parent[mate[v]]


cdef bint _try_augment_c(unsigned long long *masks, unsigned long long sub,
                         int *mate, int root, int n) noexcept nogil:
    cdef int parent[64]
    cdef int base[64]
    cdef int queue[132]
    cdef unsigned long long used = 0
    cdef unsigned long long nb, blossom, rem
    cdef int head = 0, tail = 0
    cdef int i, v, to, pv, nxt, cur_base
    for i in range(n):
        parent[i] = -1
        base[i] = i
    used |= 1ULL << root
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        nb = masks[v] & sub
        while nb:
            to = __builtin_ctzll(nb)
            nb &= nb - 1
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur_base = _lca_c(mate, base, parent, v, to)
                blossom = 0
                _mark_path_c(mate, base, parent, &blossom, v, cur_base, to)
                _mark_path_c(mate, base, parent, &blossom, to, cur_base, v)
                rem = sub
                while rem:
                    i = __builtin_ctzll(rem)
                    rem &= rem - 1
                    if (blossom >> base[i]) & 1:
                        base[i] = cur_base
                        if not (used >> i) & 1:
                            used |= 1ULL << i
                            queue[tail] = i
                            tail += 1
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
                used |= 1ULL << mate[to]
                queue[tail] = mate[to]
                tail += 1
    return False


cdef int _matching_c(unsigned long long *masks, int n, unsigned long long sub,
                     int *mate) noexcept nogil:
    cdef int i, v, u, size = 0
    cdef unsigned long long rem, nb
    for i in range(n):
        mate[i] = -1
    rem = sub
    while rem:
        v = __builtin_ctzll(rem)
        rem &= rem - 1
        if mate[v] == -1:
            nb = masks[v] & sub
            while nb:
                u = __builtin_ctzll(nb)
                nb &= nb - 1
                if mate[u] == -1:
                    mate[u] = v
                    mate[v] = u
                    break
    rem = sub
    while rem:
        v = __builtin_ctzll(rem)
        rem &= rem - 1
        if mate[v] == -1:
            _try_augment_c(masks, sub, mate, v, n)
    rem = sub
    while rem:
        v = __builtin_ctzll(rem)
        rem &= rem - 1
        if mate[v] != -1:
            size += 1
    return size // 2


def matching_mates(masks, int n, sub=None):
    cdef unsigned long long cmasks[64]
    cdef int mate[64]
    cdef unsigned long long csub
    cdef int i
    _fill_masks(masks, n, cmasks)
    csub = (1ULL << n) - 1 if sub is None else sub
    _matching_c(cmasks, n, csub, mate)
    return [mate[i] for i in range(n)]


def matching_size(masks, int n, sub=None):
    cdef unsigned long long cmasks[64]
    cdef int mate[64]
    cdef unsigned long long csub
    _fill_masks(masks, n, cmasks)
    csub = (1ULL << n) - 1 if sub is None else sub
    return _matching_c(cmasks, n, csub, mate)


# -- exact permanent (Ryser / Gray code) ----------------------------------


def ryser_permanent(rows, int n):
    """Permanent of an n-by-n int64 matrix, n <= 24.

    The dispatcher guarantees row sums and the final accumulator stay inside
    int64 / int128; no overflow checks happen here.
    """
    cdef long long cols[24][24]
    cdef long long sums[24]
    cdef int128 total = 0, prod
    cdef unsigned long long k, kmax, gray, prev = 0, diff
    cdef int i, j, odd = 0
    if n == 0:
        return 1
    if n > 24:
        raise ValueError("compiled permanent limited to n <= 24")
    for i in range(n):
        row = rows[i]
        for j in range(n):
            cols[j][i] = row[j]
        sums[i] = 0
    kmax = 1ULL << n
    k = 1
    while k < kmax:
        gray = k ^ (k >> 1)
        diff = gray ^ prev
        j = __builtin_ctzll(diff)
        if gray & diff:
            for i in range(n):
                sums[i] += cols[j][i]
        else:
            for i in range(n):
                sums[i] -= cols[j][i]
        odd ^= 1
        prev = gray
        prod = 1
        for i in range(n):
            if sums[i] == 0:
                prod = 0
                break
            prod = prod * sums[i]
        if odd:
            total -= prod
        else:
            total += prod
        k += 1
    if n & 1:
        total = -total
    return _int128_to_py(total)


# -- Sachs-subgraph enumeration -------------------------------------------


cdef void _sachs_cycle(unsigned long long *masks, int v,
                       unsigned long long above, unsigned long long uncovered,
                       int k, int128 weight, int128 *counts, int cur,
                       unsigned long long visited, int length,
                       int first) noexcept nogil:
    cdef unsigned long long nb = masks[cur] & above & ~visited
    cdef unsigned long long nvis
    cdef int w
    while nb:
        w = __builtin_ctzll(nb)
        nb &= nb - 1
        nvis = visited | (1ULL << w)
        if length >= 2 and (masks[w] >> v) & 1 and first < w:
            counts[k + length + 1] += 2 * weight
            _sachs_place(masks, v + 1, uncovered & ~nvis, k + length + 1,
                         2 * weight, counts)
        _sachs_cycle(masks, v, above, uncovered, k, weight, counts, w, nvis,
                     length + 1, w if length == 1 else first)


cdef void _sachs_place(unsigned long long *masks, int start,
                       unsigned long long uncovered, int k, int128 weight,
                       int128 *counts) noexcept nogil:
    cdef unsigned long long cand = uncovered >> start << start
    cdef unsigned long long above, ew, ncov
    cdef int v, w
    while cand:
        v = __builtin_ctzll(cand)
        cand &= cand - 1
        above = uncovered >> (v + 1) << (v + 1)
        ew = masks[v] & above
        while ew:
            w = __builtin_ctzll(ew)
            ew &= ew - 1
            ncov = uncovered & ~(1ULL << v) & ~(1ULL << w)
            counts[k + 2] += weight
            _sachs_place(masks, v + 1, ncov, k + 2, weight, counts)
        _sachs_cycle(masks, v, above, uncovered, k, weight, counts, v,
                     1ULL << v, 1, 64)


def sachs_counts(masks, int n):
    cdef unsigned long long cmasks[64]
    cdef int128 counts[64]
    cdef int i
    _fill_masks(masks, n, cmasks)
    for i in range(n + 1):
        counts[i] = 0
    counts[0] = 1
    _sachs_place(cmasks, 0, (1ULL << n) - 1, 0, 1, counts)
    return [_int128_to_py(counts[i]) for i in range(n + 1)]


cdef bint _order_cycle(unsigned long long *masks, int v,
                       unsigned long long above, unsigned long long uncovered,
                       int k, int *best, int n, int cur,
                       unsigned long long visited, int length,
                       int first) noexcept nogil:
    cdef unsigned long long nb = masks[cur] & above & ~visited
    cdef unsigned long long nvis
    cdef int w
    while nb:
        w = __builtin_ctzll(nb)
        nb &= nb - 1
        nvis = visited | (1ULL << w)
        if length >= 2 and (masks[w] >> v) & 1 and first < w:
            if _order_place(masks, v + 1, uncovered & ~nvis, k + length + 1,
                            best, n):
                return True
        if _order_cycle(masks, v, above, uncovered, k, best, n, w, nvis,
                        length + 1, w if length == 1 else first):
            return True
    return False


cdef bint _order_place(unsigned long long *masks, int start,
                       unsigned long long uncovered, int k, int *best,
                       int n) noexcept nogil:
    cdef unsigned long long cand, above, ew, rest
    cdef int v, w
    if k > best[0]:
        best[0] = k
        if k == n:
            return True
    cand = uncovered >> start << start
    while cand:
        v = __builtin_ctzll(cand)
        cand &= cand - 1
        rest = uncovered >> v << v
        if k + __builtin_popcountll(rest) <= best[0]:
            break
        above = uncovered >> (v + 1) << (v + 1)
        ew = masks[v] & above
        while ew:
            w = __builtin_ctzll(ew)
            ew &= ew - 1
            if _order_place(masks, v + 1,
                            uncovered & ~(1ULL << v) & ~(1ULL << w),
                            k + 2, best, n):
                return True
        if _order_cycle(masks, v, above, uncovered, k, best, n, v,
                        1ULL << v, 1, 64):
            return True
    return False


def max_sachs_order(masks, int n):
    cdef unsigned long long cmasks[64]
    cdef int best = 0
    _fill_masks(masks, n, cmasks)
    _order_place(cmasks, 0, (1ULL << n) - 1, 0, &best, n)
    return best


# -- exhaustive maximum-matching scan -------------------------------------


cdef struct MStat:
    unsigned long long masks[64]
    unsigned long long f_masks[32]
    unsigned long long singles_mask
    unsigned long long full
    unsigned long long uncovered_union
    long long total
    int n
    int nf
    int target
    int best_singles
    int f_min
    int f_max
    signed char *memo


cdef int _nu_memo(MStat *st, unsigned long long sub) noexcept nogil:
    cdef signed char c = st.memo[sub]
    cdef int mate[64]
    cdef int r
    if c >= 0:
        return c
    r = _matching_c(st.masks, st.n, sub, mate)
    st.memo[sub] = <signed char> r
    return r


cdef void _mstat_leaf(MStat *st, unsigned long long covered) noexcept nogil:
    cdef int singles, fcnt, i
    st.total += 1
    st.uncovered_union |= st.full & ~covered
    singles = __builtin_popcountll(st.singles_mask & covered)
    if singles < st.best_singles:
        return
    fcnt = 0
    for i in range(st.nf):
        if __builtin_popcountll(st.f_masks[i] & ~covered) == 1:
            fcnt += 1
    if singles > st.best_singles:
        st.best_singles = singles
        st.f_min = fcnt
        st.f_max = fcnt
    else:
        if fcnt < st.f_min:
            st.f_min = fcnt
        if fcnt > st.f_max:
            st.f_max = fcnt


cdef void _mstat_rec(MStat *st, unsigned long long avail, int size,
                     unsigned long long covered) noexcept nogil:
    cdef unsigned long long v_bit, rest, nb, pair, rest2
    cdef int v, w
    if avail == 0:
        _mstat_leaf(st, covered)
        return
    v_bit = avail & (0 - avail)
    v = __builtin_ctzll(avail)
    rest = avail ^ v_bit
    if _nu_memo(st, rest) == st.target - size:
        _mstat_rec(st, rest, size, covered)
    nb = st.masks[v] & avail
    while nb:
        w = __builtin_ctzll(nb)
        nb &= nb - 1
        pair = v_bit | (1ULL << w)
        rest2 = avail & ~pair
        if _nu_memo(st, rest2) == st.target - size - 1:
            _mstat_rec(st, rest2, size + 1, covered | pair)


def mstat_scan(masks, int n, singles_mask, f_masks):
    cdef MStat st
    cdef int i
    cdef size_t memo_bytes
    if n > 20:
        raise ValueError("compiled matching scan limited to n <= 20")
    if len(f_masks) > 32:
        raise ValueError("too many component masks")
    _fill_masks(masks, n, st.masks)
    st.singles_mask = singles_mask
    st.full = (1ULL << n) - 1
    st.uncovered_union = 0
    st.total = 0
    st.n = n
    st.nf = len(f_masks)
    for i in range(st.nf):
        st.f_masks[i] = f_masks[i]
    st.best_singles = -1
    st.f_min = 0
    st.f_max = 0
    memo_bytes = (<size_t> 1) << n
    st.memo = <signed char *> malloc(memo_bytes)
    if st.memo == NULL:
        raise MemoryError()
    try:
        memset(st.memo, 0xFF, memo_bytes)
        st.target = _nu_memo(&st, st.full)
        _mstat_rec(&st, st.full, 0, 0)
    finally:
        free(st.memo)
    return (st.total, st.best_singles, st.f_min, st.f_max,
            <object> st.uncovered_union)


# -- canonical form -------------------------------------------------------


cdef void _canon_rec(unsigned long long *masks, int n, int total_bits,
                     int pos, unsigned long long used,
                     unsigned long long prefix, int bits_done,
                     unsigned long long *best, bint *have_best,
                     int *perm) noexcept nogil:
    cdef unsigned long long chunk, nprefix, mv
    cdef int v, j, nbits
    if pos == n:
        if not have_best[0] or prefix > best[0]:
            best[0] = prefix
            have_best[0] = True
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
        if have_best[0] and nprefix < (best[0] >> (total_bits - nbits)):
            continue
        perm[pos] = v
        _canon_rec(masks, n, total_bits, pos + 1, used | (1ULL << v),
                   nprefix, nbits, best, have_best, perm)


def canon_form(masks, int n):
    cdef unsigned long long cmasks[64]
    cdef unsigned long long best = 0
    cdef bint have_best = False
    cdef int perm[12]
    if n <= 1:
        return 0
    if n > 11:
        raise ValueError("compiled canonical form limited to n <= 11")
    _fill_masks(masks, n, cmasks)
    _canon_rec(cmasks, n, n * (n - 1) // 2, 0, 0, 0, 0, &best, &have_best,
               perm)
    return best
