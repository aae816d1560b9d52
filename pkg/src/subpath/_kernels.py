"""numba kernels shared by the counting engine and the batch sweeps."""

from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

# The bundled TBB may be too old; prefer OpenMP to avoid a noisy fallback.
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

WORD = 64

_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_DEBRUIJN_INDEX = np.zeros(64, np.int64)
for _i in range(64):
    _DEBRUIJN_INDEX[(((1 << _i) * 0x03F79D71B4CB0A89) & 0xFFFFFFFFFFFFFFFF) >> 58] = _i


@njit(cache=True, inline="always")
def bit_index(low):
    # low must be a single set bit
    return _DEBRUIJN_INDEX[np.int64((low * _DEBRUIJN) >> np.uint64(58))]


@njit(cache=True, nogil=True)
def walk_bits(s, adj, budget, row):
    """Extend simple paths from ``s``; ``row[l]`` += ordered paths of length l.

    ``adj[v]`` is the neighbour bitmask of ``v`` (n <= 64). Returns the number of
    extension steps; stops early once it exceeds a non-negative ``budget``.
    """
    n = adj.shape[0]
    path = np.empty(n, np.int64)
    cand = np.empty(n, np.uint64)
    one = np.uint64(1)
    zero = np.uint64(0)
    visited = one << np.uint64(s)
    path[0] = s
    cand[0] = adj[s] & ~visited
    row[0] += 1
    depth = 0
    steps = 0
    while depth >= 0:
        c = cand[depth]
        if c == zero:
            visited &= ~(one << np.uint64(path[depth]))
            depth -= 1
            continue
        low = c & (~c + one)
        cand[depth] = c ^ low
        w = bit_index(low)
        steps += 1
        row[depth + 1] += 1
        if budget >= 0 and steps > budget:
            break
        nxt = adj[w] & ~(visited | low)
        if nxt != zero:
            visited |= low
            depth += 1
            path[depth] = w
            cand[depth] = nxt
    return steps


@njit(cache=True, nogil=True)
def walk_flags(s, indptr, indices, budget, row):
    """CSR variant of :func:`walk_bits` with a visited array, for any n."""
    n = indptr.shape[0] - 1
    path = np.empty(n, np.int64)
    ptr = np.empty(n, np.int64)
    visited = np.zeros(n, np.bool_)
    path[0] = s
    ptr[0] = indptr[s]
    visited[s] = True
    row[0] += 1
    depth = 0
    steps = 0
    while depth >= 0:
        v = path[depth]
        p = ptr[depth]
        if p == indptr[v + 1]:
            visited[v] = False
            depth -= 1
            continue
        ptr[depth] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        steps += 1
        row[depth + 1] += 1
        if budget >= 0 and steps > budget:
            break
        visited[w] = True
        depth += 1
        path[depth] = w
        ptr[depth] = indptr[w]
    return steps


@njit(cache=True, nogil=True)
def profile_bits_serial(adj, budget):
    n = adj.shape[0]
    prof = np.zeros((n, n), np.int64)
    steps = np.zeros(n, np.int64)
    for s in range(n):
        steps[s] = walk_bits(s, adj, budget, prof[s])
    return prof, steps


@njit(cache=True, parallel=True)
def profile_bits_parallel(adj, budget):
    n = adj.shape[0]
    prof = np.zeros((n, n), np.int64)
    steps = np.zeros(n, np.int64)
    for s in prange(n):
        steps[s] = walk_bits(s, adj, budget, prof[s])
    return prof, steps


@njit(cache=True, nogil=True)
def profile_flags_serial(indptr, indices, budget):
    n = indptr.shape[0] - 1
    prof = np.zeros((n, n), np.int64)
    steps = np.zeros(n, np.int64)
    for s in range(n):
        steps[s] = walk_flags(s, indptr, indices, budget, prof[s])
    return prof, steps


@njit(cache=True, parallel=True)
def profile_flags_parallel(indptr, indices, budget):
    n = indptr.shape[0] - 1
    prof = np.zeros((n, n), np.int64)
    steps = np.zeros(n, np.int64)
    for s in prange(n):
        steps[s] = walk_flags(s, indptr, indices, budget, prof[s])
    return prof, steps


@njit(cache=True, nogil=True)
def between(x, y, indptr, indices, budget):
    n = indptr.shape[0] - 1
    path = np.empty(n, np.int64)
    ptr = np.empty(n, np.int64)
    visited = np.zeros(n, np.bool_)
    path[0] = x
    ptr[0] = indptr[x]
    visited[x] = True
    depth = 0
    steps = 0
    found = 0
    while depth >= 0:
        v = path[depth]
        p = ptr[depth]
        if p == indptr[v + 1]:
            visited[v] = False
            depth -= 1
            continue
        ptr[depth] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        steps += 1
        if budget >= 0 and steps > budget:
            break
        if w == y:
            found += 1
            continue
        visited[w] = True
        depth += 1
        path[depth] = w
        ptr[depth] = indptr[w]
    return found, steps


@njit(cache=True, nogil=True)
def pn_bits(adj):
    """Subpath number of a graph given as neighbour bitmasks (n <= 64)."""
    n = adj.shape[0]
    path = np.empty(n, np.int64)
    cand = np.empty(n, np.uint64)
    one = np.uint64(1)
    zero = np.uint64(0)
    ordered = 0
    for s in range(n):
        visited = one << np.uint64(s)
        path[0] = s
        cand[0] = adj[s]
        depth = 0
        while depth >= 0:
            c = cand[depth]
            if c == zero:
                visited &= ~(one << np.uint64(path[depth]))
                depth -= 1
                continue
            low = c & (~c + one)
            cand[depth] = c ^ low
            ordered += 1
            w = bit_index(low)
            nxt = adj[w] & ~(visited | low)
            if nxt != zero:
                visited |= low
                depth += 1
                path[depth] = w
                cand[depth] = nxt
    return n + ordered // 2


# -- Pruefer sweeps ------------------------------------------------------------


@njit(cache=True, nogil=True)
def prufer_decode(seq, n, adj, degree):
    """Fill ``adj`` (zeroed bitmasks) with the tree coded by ``seq``."""
    one = np.uint64(1)
    for v in range(n):
        degree[v] = 1
    for x in seq:
        degree[x] += 1
    for x in seq:
        leaf = 0
        while degree[leaf] != 1:
            leaf += 1
        adj[leaf] |= one << np.uint64(x)
        adj[x] |= one << np.uint64(leaf)
        degree[leaf] -= 1
        degree[x] -= 1
    u = -1
    w = -1
    for v in range(n):
        if degree[v] == 1:
            if u < 0:
                u = v
            else:
                w = v
    adj[u] |= one << np.uint64(w)
    adj[w] |= one << np.uint64(u)


@njit(cache=True, nogil=True)
def _seq_from_index(t, n, seq):
    for i in range(seq.shape[0] - 1, -1, -1):
        seq[i] = t % n
        t //= n


@njit(cache=True, parallel=True)
def tree_sweep(n, expected):
    """Count Pruefer-coded trees on n >= 3 vertices whose enumerated subpath
    number differs from ``expected``. Returns (trees, mismatches)."""
    per_first = n ** (n - 3)
    trees = np.zeros(n, np.int64)
    bad = np.zeros(n, np.int64)
    for first in prange(n):
        seq = np.empty(n - 2, np.int64)
        adj = np.zeros(n, np.uint64)
        degree = np.empty(n, np.int64)
        for t in range(per_first):
            _seq_from_index(first * per_first + t, n, seq)
            adj[:] = 0
            prufer_decode(seq, n, adj, degree)
            trees[first] += 1
            if pn_bits(adj) != expected:
                bad[first] += 1
    return trees.sum(), bad.sum()


@njit(cache=True, nogil=True)
def _cycle_profile(adj, n, size, deg, alive, stack):
    # Strip leaves; survivors form the cycle and carry their tree sizes.
    one = np.uint64(1)
    top = 0
    for v in range(n):
        size[v] = 1
        alive[v] = True
        deg[v] = 0
        for w in range(n):
            if adj[v] & (one << np.uint64(w)):
                deg[v] += 1
        if deg[v] == 1:
            stack[top] = v
            top += 1
    live_deg = deg.copy()
    while top > 0:
        top -= 1
        v = stack[top]
        alive[v] = False
        for w in range(n):
            if alive[w] and adj[v] & (one << np.uint64(w)):
                size[w] += size[v]
                live_deg[w] -= 1
                if live_deg[w] == 1:
                    stack[top] = w
                    top += 1
    cycle_len = 0
    deg2_on_cycle = 0
    pairs_within = 0
    for v in range(n):
        if alive[v]:
            cycle_len += 1
            if deg[v] == 2:
                deg2_on_cycle += 1
            pairs_within += size[v] * (size[v] - 1) // 2
    return cycle_len, deg2_on_cycle, pairs_within


@njit(cache=True, parallel=True)
def unicyclic_sweep(n, fixed_edge):
    """Sweep unicyclic graphs built as Pruefer tree plus one non-edge.

    With ``fixed_edge`` only the closing edge {0, 1} is used (trees where 0 and 1
    are non-adjacent); relabelling shows this still reaches every isomorphism
    class. Otherwise every non-edge of every tree is added.

    Returns an int64 vector: graphs, formula mismatches, min, max,
    min attained only by triangles with at least two degree-2 vertices (0/1),
    max attained only by the n-cycle (0/1), smallest and largest value over the
    triangle graphs, smallest and largest value over n-cycles, and the number of
    n-cycles seen.
    """
    per_first = n ** (n - 3)
    big = np.int64(1) << np.int64(62)
    graphs = np.zeros(n, np.int64)
    bad = np.zeros(n, np.int64)
    mn = np.full(n, big)
    mx = np.full(n, -big)
    mn_ok = np.ones(n, np.int64)
    mx_ok = np.ones(n, np.int64)
    tri_lo = np.full(n, big)
    tri_hi = np.full(n, -big)
    cyc_lo = np.full(n, big)
    cyc_hi = np.full(n, -big)
    cycles = np.zeros(n, np.int64)
    one = np.uint64(1)
    total_pairs = n * (n - 1) // 2
    for first in prange(n):
        seq = np.empty(n - 2, np.int64)
        tree = np.zeros(n, np.uint64)
        adj = np.zeros(n, np.uint64)
        degree = np.empty(n, np.int64)
        size = np.empty(n, np.int64)
        deg = np.empty(n, np.int64)
        alive = np.empty(n, np.bool_)
        stack = np.empty(n, np.int64)
        for t in range(per_first):
            _seq_from_index(first * per_first + t, n, seq)
            tree[:] = 0
            prufer_decode(seq, n, tree, degree)
            for x in range(n - 1):
                for y in range(x + 1, n):
                    if fixed_edge and (x != 0 or y != 1):
                        continue
                    if tree[x] & (one << np.uint64(y)):
                        continue
                    adj[:] = tree
                    adj[x] |= one << np.uint64(y)
                    adj[y] |= one << np.uint64(x)
                    value = pn_bits(adj)
                    clen, d2, within = _cycle_profile(adj, n, size, deg, alive, stack)
                    formula = n + 2 * total_pairs - within
                    graphs[first] += 1
                    if formula != value:
                        bad[first] += 1
                    tri = clen == 3 and d2 >= 2
                    cyc = clen == n
                    if value < mn[first]:
                        mn[first] = value
                        mn_ok[first] = 1 if tri else 0
                    elif value == mn[first] and not tri:
                        mn_ok[first] = 0
                    if value > mx[first]:
                        mx[first] = value
                        mx_ok[first] = 1 if cyc else 0
                    elif value == mx[first] and not cyc:
                        mx_ok[first] = 0
                    if tri:
                        tri_lo[first] = min(tri_lo[first], value)
                        tri_hi[first] = max(tri_hi[first], value)
                    if cyc:
                        cycles[first] += 1
                        cyc_lo[first] = min(cyc_lo[first], value)
                        cyc_hi[first] = max(cyc_hi[first], value)
    out = np.zeros(11, np.int64)
    out[0] = graphs.sum()
    out[1] = bad.sum()
    out[2] = mn.min()
    out[3] = mx.max()
    out[4] = 1
    out[5] = 1
    for f in range(n):
        if graphs[f] == 0:
            continue
        if mn[f] == out[2] and mn_ok[f] == 0:
            out[4] = 0
        if mx[f] == out[3] and mx_ok[f] == 0:
            out[5] = 0
    out[6] = tri_lo.min()
    out[7] = tri_hi.max()
    out[8] = cyc_lo.min()
    out[9] = cyc_hi.max()
    out[10] = cycles.sum()
    return out


@njit(cache=True, nogil=True)
def gnp_pn_batch(n, draws, num):
    """Subpath numbers of G(n, p) samples; ``draws[t, e] < num`` keeps edge e
    (edges in lexicographic order)."""
    trials = draws.shape[0]
    out = np.empty(trials, np.int64)
    adj = np.zeros(n, np.uint64)
    one = np.uint64(1)
    for t in range(trials):
        adj[:] = 0
        e = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                if draws[t, e] < num:
                    adj[i] |= one << np.uint64(j)
                    adj[j] |= one << np.uint64(i)
                e += 1
        out[t] = pn_bits(adj)
    return out
