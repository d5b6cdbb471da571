"""Compiled inner loops for the brute-force oracle.

Everything here works on uint64 bitsets, so both the facets of K_m^d and
the faces of K_m^{d-1} must number at most 64 (m <= 7 for d = 2, 3).
"""

from __future__ import annotations

import numba as nb
import numpy as np

_ONE = np.uint64(1)


@nb.njit(cache=True)
def _lowbit_index(x):
    i = 0
    while (x >> np.uint64(i)) & _ONE == 0:
        i += 1
    return i


@nb.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - _ONE
        c += 1
    return c


@nb.njit(cache=True)
def census_subtree(bvec, prefix_len, prefix_mask, min_size, key_mask, counts, node_budget):
    """Count acyclic facet sets of size >= ``min_size`` below one search prefix.

    The first ``prefix_len`` inclusion decisions are fixed by ``prefix_mask``
    (bit i set = facet i included).  Sets of size ``min_size + j`` are tallied
    in ``counts[j, boundary & key_mask]``.

    Returns ``(nodes, finished)``; ``finished`` is False when the node budget
    ran out first, in which case the counts are partial.
    """
    nf = bvec.shape[0]
    basis = np.zeros(64, dtype=np.uint64)
    pivots = np.zeros(65, dtype=np.int64)
    chosen = np.zeros(65, dtype=np.int64)
    bnd = np.zeros(66, dtype=np.uint64)
    nxt = np.zeros(66, dtype=np.int64)
    nodes = 0
    size = 0
    # replay the prefix; an included facet that closes a cycle kills the subtree
    for i in range(prefix_len):
        if (prefix_mask >> np.uint64(i)) & _ONE:
            v = bvec[i]
            p = 0
            while v != 0:
                p = _lowbit_index(v)
                if basis[p] == 0:
                    break
                v ^= basis[p]
            if v == 0:
                return 0, True
            basis[p] = v
            pivots[size] = p
            chosen[size] = i
            bnd[size + 1] = bnd[size] ^ bvec[i]
            size += 1
    floor = size
    if size >= min_size and prefix_len == nf:
        counts[size - min_size, np.int64(bnd[size] & key_mask)] += 1
        return 1, True
    if size >= min_size:
        counts[size - min_size, np.int64(bnd[size] & key_mask)] += 1
    nxt[size] = prefix_len
    while True:
        i = nxt[size]
        if i >= nf or size + (nf - i) < min_size:
            if size == floor:
                break
            size -= 1
            basis[pivots[size]] = 0
            nxt[size] = chosen[size] + 1
            continue
        nodes += 1
        if nodes > node_budget:
            return nodes, False
        v = bvec[i]
        p = 0
        while v != 0:
            p = _lowbit_index(v)
            if basis[p] == 0:
                break
            v ^= basis[p]
        if v == 0:
            nxt[size] = i + 1
            continue
        basis[p] = v
        pivots[size] = p
        chosen[size] = i
        bnd[size + 1] = bnd[size] ^ bvec[i]
        size += 1
        nxt[size] = i + 1
        if size >= min_size:
            counts[size - min_size, np.int64(bnd[size] & key_mask)] += 1
    return nodes, True


@nb.njit(cache=True)
def _acyclic(fill, bvec):
    basis = np.zeros(64, dtype=np.uint64)
    x = fill
    while x:
        i = _lowbit_index(x)
        x &= x - _ONE
        v = bvec[i]
        while v != 0:
            p = _lowbit_index(v)
            if basis[p] == 0:
                basis[p] = v
                break
            v ^= basis[p]
        if v == 0:
            return False
    return True


@nb.njit(cache=True)
def coset_search(start, cycle_basis, bvec, max_rank, min_size, limit, out, out_count):
    """Scan every filling ``start ^ span(cycle_basis)`` in Gray-code order.

    Acyclic fillings of size ``s >= min_size`` are stored in
    ``out[max_rank - s, :]`` (at most ``limit`` per size; ``out_count`` holds
    the totals).  Stops early once ``limit`` fillings of size ``max_rank``
    are known, since nothing can beat those.
    """
    k = cycle_basis.shape[0]
    fill = start
    total = np.int64(1) << np.int64(k)
    for step in range(total):
        if step > 0:
            fill ^= cycle_basis[_lowbit_index(np.uint64(step))]
        s = _popcount(fill)
        if s >= min_size and s <= max_rank:
            if _acyclic(fill, bvec):
                j = max_rank - s
                c = out_count[j]
                if c < limit:
                    out[j, c] = fill
                out_count[j] = c + 1
                if j == 0 and c + 1 >= limit:
                    return False
    return True


@nb.njit(cache=True)
def coset_search_batch(starts, cycle_basis, bvec, max_rank, min_size, limit, best, found):
    """``coset_search`` for many targets, keeping only the best deficit.

    ``best[t]`` receives the smallest deficit seen for target t (or -1) and
    ``found[t, :]`` up to ``limit`` fillings achieving it.
    """
    depth = max_rank - min_size + 1
    out = np.zeros((depth, limit), dtype=np.uint64)
    cnt = np.zeros(depth, dtype=np.int64)
    for t in range(starts.shape[0]):
        out[:, :] = 0
        cnt[:] = 0
        coset_search(starts[t], cycle_basis, bvec, max_rank, min_size, limit, out, cnt)
        best[t] = -1
        for j in range(depth):
            if cnt[j] > 0:
                best[t] = j
                for c in range(min(cnt[j], limit)):
                    found[t, c] = out[j, c]
                break
