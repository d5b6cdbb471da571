"""Optimal F2 fillings of a single cycle by scanning its whole solution coset.

Every filling of ``z`` is ``F0 + C`` for one particular filling ``F0`` and a
d-cycle ``C``.  The d-cycles of K_m^d are spanned by the boundaries of the
(d+1)-simplices through vertex 1, so for small ``m`` the entire coset can be
walked in Gray-code order, testing each member for acyclicity.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

import numpy as np

from ..chains import Chain, Field
from ..errors import ChainError, NotACycleError
from ..linalg import face_rank, faces, is_cycle
from . import kernels

MAX_COSET_BITS = 24


class CosetLayout(NamedTuple):
    m: int
    d: int
    facets: tuple
    bvec: np.ndarray
    cycle_basis: np.ndarray


def coset_supported(m: int, d: int) -> bool:
    return (
        d >= 1
        and comb(m, d + 1) <= 64
        and comb(m, d) <= 64
        and comb(m - 1, d + 1) <= MAX_COSET_BITS
    )


@lru_cache(maxsize=None)
def coset_layout(m: int, d: int) -> CosetLayout:
    if not coset_supported(m, d):
        raise ChainError(f"coset search does not fit in machine words at m={m}, d={d}")
    facets = faces(m, d)
    bvec = np.zeros(len(facets), dtype=np.uint64)
    for i, s in enumerate(facets):
        bits = 0
        for j in range(len(s)):
            bits |= 1 << face_rank(s[:j] + s[j + 1:])
        bvec[i] = bits
    basis = []
    for t in faces(m, d + 1):
        if t[0] != 1:
            continue
        bits = 0
        for j in range(len(t)):
            bits |= 1 << face_rank(t[:j] + t[j + 1:])
        basis.append(bits)
    return CosetLayout(m, d, facets, bvec, np.array(basis, dtype=np.uint64))


def _relabel(z: Chain, universe: Iterable[int]):
    labels = sorted(set(universe))
    if not z.vertices <= set(labels):
        raise ChainError("target uses vertices outside the universe")
    index = {v: i + 1 for i, v in enumerate(labels)}
    return labels, [tuple(index[v] for v in s) for s in z.terms]


def particular_filling_bits(local_support: Iterable[tuple]) -> int:
    """Bits of the cone from vertex 1 over the part of the cycle avoiding 1."""
    bits = 0
    for s in local_support:
        if s[0] != 1:
            bits |= 1 << face_rank((1,) + s)
    return bits


class CosetResult(NamedTuple):
    fillings: dict  # deficit -> list of Chain (first ``limit`` found in scan order)
    totals: dict  # deficit -> exact number of fillings, or None after early exit
    complete: bool

    @property
    def best(self) -> int | None:
        return min(self.fillings) if self.fillings else None


def optimal_fillings(z: Chain, universe: Iterable[int], max_deficit: int = 0, limit: int = 2) -> CosetResult:
    """All acyclic F2 fillings of ``z`` inside the full simplex on ``universe``,
    of deficit at most ``max_deficit`` (first ``limit`` per deficit)."""
    if z.field is not Field.F2:
        raise ChainError("coset search works over F2 only")
    if not is_cycle(z):
        raise NotACycleError("target is not a cycle")
    labels, local = _relabel(z, universe)
    m, d = len(labels), z.dim + 1
    lay = coset_layout(m, d)
    r = comb(m - 1, d)
    depth = max_deficit + 1
    min_size = max(r - max_deficit, 0)
    out = np.zeros((depth, limit), dtype=np.uint64)
    cnt = np.zeros(depth, dtype=np.int64)
    start = np.uint64(particular_filling_bits(local))
    complete = kernels.coset_search(start, lay.cycle_basis, lay.bvec, r, min_size, limit, out, cnt)
    fillings, totals = {}, {}
    for j in range(depth):
        if cnt[j] == 0:
            continue
        found = []
        for c in range(min(int(cnt[j]), limit)):
            bits = int(out[j, c])
            terms = {
                tuple(labels[v - 1] for v in lay.facets[i]): 1
                for i in range(len(lay.facets)) if bits >> i & 1
            }
            found.append(Chain._trusted(Field.F2, d, z.n, terms))
        fillings[j] = found
        totals[j] = int(cnt[j]) if complete else None
    return CosetResult(fillings, totals, bool(complete))


def best_deficits_batch(starts: np.ndarray, m: int, d: int, max_deficit: int, limit: int = 2):
    """Optimal deficit and up to ``limit`` optimal filling bitmasks per start vector.

    ``starts`` are particular-filling bitmasks as produced by
    :func:`particular_filling_bits`.  A best deficit of -1 means nothing
    within ``max_deficit`` exists.
    """
    lay = coset_layout(m, d)
    r = comb(m - 1, d)
    best = np.zeros(len(starts), dtype=np.int64)
    found = np.zeros((len(starts), limit), dtype=np.uint64)
    kernels.coset_search_batch(
        np.asarray(starts, dtype=np.uint64), lay.cycle_basis, lay.bvec, r, r - max_deficit, limit, best, found
    )
    return best, found
