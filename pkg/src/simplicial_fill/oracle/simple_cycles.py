"""Exhaustive search for the largest simple d-cycle of K_n^d."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple

from ..chains import Chain, Field, boundary
from ..errors import BudgetExceeded
from ..linalg import boundary_bits, boundary_sparse, faces, rank_of


class MaxSimpleCycleReport(NamedTuple):
    n: int
    d: int
    field: Field
    max_size: int
    witness: Chain
    examined: int


def _is_circuit(support, field: Field, n: int) -> bool:
    k = len(support)
    if rank_of(support, field, n) != k - 1:
        return False
    return all(rank_of(support[:i] + support[i + 1:], field, n) == k - 1 for i in range(k))


def _null_vector(support, n: int) -> dict:
    """The (unique up to scale) rational dependency among the facets' boundaries."""
    cols = [boundary_sparse(s) for s in support]
    rows = sorted({k for c in cols for k in c})
    mat = [[Fraction(c.get(r, 0)) for c in cols] for r in rows]
    pivots, rank = [], 0
    ncols = len(cols)
    for j in range(ncols):
        p = next((i for i in range(rank, len(mat)) if mat[i][j]), None)
        if p is None:
            continue
        mat[rank], mat[p] = mat[p], mat[rank]
        lead = mat[rank][j]
        mat[rank] = [x / lead for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][j]:
                f = mat[i][j]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(j)
        rank += 1
    free = next(j for j in range(ncols) if j not in pivots)
    vec = {free: Fraction(1)}
    for i, j in enumerate(pivots):
        if mat[i][free]:
            vec[j] = -mat[i][free]
    return {support[j]: c for j, c in vec.items()}


def max_simple_cycle(n: int, d: int, field: Field = Field.F2, budget: int = 5_000_000) -> MaxSimpleCycleReport:
    """Largest simple d-cycle on [n], by exhaustive search.

    Over F2 the whole cycle space (spanned by boundaries of the
    (d+1)-simplices through vertex 1) is walked.  Over Q, where a simple
    cycle is determined up to scale by its support, candidate supports are
    scanned from the largest conceivable size downwards.
    """
    field = Field(field)
    facets = faces(n, d)
    r = comb(n - 1, d)
    best_size, best, examined = 0, None, 0
    if field is Field.F2:
        index = {s: i for i, s in enumerate(facets)}
        basis = []
        for t in faces(n, d + 1):
            if t[0] == 1:
                bits = 0
                for j in range(len(t)):
                    bits |= 1 << index[t[:j] + t[j + 1:]]
                basis.append(bits)
        if len(basis) > 26:
            raise BudgetExceeded(f"cycle space of K_{n}^{d} has dimension {len(basis)}")
        cyc = 0
        for step in range(1, 1 << len(basis)):
            cyc ^= basis[(step & -step).bit_length() - 1]
            size = bin(cyc).count("1")
            examined += 1
            if size <= best_size:
                continue
            support = [facets[i] for i in range(len(facets)) if cyc >> i & 1]
            if rank_of(support, field, n) == size - 1:
                best_size, best = size, support
        witness = Chain(field, d, n, [(s, 1) for s in best])
        return MaxSimpleCycleReport(n, d, field, best_size, witness, examined)
    for size in range(r + 1, d + 1, -1):
        for support in combinations(facets, size):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"more than {budget} supports examined")
            support = list(support)
            if _is_circuit(support, field, n):
                witness = Chain(field, d, n, _null_vector(support, n))
                assert not boundary(witness)
                return MaxSimpleCycleReport(n, d, field, size, witness, examined)
    raise BudgetExceeded("no simple cycle found")  # unreachable for n >= d + 2
