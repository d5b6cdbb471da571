"""Exact rank computations on boundary vectors of K_n^d.

Faces of each dimension are indexed by their colex rank, which does not
depend on ``n``: the k-subset ``s_0 < ... < s_k`` of ``[n]`` has rank
``sum_i C(s_i - 1, i + 1)``.  Over F2 a boundary vector is a Python int
with bit ``rank(face)`` set for every face; over Q it is a sparse
``{rank: coefficient}`` dict.

Q ranks are exact.  A rank computed modulo a large prime never exceeds the
rational rank, so a full modular rank certifies independence over Q; only
when it falls short do we pay for exact fraction elimination.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .chains import Chain, Field, Simplex, boundary, colex_key
from .errors import ChainError, NotACycleError, NotAHypertreeError

_PRIME = 2_147_483_629


def face_rank(s: Sequence[int]) -> int:
    return sum(comb(v - 1, i + 1) for i, v in enumerate(s))


@lru_cache(maxsize=None)
def faces(n: int, dim: int) -> tuple[Simplex, ...]:
    """All ``dim``-simplices on ``[n]`` in colex order."""
    return tuple(sorted(combinations(range(1, n + 1), dim + 1), key=colex_key))


def boundary_bits(s: Simplex) -> int:
    bits = 0
    for i in range(len(s)):
        bits ^= 1 << face_rank(s[:i] + s[i + 1:])
    return bits


def boundary_sparse(s: Simplex) -> dict[int, int]:
    return {face_rank(s[:i] + s[i + 1:]): (-1 if i & 1 else 1) for i in range(len(s))}


def chain_bits(c: Chain) -> int:
    bits = 0
    for s in c.terms:
        bits |= 1 << face_rank(s)
    return bits


def _check_facets(facets: Iterable[Sequence[int]], n: int) -> tuple[list[Simplex], int | None]:
    out = []
    dim = None
    for s in facets:
        s = tuple(s)
        if dim is None:
            dim = len(s) - 1
        elif len(s) - 1 != dim:
            raise ChainError(f"facet {s} has dimension {len(s) - 1}, expected {dim}")
        if s and (s[-1] > n or s[0] < 1):
            raise ChainError(f"facet {s} is not on [{n}]")
        out.append(s)
    return out, dim


# ---------------------------------------------------------------------------
# incremental rank structure


class RankContext:
    """Persistent echelon basis of boundary vectors of ``d``-simplices.

    ``extend`` never mutates; it returns a new context sharing the old rows,
    so a saved context can be branched on freely during backtracking.
    """

    __slots__ = ("field", "n", "d", "_rows", "facets")

    def __init__(self, field: Field, n: int, d: int, _rows=None, facets=()):
        self.field = Field(field)
        self.n = n
        self.d = d
        self._rows = {} if _rows is None else _rows
        self.facets = tuple(facets)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def max_rank(self) -> int:
        return comb(self.n - 1, self.d)

    def _vector(self, s: Simplex):
        s = tuple(s)
        if len(s) != self.d + 1:
            raise ChainError(f"simplex {s} is not {self.d}-dimensional")
        if s[-1] > self.n:
            raise ChainError(f"simplex {s} is not on [{self.n}]")
        return boundary_bits(s) if self.field is Field.F2 else boundary_sparse(s)

    def _reduce(self, vec):
        rows = self._rows
        if self.field is Field.F2:
            while vec:
                low = vec & -vec
                row = rows.get(low)
                if row is None:
                    return vec, low
                vec ^= row
            return 0, None
        vec = {k: Fraction(v) for k, v in vec.items()}
        while vec:
            col = min(vec)
            row = rows.get(col)
            if row is None:
                return vec, col
            factor = vec[col]
            for k, v in row.items():
                nv = vec.get(k, 0) - factor * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return {}, None

    def independent(self, s: Simplex) -> bool:
        residue, _ = self._reduce(self._vector(s))
        return bool(residue)

    def extend(self, s: Simplex) -> tuple["RankContext", bool]:
        residue, key = self._reduce(self._vector(s))
        if not residue:
            return self, False
        if self.field is Field.Q:
            lead = residue[key]
            residue = {k: v / lead for k, v in residue.items()}
        rows = dict(self._rows)
        rows[key] = residue
        return RankContext(self.field, self.n, self.d, rows, self.facets + (tuple(s),)), True


# ---------------------------------------------------------------------------
# batch ranks


def _rank_f2(vectors: Iterable[int]) -> int:
    rows: dict[int, int] = {}
    for vec in vectors:
        while vec:
            low = vec & -vec
            row = rows.get(low)
            if row is None:
                rows[low] = vec
                break
            vec ^= row
    return len(rows)


def _rank_mod_p(vectors: list[dict[int, int]]) -> int:
    cols = sorted({k for v in vectors for k in v})
    if not vectors or not cols:
        return 0
    where = {c: j for j, c in enumerate(cols)}
    m = np.zeros((len(vectors), len(cols)), dtype=np.int64)
    for i, vec in enumerate(vectors):
        for k, v in vec.items():
            m[i, where[k]] = v % _PRIME
    rank = 0
    rows, ncols = m.shape
    for j in range(ncols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, j])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, j]), _PRIME - 2, _PRIME)
        m[rank] = (m[rank] * inv) % _PRIME
        below = rank + 1 + np.nonzero(m[rank + 1:, j])[0]
        if below.size:
            factors = m[below, j][:, None]
            m[below] = (m[below] - (factors * m[rank]) % _PRIME) % _PRIME
        rank += 1
    return rank


def _rank_q_exact(vectors: list[dict[int, int]]) -> int:
    ctx_rows: dict[int, dict[int, Fraction]] = {}
    for vec in vectors:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        while vec:
            col = min(vec)
            row = ctx_rows.get(col)
            if row is None:
                lead = vec[col]
                ctx_rows[col] = {k: v / lead for k, v in vec.items()}
                break
            factor = vec[col]
            for k, v in row.items():
                nv = vec.get(k, 0) - factor * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return len(ctx_rows)


def _rank_q(vectors: list[dict[int, int]]) -> int:
    r = _rank_mod_p(vectors)
    if r == len(vectors):
        return r
    return _rank_q_exact(vectors)


def rank_of(facets: Iterable[Sequence[int]], field: Field, n: int) -> int:
    """Rank of the boundary vectors of ``facets`` over ``field``."""
    facets, dim = _check_facets(facets, n)
    if not facets:
        return 0
    if dim == 0:
        return 1 if facets else 0
    if Field(field) is Field.F2:
        return _rank_f2(boundary_bits(s) for s in facets)
    return _rank_q([boundary_sparse(s) for s in facets])


def is_acyclic(facets: Iterable[Sequence[int]], field: Field, n: int) -> bool:
    facets = list(facets)
    if len(set(map(tuple, facets))) != len(facets):
        return False
    return rank_of(facets, field, n) == len(facets)


def is_cycle(c: Chain) -> bool:
    if c.dim < 0:
        return True
    return not boundary(c)


def is_simple_cycle(c: Chain) -> bool:
    if not is_cycle(c):
        raise NotACycleError("is_simple_cycle needs a cycle")
    if not c:
        return False
    return rank_of(c.support, c.field, c.n) == len(c) - 1


# ---------------------------------------------------------------------------
# hypertrees


class HypertreeBasis:
    """A d-hypertree with a factorisation for solving ``boundary(F) = z`` on it."""

    def __init__(self, facets: Iterable[Sequence[int]], field: Field, n: int):
        facets, dim = _check_facets(facets, n)
        self.field = Field(field)
        self.n = n
        self.d = dim
        self.facets = tuple(sorted(facets, key=colex_key))
        if dim is None or len(self.facets) != comb(n - 1, dim):
            raise NotAHypertreeError(
                f"{len(self.facets)} facets; a hypertree on [{n}] has C({n - 1},{dim})"
            )
        if self.field is Field.Q:
            self._build_q()
            return
        rows: dict = {}
        for i, s in enumerate(self.facets):
            vec, combo = boundary_bits(s), 1 << i
            while vec:
                low = vec & -vec
                row = rows.get(low)
                if row is None:
                    rows[low] = (vec, combo)
                    break
                vec ^= row[0]
                combo ^= row[1]
            else:
                raise NotAHypertreeError(f"facet {s} closes a cycle; not a hypertree")
        self._rows = rows

    def _build_q(self) -> None:
        rows: dict = {}
        for i, s in enumerate(self.facets):
            vec = {k: Fraction(v) for k, v in boundary_sparse(s).items()}
            combo = {i: Fraction(1)}
            while vec:
                col = min(vec)
                row = rows.get(col)
                if row is None:
                    lead = vec[col]
                    rows[col] = (
                        {k: v / lead for k, v in vec.items()},
                        {k: v / lead for k, v in combo.items()},
                    )
                    break
                factor = vec[col]
                _axpy(vec, -factor, row[0])
                _axpy(combo, -factor, row[1])
            else:
                raise NotAHypertreeError(f"facet {s} closes a cycle; not a hypertree")
        self._rows = rows

    @classmethod
    def star(cls, v: int, n: int, d: int, field: Field) -> "HypertreeBasis":
        return cls([s for s in faces(n, d) if v in s], field, n)

    def solve(self, z: Chain) -> Chain:
        if z.field is not self.field:
            raise ChainError("field mismatch between hypertree and target")
        if z.dim != self.d - 1:
            raise ChainError(f"target must be a {self.d - 1}-chain")
        if not is_cycle(z):
            raise NotACycleError("target of a hypertree filling must be a cycle")
        if self.field is Field.F2:
            vec, combo = 0, 0
            for s in z.terms:
                vec ^= 1 << face_rank(s)
            while vec:
                low = vec & -vec
                row = self._rows.get(low)
                if row is None:
                    raise NotAHypertreeError("target is outside the span of the facets")
                vec ^= row[0]
                combo ^= row[1]
            terms = {self.facets[i]: 1 for i in range(len(self.facets)) if combo >> i & 1}
            return Chain._trusted(Field.F2, self.d, max(z.n, self.n), terms)
        vec = {face_rank(s): Fraction(c) for s, c in z.terms.items()}
        combo: dict[int, Fraction] = {}
        while vec:
            col = min(vec)
            row = self._rows.get(col)
            if row is None:
                raise NotAHypertreeError("target is outside the span of the facets")
            factor = vec[col]
            _axpy(vec, -factor, row[0])
            _axpy(combo, factor, row[1])
        terms = {self.facets[i]: c for i, c in combo.items() if c}
        return Chain._trusted(Field.Q, self.d, max(z.n, self.n), terms)


def _axpy(acc: dict, alpha, vec: dict) -> None:
    for k, v in vec.items():
        nv = acc.get(k, 0) + alpha * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def fill_on_hypertree(t: HypertreeBasis, z: Chain) -> Chain:
    """The unique filling of the cycle ``z`` supported on the hypertree ``t``."""
    return t.solve(z)
