"""Cross-validation of the filling engine against the exhaustive census."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import NamedTuple

import numpy as np

from ..chains import Chain, Field
from ..errors import ChainError, NotAHypertreeError
from ..linalg import HypertreeBasis, faces, is_acyclic
from .census import CensusReport, cached_census, census_layout
from .coset import best_deficits_batch, coset_layout, coset_supported


class Discrepancy(NamedTuple):
    index: int  # census index of the cycle
    cycle: str  # its support, for reading
    kind: str
    detail: str


def _optimum(c0: int, c1: int) -> int | None:
    """Least deficit recorded by the census, or None when it exceeds 1."""
    if c0:
        return 0
    if c1:
        return 1
    return None


def _support(z: Chain) -> str:
    return " ".join("".join(map(str, s)) for s in z.sorted_support())


def _check_one(idx: int, z: Chain, opt: int | None, count: int, got: int, distinct: int, out: list) -> None:
    if opt is None:
        if got <= 1:
            out.append(Discrepancy(idx, _support(z), "deficit", f"engine {got}, census has nothing <= 1"))
        return
    if got != opt:
        out.append(Discrepancy(idx, _support(z), "deficit", f"engine {got}, optimum {opt}"))
    elif distinct < min(2, count):
        out.append(Discrepancy(idx, _support(z), "count", f"engine gave {distinct}, census has {count}"))


def _engine_pass(report: CensusReport, indices, out: list) -> int:
    from ..fill.engine import fill_dim2_f2, fill_dim3_f2

    filler = fill_dim2_f2 if report.d == 2 else fill_dim3_f2
    universe = tuple(range(1, report.n + 1))
    for idx in indices:
        z = report.cycle(int(idx))
        c0, c1 = int(report.counts0[idx]), int(report.counts1[idx])
        opt = _optimum(c0, c1)
        certs = filler(z, universe, 2)
        got = certs[0].deficit
        for cert in certs:
            cert.verify()
        _check_one(int(idx), z, opt, c0 if opt == 0 else c1, got, len(certs), out)
    return len(indices)


def _coset_pass(report: CensusReport, out: list, chunk: int = 1 << 16) -> int:
    """Every cycle through the coset kernel the engine uses on small universes."""
    n, d = report.n, report.d
    lay = coset_layout(n, d)
    pos = {s: i for i, s in enumerate(lay.facets)}
    where = [pos[(1,) + t] for t in census_layout(n, d).key_faces]
    total = report.num_cycles
    for lo in range(1, total + 1, chunk):
        keys = np.arange(lo, min(lo + chunk, total + 1), dtype=np.uint64)
        starts = np.zeros(len(keys), dtype=np.uint64)
        for i, p in enumerate(where):
            starts |= ((keys >> np.uint64(i)) & np.uint64(1)) << np.uint64(p)
        best, found = best_deficits_batch(starts, n, d, 1, 2)
        distinct = (found != 0).sum(axis=1)
        c0 = report.counts0[lo:lo + len(keys)]
        c1 = report.counts1[lo:lo + len(keys)]
        opt = np.where(c0 > 0, 0, np.where(c1 > 0, 1, -1))
        cnt = np.where(opt == 0, c0, c1)
        bad = (best != opt) | ((opt >= 0) & (distinct < np.minimum(2, cnt)))
        for j in np.flatnonzero(bad):
            idx = int(keys[j])
            got = int(best[j])
            _check_one(idx, report.cycle(idx), None if opt[j] < 0 else int(opt[j]), int(cnt[j]),
                       got if got >= 0 else 2, int(distinct[j]), out)
    return total


def verify_engine_against_oracle(
    n: int,
    d: int,
    report: CensusReport | None = None,
    engine_sample: int | None = None,
) -> list[Discrepancy]:
    """Compare the engine's best deficit and filling count with the census, cycle by cycle.

    Every cycle is checked.  When the census has more than ``2**16`` cycles
    and the engine's base case is the coset kernel (the d = 3 universes of
    at most seven vertices), the bulk pass runs that kernel in batches and
    the full engine, certificates included, runs on an evenly spaced sample
    of ``engine_sample`` cycles (default 2000).
    """
    report = report or cached_census(n, d)
    if not report.complete:
        raise ChainError("cross-validation needs a complete census")
    out: list[Discrepancy] = []
    total = report.num_cycles
    if total > 1 << 16 and d == 3 and coset_supported(n, d):
        _coset_pass(report, out)
        k = engine_sample or 2000
        _engine_pass(report, np.unique(np.linspace(1, total, k, dtype=np.int64)), out)
    else:
        indices = range(1, total + 1)
        if engine_sample:
            indices = np.unique(np.linspace(1, total, engine_sample, dtype=np.int64))
        _engine_pass(report, indices, out)
    return out


# ---------------------------------------------------------------------------
# rational side


def q_hypertrees(n: int, d: int) -> list[tuple]:
    """All d-hypertrees of K_n^d over Q (small n only)."""
    r = comb(n - 1, d)
    return [t for t in combinations(faces(n, d), r) if is_acyclic(t, Field.Q, n)]


def q_zero_deficit_fillings(z: Chain, n: int) -> list[Chain]:
    """Every 0-deficit filling of a rational (d-1)-cycle on [n].

    A 0-deficit filling is an acyclic set of full size, i.e. a hypertree on
    which the unique filling uses every facet.  Scanning all hypertrees is
    therefore exhaustive, and it contains every cone-structured candidate.
    """
    if z.field is not Field.Q:
        raise ChainError("expected a rational chain")
    d = z.dim + 1
    z = z.with_n(n)
    out = []
    for t in q_hypertrees(n, d):
        try:
            f = HypertreeBasis(t, Field.Q, n).solve(z)
        except (ChainError, NotAHypertreeError):
            continue
        if len(f) == len(t):
            out.append(f)
    return out
