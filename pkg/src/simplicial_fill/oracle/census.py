"""Exhaustive enumeration of acyclic facet sets and the per-cycle filling census."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Callable, NamedTuple

import numpy as np

from ..chains import Chain, Field
from ..errors import BudgetExceeded, ChainError
from ..linalg import RankContext, boundary_bits, face_rank, faces
from . import kernels

CENSUS_FORMAT_VERSION = 1
DEFAULT_NODE_BUDGET = 10**11


class EnumerationSummary(NamedTuple):
    n: int
    d: int
    min_size: int
    by_size: dict
    nodes: int
    complete: bool

    @property
    def total(self) -> int:
        return sum(self.by_size.values())


def enumerate_acyclic(
    n: int,
    d: int,
    min_size: int,
    visitor: Callable[[tuple, Chain], None] | None = None,
    field: Field = Field.F2,
    node_budget: int = 10**7,
    order: list | None = None,
) -> EnumerationSummary:
    """Visit every acyclic set of d-simplices of K_n^d with at least ``min_size`` members.

    Plain backtracking over the facets (colex order unless ``order`` is
    given) with an incremental rank check.  The visitor receives the facet
    tuple and its boundary chain.  Meant for small cases; the census uses the
    compiled kernel instead.
    """
    field = Field(field)
    facets = list(faces(n, d) if order is None else order)
    nf = len(facets)
    by_size: dict[int, int] = {}
    nodes = 0
    complete = True

    def visit(ctx: RankContext) -> None:
        by_size[ctx.rank] = by_size.get(ctx.rank, 0) + 1
        if visitor is not None:
            chain = Chain(field, d, n, [(s, 1) for s in ctx.facets])
            from ..chains import boundary

            visitor(ctx.facets, boundary(chain))

    def rec(ctx: RankContext, i: int) -> None:
        nonlocal nodes, complete
        if ctx.rank >= min_size:
            visit(ctx)
        for j in range(i, nf):
            if ctx.rank + (nf - j) < min_size:
                return
            nodes += 1
            if nodes > node_budget:
                complete = False
                raise BudgetExceeded(f"node budget {node_budget} exhausted")
            nxt, ok = ctx.extend(facets[j])
            if ok:
                rec(nxt, j + 1)

    try:
        rec(RankContext(field, n, d), 0)
    except BudgetExceeded:
        pass
    return EnumerationSummary(n, d, min_size, dict(sorted(by_size.items())), nodes, complete)


# ---------------------------------------------------------------------------
# compiled census


class CensusLayout(NamedTuple):
    n: int
    d: int
    facets: tuple
    bvec: np.ndarray
    key_faces: tuple  # faces avoiding vertex 1, colex; bit i of a key is key_faces[i]


@lru_cache(maxsize=None)
def census_layout(n: int, d: int) -> CensusLayout:
    facets = faces(n, d)
    lower = faces(n, d - 1)
    if len(facets) > 64 or len(lower) > 64:
        raise ChainError(f"K_{n}^{d} does not fit the 64-bit census kernel")
    # faces avoiding vertex 1 go first so a cycle's key is a prefix of its boundary word
    order = sorted(lower, key=lambda s: (s[0] == 1, s[::-1]))
    where = {s: i for i, s in enumerate(order)}
    bvec = np.zeros(len(facets), dtype=np.uint64)
    for i, s in enumerate(facets):
        bits = 0
        for j in range(len(s)):
            bits |= 1 << where[s[:j] + s[j + 1:]]
        bvec[i] = bits
    key_faces = tuple(s for s in order if s[0] != 1)
    return CensusLayout(n, d, facets, bvec, key_faces)


def _run_task(args):
    n, d, prefix_len, mask, min_size, keybits, depth, node_budget = args
    lay = census_layout(n, d)
    counts = np.zeros((depth, 1 << keybits), dtype=np.int64)
    key_mask = np.uint64((1 << keybits) - 1)
    nodes, done = kernels.census_subtree(
        lay.bvec, prefix_len, np.uint64(mask), min_size, key_mask, counts, node_budget
    )
    return counts, int(nodes), bool(done)


def _run_partitioned(n, d, min_size, keybits, jobs, prefix_len, node_budget, time_budget):
    lay = census_layout(n, d)
    prefix_len = min(prefix_len, len(lay.facets))
    depth = comb(n - 1, d) - min_size + 1
    tasks = [
        (n, d, prefix_len, mask, min_size, keybits, depth, node_budget)
        for mask in range(1 << prefix_len)
    ]
    total = np.zeros((depth, 1 << keybits), dtype=np.int64)
    nodes, complete = 0, True
    t0 = time.monotonic()

    def absorb(res):
        nonlocal nodes, complete
        counts, k, done = res
        np.add(total, counts, out=total)
        nodes += k
        complete = complete and done

    if jobs <= 1:
        for task in tasks:
            if time_budget is not None and time.monotonic() - t0 > time_budget:
                complete = False
                break
            absorb(_run_task(task))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_run_task, tasks):
                absorb(res)
            if time_budget is not None and time.monotonic() - t0 > time_budget:
                complete = False
    return total, nodes, complete, time.monotonic() - t0


def count_acyclic(n: int, d: int, min_size: int, jobs: int = 1, prefix_len: int = 0,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> EnumerationSummary:
    """Compiled count of acyclic F2 facet sets of K_n^d by size."""
    counts, nodes, complete, _ = _run_partitioned(n, d, min_size, 0, jobs, prefix_len, node_budget, None)
    by_size = {min_size + j: int(counts[j, 0]) for j in range(counts.shape[0]) if counts[j, 0]}
    return EnumerationSummary(n, d, min_size, by_size, nodes, complete)


@dataclass
class CensusReport:
    """Per-cycle counts of 0- and 1-deficit acyclic fillings over F2.

    ``counts0[k]`` / ``counts1[k]`` belong to the cycle whose restriction to
    the faces avoiding vertex 1 is the bitmask ``k`` over ``key_faces``
    (every (d-1)-cycle is determined by that restriction).  Index 0 is the
    zero cycle.
    """

    n: int
    d: int
    counts0: np.ndarray
    counts1: np.ndarray
    nodes: int
    elapsed: float
    complete: bool
    params: dict = dc_field(default_factory=dict)

    @property
    def layout(self) -> CensusLayout:
        return census_layout(self.n, self.d)

    @property
    def num_cycles(self) -> int:
        return len(self.counts0) - 1

    def cycle(self, index: int) -> Chain:
        """The (d-1)-cycle with census index ``index``."""
        keyf = self.layout.key_faces
        filler = {(1,) + keyf[i]: 1 for i in range(len(keyf)) if index >> i & 1}
        from ..chains import boundary

        return boundary(Chain._trusted(Field.F2, self.d, self.n, filler))

    def index_of(self, z: Chain) -> int:
        keyf = self.layout.key_faces
        where = {s: i for i, s in enumerate(keyf)}
        idx = 0
        for s in z.terms:
            if s[0] != 1:
                idx |= 1 << where[s]
        return idx

    def key(self, index: int) -> int:
        """Canonical key: the cycle's support as a bitmask over colex face ranks."""
        bits = 0
        for s in self.cycle(index).terms:
            bits |= 1 << face_rank(s)
        return bits

    def counts_for(self, z: Chain) -> tuple[int, int]:
        i = self.index_of(z)
        return int(self.counts0[i]), int(self.counts1[i])

    def totals(self) -> dict:
        c0, c1 = self.counts0[1:], self.counts1[1:]
        both = c0 + c1
        return {
            "cycles": int(self.num_cycles),
            "hypertrees": int(self.counts0.sum()),
            "near_hypertrees": int(self.counts1.sum()),
            "min_fillings_deficit_le1": int(both.min()) if len(both) else 0,
            "cycles_without_0deficit": int((c0 == 0).sum()),
            "cycles_with_fewer_than_two": int((both < 2).sum()),
            "zero_cycle_counts": [int(self.counts0[0]), int(self.counts1[0])],
        }

    def every_cycle_has_two(self) -> bool:
        return self.complete and bool(((self.counts0[1:] + self.counts1[1:]) >= 2).all())

    def summary(self, timing: bool = True) -> dict:
        out = {
            "format_version": CENSUS_FORMAT_VERSION,
            "n": self.n,
            "d": self.d,
            "complete": self.complete,
            "nodes": self.nodes,
            "elapsed_seconds": round(self.elapsed, 3),
            "params": self.params,
            "totals": self.totals(),
        }
        if not timing:  # keeps saved artifacts byte-identical across runs
            del out["elapsed_seconds"]
        return out

    def save(self, stem: str | os.PathLike, timing: bool = True) -> tuple[Path, Path]:
        stem = Path(stem)
        bin_path = stem.with_suffix(".npz")
        json_path = stem.with_suffix(".json")
        np.savez_compressed(
            bin_path,
            format_version=CENSUS_FORMAT_VERSION,
            n=self.n,
            d=self.d,
            counts0=self.counts0,
            counts1=self.counts1,
            nodes=self.nodes,
            elapsed=self.elapsed if timing else 0.0,
            complete=self.complete,
        )
        json_path.write_text(json.dumps(self.summary(timing), indent=2, sort_keys=True) + "\n")
        return bin_path, json_path

    @classmethod
    def load(cls, path: str | os.PathLike) -> "CensusReport":
        path = Path(path).with_suffix(".npz")
        with np.load(path) as data:
            version = int(data["format_version"])
            if version != CENSUS_FORMAT_VERSION:
                raise ValueError(f"census file version {version}, expected {CENSUS_FORMAT_VERSION}")
            params = {}
            json_path = path.with_suffix(".json")
            if json_path.exists():
                params = json.loads(json_path.read_text()).get("params", {})
            return cls(
                int(data["n"]), int(data["d"]), data["counts0"], data["counts1"],
                int(data["nodes"]), float(data["elapsed"]), bool(data["complete"]), params,
            )


def filling_census(
    n: int,
    d: int,
    jobs: int = 1,
    prefix_len: int = 4,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float | None = None,
    allow_stretch: bool = False,
) -> CensusReport:
    """Count, for every (d-1)-cycle of K_n^{d-1}, its 0- and 1-deficit fillings.

    Enumerates all acyclic d-sets of size ``C(n-1,d) - 1`` and ``C(n-1,d)``
    and tallies them by boundary.  K_8^3 has more facets than the kernel's
    word size; it is refused unless ``allow_stretch`` is set, and even then
    raises because the search is out of reach.  A run stopped by
    ``node_budget`` or ``time_budget`` raises :class:`BudgetExceeded`
    carrying the partial report (marked incomplete) as ``partial``.
    """
    if n < d + 1 or d < 1:
        raise ValueError(f"no census for n={n}, d={d}")
    if comb(n, d + 1) > 64:
        msg = f"census of K_{n}^{d} needs {comb(n, d + 1)} facet bits (> 64)"
        if not allow_stretch:
            raise BudgetExceeded(msg + "; pass allow_stretch to acknowledge the stretch goal")
        raise BudgetExceeded(msg + "; this search is out of reach for the compiled kernel")
    r = comb(n - 1, d)
    keybits = r
    min_size = max(r - 1, 0)
    counts, nodes, complete, elapsed = _run_partitioned(
        n, d, min_size, keybits, jobs, prefix_len, node_budget, time_budget
    )
    if counts.shape[0] == 1:  # r == 0 cannot happen for n > d; kept for shape safety
        counts = np.vstack([np.zeros_like(counts), counts])
    params = {"jobs": jobs, "prefix_len": prefix_len, "node_budget": node_budget, "time_budget": time_budget}
    rep = CensusReport(n, d, counts[1].copy(), counts[0].copy(), nodes, elapsed, complete, params)
    if not complete:
        raise BudgetExceeded(f"census of K_{n}^{d} stopped by its budget after {nodes} nodes", partial=rep)
    return rep


def census_cache_dir() -> Path:
    root = os.environ.get("SIMPLICIAL_FILL_CACHE")
    if root:
        return Path(root)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "simplicial_fill"


def cached_census(n: int, d: int, jobs: int = 1, refresh: bool = False) -> CensusReport:
    """Load a complete census from the cache directory, computing it if absent."""
    stem = census_cache_dir() / f"census_{n}_{d}_v{CENSUS_FORMAT_VERSION}"
    if not refresh and stem.with_suffix(".npz").exists():
        rep = CensusReport.load(stem)
        if rep.complete:
            return rep
    rep = filling_census(n, d, jobs=jobs)
    stem.parent.mkdir(parents=True, exist_ok=True)
    rep.save(stem)
    return rep


def boundary_word(facets, n: int, d: int) -> int:
    """F2 boundary of a facet set as a bitmask over colex face ranks."""
    bits = 0
    for s in facets:
        bits ^= boundary_bits(tuple(s))
    return bits
