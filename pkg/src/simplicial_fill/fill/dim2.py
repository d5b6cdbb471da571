"""Fillings of 1-cycles by 2-chains.

The search runs the recursive procedure with trees as the link fillings and
prunes with the known lower bounds on the deficit:

* over F2, ``|F| = |Z| (mod 2)`` for any filling, so the deficit is at least
  1 when ``|Z|`` and ``C(m-1, 2)`` differ in parity;
* over Q the only cycles with no 0-deficit filling are those supported on a
  4-cycle with four vertices and on a triangle with five vertices.

Both bounds are attained, so a search with the bound as its budget succeeds.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from ..chains import Chain, Field, deletion, link
from .frames import Fill, compose, leaf
from .trees import distinct, fill_peeling

TREES_PER_PIVOT = 64


def is_exceptional_q(z: Chain, m: int) -> bool:
    """Q 1-cycles that cannot be filled with deficit 0."""
    if z.field is not Field.Q or z.dim != 1:
        return False
    verts = z.vertices
    if m == 4 and len(z) == 4 and len(verts) == 4:
        return all(sum(1 for s in z.terms if v in s) == 2 for v in verts)
    return m == 5 and len(z) == 3 and len(verts) == 3


def deficit_lower_bound(z: Chain, m: int) -> int:
    if not z:
        return comb(m - 1, 2)
    if z.field is Field.F2:
        return (len(z) - comb(m - 1, 2)) % 2
    return 1 if is_exceptional_q(z, m) else 0


def pivot_order(vertices, strategy: str) -> list[int]:
    return sorted(vertices, reverse=(strategy == "largest"))


def link_trees(lk: Chain, universe: Sequence[int], limit: int = TREES_PER_PIVOT) -> Iterator[Chain]:
    return distinct(fill_peeling(lk, universe), limit)


def fill2_search(
    z: Chain,
    universe: Sequence[int],
    budget: int,
    first_pivots: Sequence[int] = (),
    strategy: str = "smallest",
) -> Iterator[Fill]:
    """Yield 2-fillings of ``z`` on ``universe`` with deficit at most ``budget``.

    Tree link fillings have deficit 0, so the whole budget passes to the
    reduced cycle.  ``first_pivots`` forces the pivots of the outermost
    levels; deeper levels follow ``strategy``.
    """
    m = len(universe)
    if not z:
        if comb(m - 1, 2) <= budget:
            yield leaf(Chain._trusted(z.field, 2, z.n, {}), m, "empty")
        return
    if deficit_lower_bound(z, m) > budget:
        return
    if first_pivots:
        cands = [first_pivots[0]] if first_pivots[0] in z.vertices else []
    else:
        cands = pivot_order(z.vertices, strategy)
    for v in cands:
        lk = link(v, z)
        rest = [x for x in universe if x != v]
        base = deletion(v, z)
        for tree in link_trees(lk, rest):
            z2 = base + tree
            if deficit_lower_bound(z2, m - 1) > budget:
                continue
            tree_fill = leaf(tree, m - 1, "tree")
            for sub in fill2_search(z2, rest, budget, first_pivots[1:], strategy):
                yield compose(v, tree_fill, sub, m)


def best_fillings2(
    z: Chain,
    universe: Sequence[int],
    want: int = 1,
    strategy: str = "smallest",
) -> list[Fill]:
    """Up to ``want`` distinct fillings of least achievable deficit."""
    m = len(universe)
    budget = deficit_lower_bound(z, m)
    while budget <= comb(m - 1, 2):
        found = list(_take_distinct(fill2_search(z, universe, budget, (), strategy), want))
        if found:
            return found
        budget += 1
    return []


def _take_distinct(fills: Iterator[Fill], want: int) -> Iterator[Fill]:
    seen = set()
    for f in fills:
        if f.chain in seen:
            continue
        seen.add(f.chain)
        yield f
        if len(seen) >= want:
            return

