"""Fillings in any dimension by greedy recursion.

Every level pivots at the first support vertex whose link filling leaves a
nonzero reduced cycle.  The link is filled by the best dimension-specific
method available; the recursion bottoms out once the universe has ``d + 2``
vertices, where all fillings are ``F0 + t * boundary(full simplex)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence

from ..chains import Chain, Field, boundary, cone, deletion, link
from ..errors import FillError
from .frames import Fill, compose, leaf

LinkFiller = Callable[[Chain, Sequence[int]], Iterator[Fill]]


def base_case_small_n(z: Chain, universe: Sequence[int]) -> Iterator[Fill]:
    """Fillings of a (d-1)-cycle on a universe of ``d + 1`` or ``d + 2`` vertices.

    With ``d + 2`` vertices the fillings form the line ``F0 + t W`` where
    ``W`` is the boundary of the full simplex.  Over Q every ``t`` that
    cancels one coefficient of ``F0`` gives another acyclic filling; over F2
    there are just ``F0`` and ``F0 + W``.  Yielded least deficit first.
    """
    d = z.dim + 1
    m = len(universe)
    universe = sorted(universe)
    field = z.field
    if m == d + 1:
        top = tuple(universe)
        c = z.coefficient(top[1:]) if d >= 1 else z.coefficient(())
        f = Chain(field, d, z.n, {top: c})
        if not f or boundary(f) != z:
            raise FillError("target is not a multiple of the simplex boundary")
        yield leaf(f, m, "single simplex")
        return
    if m != d + 2:
        raise FillError(f"base case needs d+2 = {d + 2} vertices, got {m}")
    u0 = universe[0]
    f0 = cone(u0, deletion(u0, z))
    w = boundary(Chain._trusted(field, d + 1, z.n, {tuple(universe): field.one}))
    cands = [f0]
    if field is Field.F2:
        cands.append(f0 + w)
    else:
        ts = []
        for s, c in f0:
            t = -Fraction(c) / Fraction(w.coefficient(s))
            if t not in ts:
                ts.append(t)
        cands.extend(f0 + t * w for t in ts)
    r = comb(m - 1, d)
    good = [(r - len(f), i, f) for i, f in enumerate(cands) if 0 < len(f) <= r]
    seen = set()
    for defi, _, f in sorted(good, key=lambda x: (x[0], x[1])):
        if f in seen:
            continue
        seen.add(f)
        yield leaf(f, m, "small universe")


def fill_general_search(
    z: Chain,
    universe: Sequence[int],
    link_filler: LinkFiller,
    strategy: str = "smallest",
) -> Iterator[Fill]:
    m = len(universe)
    d = z.dim + 1
    if not z:
        yield leaf(Chain._trusted(z.field, d, z.n, {}), m, "empty")
        return
    if m <= d + 2:
        yield from base_case_small_n(z, universe)
        return
    verts = sorted(z.vertices, reverse=(strategy == "largest"))
    for v in verts:
        rest = [x for x in universe if x != v]
        base = deletion(v, z)
        for lf in link_filler(link(v, z), rest):
            z2 = base + lf.chain
            if not z2:
                continue
            for sub in fill_general_search(z2, rest, link_filler, strategy):
                yield compose(v, lf, sub, m, "greedy")
