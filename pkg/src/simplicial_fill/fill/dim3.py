"""Fillings of F2 2-cycles by 3-chains.

A 2-cycle is *friendly* when two of its vertices have degrees of different
parity.  Friendly cycles on m >= 8 vertices are filled with deficit 0 by
pivoting at a vertex whose link satisfies the parity condition and filling
that link so that the reduced cycle is friendly again.  Degree parities of
the reduced cycle split as ``A(u) + B(u)``: ``A`` depends only on the cycle
and the pivot, ``B`` on the chosen link filling, which is steered through
the pivots of its first two or three recursion levels.  Universes of at most
seven vertices are handled exactly by the coset oracle.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import islice
from math import comb
from typing import Iterator, Sequence

from ..chains import Chain, Field, degree, deletion, link
from ..errors import FillError
from ..oracle.coset import coset_supported, optimal_fillings
from .certificate import DegreeProfile
from .dim2 import fill2_search, pivot_order
from .frames import Fill, compose, leaf
from .trees import (
    canonical_tree,
    edges_chain,
    star_with_path,
    subdivide,
    tree_with_leaf,
)

log = logging.getLogger(__name__)

BASE_LIMIT = 4
PAIRS_PER_CASE = 3
# the steered prefix decides friendliness; later levels only add variety
COMPLETIONS_PER_VARIANT = 2
UNSTEERED_LINK_FILLINGS = 16


def is_friendly(z: Chain) -> bool:
    parities = {degree(v, z) % 2 for v in z.vertices}
    return len(parities) == 2


def _neighbours(g: Chain, u: int) -> set:
    return {x for s in g.terms if u in s for x in s if x != u}


# ---------------------------------------------------------------------------
# base case


@lru_cache(maxsize=4096)
def _coset(z: Chain, universe: tuple, max_deficit: int, limit: int):
    return optimal_fillings(z, universe, max_deficit, limit)


def base_fillings(z: Chain, universe: Sequence[int], budget: int) -> Iterator[Fill]:
    """Exact fillings from the coset oracle, least deficit first."""
    universe = tuple(universe)
    m, d = len(universe), z.dim + 1
    r = comb(m - 1, d)
    for cap in sorted({min(budget, 1), min(budget, r)}):
        res = _coset(z, universe, cap, BASE_LIMIT)
        if res.fillings:
            for j in sorted(res.fillings):
                for f in res.fillings[j]:
                    yield leaf(f, m, "oracle")
            return


# ---------------------------------------------------------------------------
# steering the link filling


def _case1(L, universe, u, u2, budget):
    """Pivot ``u`` then ``u2`` where ``(u, u2)`` is an edge of ``L``."""
    n = L.n
    g = deletion(u, L)
    odd = _neighbours(L, u)
    rest = [x for x in universe if x != u]
    g_adj = _neighbours(g, u2)
    ys = [y for y in rest if y != u2 and y not in g_adj] or [y for y in rest if y != u2]
    for y in ys[:2]:
        edges = tree_with_leaf(odd, rest, u2, y, n)
        yield from _continue(L, universe, u, edges, budget, (u2,), f"leaf {u2}-{y}")


def _case2(L, universe, u, u2, budget):
    """Pivot ``u`` then ``u2`` where ``u, u2`` are not adjacent in ``L``."""
    n = L.n
    g = deletion(u, L)
    odd = _neighbours(L, u)
    rest = [x for x in universe if x != u]
    base_tree = canonical_tree(odd, [x for x in rest if x != u2], n)
    avoid = _neighbours(g, u2)
    for e in base_tree:
        if set(e) == avoid:
            continue
        edges = subdivide(base_tree, e, u2)
        yield from _continue(L, universe, u, edges, budget, (u2,), f"subdivide {e}")
        break


def _continue(L, universe, u, edges, budget, forced, note):
    tree = edges_chain(edges, L.n)
    rest = [x for x in universe if x != u]
    z1 = deletion(u, L) + tree
    if not z1 or forced[0] not in z1.vertices:
        return
    t_fill = leaf(tree, len(rest), "tree", construction=note)
    for sub in islice(fill2_search(z1, rest, budget, forced), COMPLETIONS_PER_VARIANT):
        yield compose(u, t_fill, sub, len(universe))


def _two_cliques(L: Chain, colour: dict):
    """The vertex classes if ``L`` is a disjoint union of at most two
    monochromatic cliques of different colours, else None."""
    classes: dict = {}
    for v in L.vertices:
        classes.setdefault(colour[v], set()).add(v)
    for cls in classes.values():
        for a in cls:
            if _neighbours(L, a) != cls - {a}:
                return None
    return sorted((sorted(c) for c in classes.values()), key=lambda c: (-len(c), c))


def _case3(L, universe, clique, budget):
    n = L.n
    v, y = clique[0], clique[1]
    rest = [x for x in universe if x != v]
    odd = [x for x in clique if x != v]
    outside = [x for x in rest if x not in clique]
    end = odd[-1]
    edges = star_with_path(y, [x for x in odd if x != y], outside, end)
    tree = edges_chain(edges, n)
    z1 = deletion(v, L) + tree
    if not z1:
        return
    t_fill = leaf(tree, len(rest), "tree", construction=f"star {y} via {outside}")
    z1_adj_y = _neighbours(z1, y)
    for u2 in sorted(z1.vertices - {y} - z1_adj_y):
        rest2 = [x for x in rest if x != u2]
        odd2 = _neighbours(z1, u2)
        if y in z1.vertices:
            base_tree = canonical_tree(odd2, [x for x in rest2 if x != y], n)
            avoid = _neighbours(deletion(u2, z1), y)
            options = [subdivide(base_tree, e, y) for e in base_tree if set(e) != avoid][:1]
        else:
            options = [canonical_tree(odd2, rest2, n)]
        for edges2 in options:
            tree2 = edges_chain(edges2, n)
            z2 = deletion(u2, z1) + tree2
            if y not in z2.vertices:
                continue
            t2_fill = leaf(tree2, len(rest2), "tree")
            for sub in islice(fill2_search(z2, rest2, budget, (y,)), COMPLETIONS_PER_VARIANT):
                inner = compose(u2, t2_fill, sub, len(rest))
                yield compose(v, t_fill, inner, len(universe))
        return


def steered_link_fillings(z: Chain, v: int, universe: Sequence[int], budget: int) -> Iterator[tuple[Fill, dict]]:
    """2-fillings of ``Lk(v, z)`` chosen so the reduced cycle tends to be friendly.

    Yields ``(fill, info)`` with ``info`` naming the case and the steered
    pivots.  The caller checks friendliness; the cases only make it likely
    (and provably so for m >= 8).
    """
    L = link(v, z)
    rest = [x for x in universe if x != v]
    base = deletion(v, z)
    colour = {u: degree(u, base) % 2 for u in rest}
    verts = sorted(L.vertices)
    case1 = [(a, b) for (a, b) in sorted(L.terms) if colour[a] != colour[b]]
    if case1:
        for a, b in case1[:PAIRS_PER_CASE]:
            for u, u2 in ((a, b), (b, a)):
                for f in _case1(L, rest, u, u2, budget):
                    yield f, {"case": 1, "u": u, "u2": u2}
        return
    case2 = [
        (a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
        if colour[a] == colour[b] and (a, b) not in L.terms
    ]
    if case2:
        for a, b in case2[:PAIRS_PER_CASE]:
            for u, u2 in ((a, b), (b, a)):
                for f in _case2(L, rest, u, u2, budget):
                    yield f, {"case": 2, "u": u, "u2": u2}
        return
    cliques = _two_cliques(L, colour)
    if cliques is None:
        raise FillError("link is neither steerable by an edge or non-edge nor a union of cliques")
    big = cliques[0]
    for shift in range(len(big)):
        rotated = big[shift:] + big[:shift]
        for f in _case3(L, rest, rotated, budget):
            yield f, {"case": 3, "u": rotated[0], "u2": rotated[1]}


# ---------------------------------------------------------------------------
# recursion


def fill3_search(z: Chain, universe: Sequence[int], budget: int, strategy: str = "smallest",
                 stats: dict | None = None) -> Iterator[Fill]:
    """Yield F2 3-fillings of ``z`` with deficit at most ``budget``."""
    m = len(universe)
    if not z:
        if comb(m - 1, 3) <= budget:
            yield leaf(Chain._trusted(Field.F2, 3, z.n, {}), m, "empty")
        return
    if coset_supported(m, 3):
        yield from base_fillings(z, universe, budget)
        return
    need = comb(m - 2, 2) % 2
    verts = pivot_order(z.vertices, strategy)
    good = [v for v in verts if degree(v, z) % 2 == need]
    link_deficit = 0 if good else 1
    if budget < link_deficit:
        return
    produced = False
    for v in good or verts:
        rest = [x for x in universe if x != v]
        base = deletion(v, z)
        for lf, info in steered_link_fillings(z, v, universe, link_deficit):
            z2 = base + lf.chain
            if not is_friendly(z2):
                if stats is not None:
                    stats["unfriendly"] = stats.get("unfriendly", 0) + 1
                log.debug("case %s at pivot %s gave an unfriendly reduced cycle", info["case"], v)
                continue
            profile = DegreeProfile.compute(z, v, info["u"], lf.chain, universe)
            if not profile.predicts(z2):
                raise FillError("degree split A+B failed; internal error")
            extra = {"case": info["case"], "steered": [info["u"], info["u2"]], "profile": profile.to_dict()}
            for sub in fill3_search(z2, rest, budget - lf.frame.deficit, strategy, stats):
                produced = True
                yield compose(v, lf, sub, m, "friendly", **extra)
    if produced:
        return
    # nothing steered worked: plain search over link fillings
    if stats is not None:
        stats["fallback"] = stats.get("fallback", 0) + 1
    log.info("falling back to unsteered search at m=%d", m)
    for v in good or verts:
        rest = [x for x in universe if x != v]
        base = deletion(v, z)
        link_fills = fill2_search(link(v, z), rest, link_deficit, (), strategy)
        for lf in islice(link_fills, UNSTEERED_LINK_FILLINGS):
            z2 = base + lf.chain
            for sub in fill3_search(z2, rest, budget - link_deficit, strategy, stats):
                yield compose(v, lf, sub, m, "unsteered")


def best_fillings3(z: Chain, universe: Sequence[int], want: int = 1, strategy: str = "smallest",
                 stats: dict | None = None) -> list[Fill]:
    m = len(universe)
    for budget in (0, 1, comb(m - 1, 3)):
        seen, out = set(), []
        for f in fill3_search(z, universe, budget, strategy, stats):
            if f.chain not in seen:
                seen.add(f.chain)
                out.append(f)
                if len(out) >= want:
                    break
        if out:
            return out
    return []
