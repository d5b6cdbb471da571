"""Fillings of 0-cycles: spanning trees with prescribed boundary.

Over F2 a 0-cycle is an even vertex set and a 0-deficit filling is a
spanning tree whose odd-degree vertices are exactly that set.  Over Q the
tree carries the unique edge weights realising the weighted target.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from ..chains import Chain, Field, cone, deletion
from ..errors import FillError

Edge = tuple  # (a, b) with a < b


def fill_scalar(z: Chain, universe: Sequence[int]) -> Iterator[Chain]:
    """Fillings of ``c * ()`` by a single weighted vertex, one per vertex."""
    c = z.coefficient(())
    for u in universe:
        yield Chain._trusted(z.field, 0, z.n, {(u,): c})


def fill_peeling(z: Chain, universe: Sequence[int], pivots: str = "all", order=sorted) -> Iterator[Chain]:
    """Every 0-deficit filling of a nonzero 0-cycle reachable by the recursion.

    At each level a pivot ``v`` of the support is joined to some other
    vertex ``u``, which absorbs the weight of ``v``.  ``pivots="first"``
    restricts every level to the first support vertex; both modes may
    produce the same tree along different routes.
    """
    m = len(universe)
    if not z:
        if m == 1:
            yield Chain._trusted(z.field, 1, z.n, {})
        return
    if m < 2:
        return
    cands = order(z.vertices)
    if pivots == "first":
        cands = cands[:1]
    for v in cands:
        c = z.coefficient((v,))
        rest = [x for x in universe if x != v]
        base = deletion(v, z)
        for u in rest:
            lk = Chain._trusted(z.field, 0, z.n, {(u,): c})
            z2 = base + lk
            if not z2 and len(rest) > 1:
                continue
            for sub in fill_peeling(z2, rest, pivots, order):
                yield sub - cone(v, lk)


def distinct(chains: Iterable[Chain], limit: int | None = None) -> Iterator[Chain]:
    seen = set()
    for c in chains:
        if c in seen:
            continue
        seen.add(c)
        yield c
        if limit is not None and len(seen) >= limit:
            return


# ---------------------------------------------------------------------------
# explicit F2 constructions


def edges_chain(edges: Iterable[Edge], n: int) -> Chain:
    return Chain._trusted(Field.F2, 1, n, {tuple(sorted(e)): 1 for e in edges})


def odd_vertices(edges: Iterable[Edge]) -> frozenset:
    odd: set = set()
    for e in edges:
        for x in e:
            odd ^= {x}
    return frozenset(odd)


def even_set_chain(odd: Iterable[int], n: int) -> Chain:
    return Chain._trusted(Field.F2, 0, n, {(x,): 1 for x in odd})


def canonical_tree(odd: Iterable[int], vertices: Sequence[int], n: int) -> list[Edge]:
    """The first tree on ``vertices`` with odd set ``odd`` found by peeling."""
    odd = set(odd)
    vertices = sorted(vertices)
    if not odd:
        if len(vertices) == 1:
            return []
        raise FillError("a tree on two or more vertices has odd-degree vertices")
    if len(odd) % 2:
        raise FillError("odd-degree set of a tree has even size")
    t = next(fill_peeling(even_set_chain(odd, n), vertices, "first"), None)
    if t is None:
        raise FillError("no spanning tree with the requested odd set")
    return sorted(t.terms)


def tree_with_leaf(odd: Iterable[int], vertices: Sequence[int], w: int, y: int, n: int) -> list[Edge]:
    """A tree with odd set ``odd`` in which ``w`` is a leaf hanging off ``y``."""
    odd = set(odd)
    if w not in odd or y == w or y not in vertices:
        raise FillError("forced leaf must be an odd vertex with a different neighbour")
    rest = [x for x in sorted(vertices) if x != w]
    if odd == {w, y}:
        path = [w] + [x for x in rest if x != y] + [y]
        return sorted(tuple(sorted(p)) for p in zip(path, path[1:]))
    reduced = (odd - {w}) ^ {y}
    return sorted(canonical_tree(reduced, rest, n) + [tuple(sorted((w, y)))])


def subdivide(edges: Sequence[Edge], e: Edge, x: int) -> list[Edge]:
    a, b = e
    out = [f for f in edges if f != e]
    out += [tuple(sorted((a, x))), tuple(sorted((x, b)))]
    return sorted(out)


def star_with_path(center: int, leaves: Sequence[int], path: Sequence[int], end: int) -> list[Edge]:
    """Star at ``center`` whose edge to ``end`` is replaced by a path through ``path``."""
    edges = [tuple(sorted((center, x))) for x in leaves if x != end]
    chain = [center, *path, end]
    edges += [tuple(sorted(p)) for p in zip(chain, chain[1:])]
    return sorted(edges)


def is_spanning_tree(edges: Sequence[Edge], vertices: Iterable[int]) -> bool:
    vertices = set(vertices)
    if len(edges) != len(vertices) - 1:
        return False
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if a not in parent or b not in parent:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True
