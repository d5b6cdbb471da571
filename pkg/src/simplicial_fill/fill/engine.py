"""Entry points of the filling engine.

``fill`` dispatches on dimension and field:

========  ======  =====================================================
d         field   method
========  ======  =====================================================
0, 1      both    vertices / spanning trees
2         both    pruned search over tree link fillings (``dim2``)
3         F2      friendly-cycle steering, exact below 8 vertices (``dim3``)
other     both    greedy recursion down to d + 2 vertices (``general``)
========  ======  =====================================================
"""

from __future__ import annotations

from itertools import islice
from math import comb
from typing import Iterable, Iterator, Sequence

from ..chains import Chain, Field
from ..errors import ChainError, FillError, NotACycleError
from ..linalg import is_cycle
from .certificate import FillCertificate, FillRequest, parity_status
from .dim2 import deficit_lower_bound, fill2_search
from .dim3 import fill3_search, is_friendly as _is_friendly
from .frames import Fill, leaf
from .general import base_case_small_n as _base_small, fill_general_search
from .trees import (
    canonical_tree,
    distinct,
    edges_chain,
    fill_peeling,
    fill_scalar,
    odd_vertices,
    tree_with_leaf,
)

__all__ = [
    "fill",
    "fill_dim1",
    "fill_dim2_f2",
    "fill_dim2_q",
    "fill_dim3_f2",
    "fill_general",
    "base_case_small_n",
    "is_friendly",
    "search",
]


def _method(d: int, field: Field) -> str:
    if d <= 1:
        return "tree"
    if d == 2:
        return "dim2"
    if d == 3 and field is Field.F2:
        return "dim3"
    return "general"


def _escalate(gen_for_budget, low: int, high: int) -> Iterator[Fill]:
    """Run a budgeted search at the smallest budget that yields anything."""
    for budget in range(low, high + 1):
        hit = False
        for f in gen_for_budget(budget):
            hit = True
            yield f
        if hit:
            return


def search(z: Chain, universe: Sequence[int], strategy: str = "smallest", method: str | None = None) -> Iterator[Fill]:
    """All fillings the engine can produce for ``z``, best deficit first (per method)."""
    m = len(universe)
    d = z.dim + 1
    if m < d + 1:
        raise FillError(f"a {d}-filling needs at least {d + 1} vertices, universe has {m}")
    method = method or _method(d, z.field)
    if d == 0:
        for f in fill_scalar(z, universe):
            yield leaf(f, m, "vertex")
        return
    if not z:
        yield leaf(Chain._trusted(z.field, d, z.n, {}), m, "empty")
        return
    if method == "tree":
        order = (lambda vs: sorted(vs, reverse=True)) if strategy == "largest" else sorted
        for t in distinct(fill_peeling(z, universe, "all", order)):
            yield leaf(t, m, "tree")
        return
    if method == "dim2":
        yield from _escalate(lambda b: fill2_search(z, universe, b, (), strategy),
                             deficit_lower_bound(z, m), comb(m - 1, 2))
        return
    if method == "dim3":
        yield from _escalate(lambda b: fill3_search(z, universe, b, strategy), 0, comb(m - 1, 3))
        return
    yield from fill_general_search(z, universe, lambda lk, rest: search(lk, rest, strategy), strategy)


def _certify(f: Fill, z: Chain, universe: tuple, method: str, strategy: str) -> FillCertificate:
    d = z.dim + 1
    m = len(universe)
    deficit = comb(m - 1, d) - len(f.chain)
    meta = {"method": method, "strategy": strategy}
    if method == "general" and d > 3:
        meta["deficit_over_n_pow"] = f"{deficit}/{m}^{d - 3}"
    cert = FillCertificate(f.chain, z, universe, deficit, f.frame, parity_status(z, m), meta)
    cert.verify()
    return cert


def fill(req: FillRequest) -> list[FillCertificate]:
    """Distinct verified fillings of ``req.target``, at most ``req.want_distinct``.

    Fewer are returned only when the engine's search space holds fewer; the
    relevant theorems guarantee two in the ranges they cover.
    """
    req = req.resolved()
    universe = req.universe
    z = req.target.with_n(max(req.target.n, max(universe, default=0)))
    method = _method(z.dim + 1, z.field)
    out, seen = [], set()
    for f in search(z, universe, req.strategy, method):
        if f.chain in seen:
            continue
        seen.add(f.chain)
        out.append(_certify(f, z, universe, method, req.strategy))
        if len(out) >= req.want_distinct:
            break
    if not out:
        raise FillError("no filling found")
    best = min(c.deficit for c in out)
    return [c for c in out if c.deficit == best] or out


def _request(z: Chain, universe, want: int, strategy: str = "smallest") -> FillRequest:
    return FillRequest(z, tuple(universe) if universe is not None else None, z.field, want, strategy)


def _require(z: Chain, d: int, field: Field | None, nonzero: bool = True) -> None:
    if z.dim != d - 1:
        raise ChainError(f"expected a {d - 1}-cycle, got dimension {z.dim}")
    if field is not None and z.field is not field:
        raise ChainError(f"expected a chain over {field.value}")
    if not is_cycle(z):
        raise NotACycleError("target is not a cycle")
    if nonzero and not z:
        raise ChainError("target must be nonzero")


def fill_dim1(
    odd_set: Iterable[int] | Chain,
    universe: Sequence[int],
    field: Field = Field.F2,
    forced_leaf: tuple[int, int] | None = None,
) -> Chain:
    """A spanning tree on ``universe`` filling the given 0-cycle.

    Over F2 the target may be given as its odd vertex set; ``forced_leaf``
    ``(w, y)`` makes ``w`` a leaf whose only neighbour is ``y`` (F2 only).
    """
    universe = sorted(universe)
    n = max(universe)
    if isinstance(odd_set, Chain):
        z = odd_set.with_n(max(n, odd_set.n))
        field = z.field
    else:
        odd = sorted(set(odd_set))
        if len(odd) % 2:
            raise ChainError("an F2 0-cycle has an even number of vertices")
        z = Chain(Field(field), 0, n, {(v,): 1 for v in odd})
    _require(z, 1, None)
    if not z.vertices <= set(universe):
        raise ChainError("target uses vertices outside the universe")
    if forced_leaf is not None:
        if z.field is not Field.F2:
            raise ChainError("forced leaves are supported over F2 only")
        w, y = forced_leaf
        return edges_chain(tree_with_leaf(z.vertices, universe, w, y, n), n)
    if z.field is Field.F2:
        return edges_chain(canonical_tree(z.vertices, universe, n), n)
    return next(fill_peeling(z, universe, "first"))


def fill_dim2_f2(z: Chain, universe=None, want_distinct: int = 1, strategy: str = "smallest") -> list[FillCertificate]:
    _require(z, 2, Field.F2)
    return fill(_request(z, universe, want_distinct, strategy))


def fill_dim2_q(z: Chain, universe=None, want_distinct: int = 1, strategy: str = "smallest") -> list[FillCertificate]:
    _require(z, 2, Field.Q)
    return fill(_request(z, universe, want_distinct, strategy))


def fill_dim3_f2(z: Chain, universe=None, want_distinct: int = 1, strategy: str = "smallest") -> list[FillCertificate]:
    _require(z, 3, Field.F2)
    if z.n < 4 and universe is None:
        raise ChainError("3-fillings need at least 4 vertices")
    return fill(_request(z, universe, want_distinct, strategy))


def fill_general(z: Chain, universe=None, field: Field | None = None, want_distinct: int = 1,
                 strategy: str = "smallest") -> list[FillCertificate]:
    """Greedy recursion in any dimension (the route taken for d >= 4, and d = 3 over Q)."""
    _require(z, z.dim + 1, Field(field) if field is not None else None)
    universe = tuple(sorted(universe)) if universe is not None else tuple(range(1, z.n + 1))
    z = z.with_n(max(z.n, max(universe)))
    out, seen = [], set()
    for f in fill_general_search(z, universe, lambda lk, rest: search(lk, rest, strategy), strategy):
        if f.chain not in seen:
            seen.add(f.chain)
            out.append(_certify(f, z, universe, "general", strategy))
            if len(out) >= want_distinct:
                break
    if not out:
        raise FillError("no filling found")
    return out


def base_case_small_n(z: Chain, universe=None) -> list[FillCertificate]:
    """Both fillings on a universe of exactly d + 2 vertices."""
    universe = tuple(sorted(universe)) if universe is not None else tuple(range(1, z.n + 1))
    d = z.dim + 1
    _require(z, d, None)
    if len(universe) != d + 2:
        raise FillError(f"base case needs exactly d+2 = {d + 2} vertices, got {len(universe)}")
    return [_certify(f, z, universe, "small universe", "smallest") for f in islice(_base_small(z, universe), 2)]


def is_friendly(z: Chain) -> bool:
    if z.field is not Field.F2 or z.dim != 2:
        raise ChainError("friendliness is defined for F2 2-cycles")
    return _is_friendly(z)


def odd_set(tree: Chain) -> frozenset:
    return odd_vertices(tree.terms)
