"""Hamiltonian and near-Hamiltonian simple cycles, and non-collapsible hypertrees.

A 0-deficit filling ``F`` of ``boundary(sigma)`` never contains ``sigma``
and ``F - sigma`` is a simple cycle of size ``C(n-1, d) + 1``, the largest
size a simple cycle can have.  Fillings of deficit k give simple cycles k
short of that.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from itertools import islice
from math import comb
from typing import Iterable, Sequence

from .chains import Chain, Field, boundary, colex_key, simplex_boundary
from .errors import ChainError, FillError
from .fill.certificate import FillCertificate
from .fill.dim3 import fill3_search
from .fill.engine import _certify, fill_dim2_f2, fill_dim2_q, fill_dim3_f2
from .linalg import is_simple_cycle

CYCLE, NONEXISTENT, NEAR = "cycle", "nonexistent", "near"


@dataclass
class HamiltonianResult:
    outcome: str  # "cycle", "nonexistent" or "near"
    n: int
    d: int
    field: Field
    chain: Chain | None = None  # the cycle, or the best near-cycle found
    deficit: int = 0  # how far ``chain`` is from Hamiltonian size
    reason: str = ""
    certificate: FillCertificate | None = None
    meta: dict = dc_field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.chain) if self.chain is not None else 0

    def to_dict(self) -> dict:
        from .textio import emit_chain

        return {
            "outcome": self.outcome,
            "n": self.n,
            "d": self.d,
            "field": self.field.value,
            "size": self.size,
            "deficit": self.deficit,
            "reason": self.reason,
            "cycle": emit_chain(self.chain) if self.chain is not None else None,
            "meta": self.meta,
        }


def simple_cycle_from_filling(cert: FillCertificate, sigma: Sequence[int]) -> Chain:
    """``F - sigma`` for a filling ``F`` of ``boundary(sigma)``."""
    sigma = tuple(sorted(sigma))
    f = cert.filling
    if cert.target != simplex_boundary(f.field, cert.target.n, sigma):
        raise ChainError("certificate does not fill the boundary of sigma")
    if sigma in f.terms:
        raise ChainError("sigma lies in the filling; F - sigma is not simple")
    cycle = f - Chain._trusted(f.field, len(sigma) - 1, f.n, {sigma: f.field.one})
    if boundary(cycle):
        raise FillError("F - sigma is not a cycle")
    return cycle


def _checked(cycle: Chain, n: int, d: int, short: int) -> Chain:
    if len(cycle) != comb(n - 1, d) + 1 - short or not is_simple_cycle(cycle):
        raise FillError(f"constructed cycle has size {len(cycle)} or is not simple")
    return cycle


def hamiltonian_2cycle(n: int, field: Field = Field.F2) -> HamiltonianResult:
    """Over F2 a Hamiltonian 2-cycle exists iff n = 0, 3 (mod 4); over Q iff n != 5."""
    field = Field(field)
    if n < 4:
        raise ValueError("Hamiltonian 2-cycles are considered for n >= 4")
    sigma = (1, 2, 3)
    z = simplex_boundary(field, n, sigma)
    certs = (fill_dim2_f2 if field is Field.F2 else fill_dim2_q)(z, None, 1)
    cert = certs[0]
    cycle = simple_cycle_from_filling(cert, sigma)
    if cert.deficit == 0:
        return HamiltonianResult(CYCLE, n, 2, field, _checked(cycle, n, 2, 0), 0, certificate=cert)
    if field is Field.F2:
        reason = (
            f"a Hamiltonian cycle minus one face would fill a 3-edge cycle with C({n - 1},2) = "
            f"{comb(n - 1, 2)} triangles, but every filling of it has odd size"
        )
    else:
        reason = "the triangle boundary has no 0-deficit rational filling on 5 vertices"
    return HamiltonianResult(NONEXISTENT, n, 2, field, _checked(cycle, n, 2, cert.deficit), cert.deficit,
                             reason, cert)


def hamiltonian_3cycle(n: int, follow_parity_rule: bool = True) -> HamiltonianResult:
    """Hamiltonian 3-cycles over F2 from fillings of a tetrahedron boundary.

    When ``C(n-2, 2)`` is odd a 0-deficit filling exists for every n >= 8
    and the result is a cycle.  Otherwise the guaranteed object is a
    near-cycle one short of Hamiltonian; with ``follow_parity_rule`` that
    near-cycle is returned even where an exact cycle happens to exist as
    well (recorded under ``meta["hamiltonian_exists"]``).
    """
    if n < 7:
        raise ValueError("hamiltonian_3cycle needs n >= 7")
    sigma = (1, 2, 3, 4)
    z = simplex_boundary(Field.F2, n, sigma)
    universe = tuple(range(1, n + 1))
    parity_odd = comb(n - 2, 2) % 2 == 1
    meta = {"link_parity_binomial": f"C({n - 2},2) = {comb(n - 2, 2)}"}
    if parity_odd:
        cert = fill_dim3_f2(z, universe, 1)[0]
        if cert.deficit != 0:
            raise FillError("expected a 0-deficit filling under the parity rule")
        cycle = simple_cycle_from_filling(cert, sigma)
        return HamiltonianResult(CYCLE, n, 3, Field.F2, _checked(cycle, n, 3, 0), 0, certificate=cert, meta=meta)
    best = fill_dim3_f2(z, universe, 1)[0]
    meta["hamiltonian_exists"] = best.deficit == 0
    if best.deficit == 0 and not follow_parity_rule:
        cycle = simple_cycle_from_filling(best, sigma)
        return HamiltonianResult(CYCLE, n, 3, Field.F2, _checked(cycle, n, 3, 0), 0, certificate=best, meta=meta)
    near = best if best.deficit == 1 else None
    if near is None:
        for f in islice(fill3_search(z, universe, 1), 64):
            if comb(n - 1, 3) - len(f.chain) == 1:
                near = _certify(f, z, universe, "dim3", "smallest")
                break
    if near is None:
        raise FillError("no 1-deficit filling of the tetrahedron boundary found")
    cycle = simple_cycle_from_filling(near, sigma)
    return HamiltonianResult(NEAR, n, 3, Field.F2, _checked(cycle, n, 3, 1), 1,
                             "C(n-2,2) is even: the pivot link fails the parity condition", near, meta)


# ---------------------------------------------------------------------------
# collapsibility


@dataclass
class CollapseReport:
    collapsed_fully: bool
    sequence: list  # (free face, removed facet) in removal order
    residue: list
    order: str = "smallest free face in colex order first"


def collapse_check(facets: Iterable[Sequence[int]]) -> CollapseReport:
    """Greedy elementary collapses of a pure complex down to its codimension-1 skeleton."""
    facets = {tuple(sorted(s)) for s in facets}
    dims = {len(s) for s in facets}
    if len(dims) > 1:
        raise ChainError("facets must all have the same dimension")
    cofaces: dict = defaultdict(set)
    for s in facets:
        for i in range(len(s)):
            cofaces[s[:i] + s[i + 1:]].add(s)
    heap = [(colex_key(f), f) for f, c in cofaces.items() if len(c) == 1]
    heapq.heapify(heap)
    sequence = []
    while heap:
        _, face = heapq.heappop(heap)
        owners = cofaces.get(face)
        if not owners or len(owners) != 1:
            continue
        (sigma,) = owners
        sequence.append((face, sigma))
        facets.discard(sigma)
        for i in range(len(sigma)):
            g = sigma[:i] + sigma[i + 1:]
            cofaces[g].discard(sigma)
            if len(cofaces[g]) == 1:
                heapq.heappush(heap, (colex_key(g), g))
        del cofaces[face]
    residue = sorted(facets, key=colex_key)
    return CollapseReport(not residue, sequence, residue)


def face_degrees(facets: Iterable[Sequence[int]]) -> dict:
    deg: dict = defaultdict(int)
    for s in facets:
        for i in range(len(s)):
            deg[s[:i] + s[i + 1:]] += 1
    return dict(deg)


def _hamiltonian_cycles(n: int, d: int):
    if d == 2:
        res = hamiltonian_2cycle(n, Field.F2)
        if res.outcome != CYCLE:
            raise FillError(f"no Hamiltonian 2-cycle at n={n}")
        yield res.chain
        sigma = (1, 2, 3)
        for cert in fill_dim2_f2(simplex_boundary(Field.F2, n, sigma), None, 4)[1:]:
            yield simple_cycle_from_filling(cert, sigma)
    elif d == 3:
        res = hamiltonian_3cycle(n, follow_parity_rule=False)
        if res.outcome != CYCLE:
            raise FillError(f"no Hamiltonian 3-cycle at n={n}")
        yield res.chain
        sigma = (1, 2, 3, 4)
        for cert in fill_dim3_f2(simplex_boundary(Field.F2, n, sigma), None, 4)[1:]:
            yield simple_cycle_from_filling(cert, sigma)
    else:
        raise ValueError("non-collapsible trees are built for d = 2, 3")


def non_collapsible_tree(n: int, d: int) -> list[tuple]:
    """A d-hypertree on [n] with no free (d-1)-face.

    Take a Hamiltonian cycle Z and a facet sigma all of whose boundary faces
    lie in at least four facets of Z; then Z - sigma is a hypertree where
    every (d-1)-face still has degree at least 2.
    """
    for z in _hamiltonian_cycles(n, d):
        deg = face_degrees(z.terms)
        for sigma in z.sorted_support():
            if all(deg[sigma[:i] + sigma[i + 1:]] >= 4 for i in range(len(sigma))):
                tree = [s for s in z.sorted_support() if s != sigma]
                if len(tree) != comb(n - 1, d):
                    raise FillError("hypertree has the wrong size")
                return tree
    raise FillError(f"no facet with all boundary faces of degree >= 4 in the Hamiltonian cycles tried at n={n}, d={d}")
