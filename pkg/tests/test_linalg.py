from __future__ import annotations

import random
from itertools import combinations
from math import comb

import pytest

from simplicial_fill.chains import Chain, Field, boundary, cone, simplex_boundary
from simplicial_fill.errors import ChainError, NotACycleError, NotAHypertreeError
from simplicial_fill.linalg import (
    HypertreeBasis,
    RankContext,
    faces,
    fill_on_hypertree,
    is_acyclic,
    is_cycle,
    is_simple_cycle,
    rank_of,
)
from simplicial_fill.sampling import random_chain

F2, Q = Field.F2, Field.Q


@pytest.mark.parametrize("field", [F2, Q])
def test_rank_examples(field):
    assert rank_of([s for s in faces(5, 2) if 1 in s], field, 5) == 6
    assert rank_of(faces(4, 2), field, 4) == 3
    assert rank_of([], field, 4) == 0


@pytest.mark.parametrize("field", [F2, Q])
@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 9) for d in range(1, 4) if d < n])
def test_complete_complex_rank(field, n, d):
    assert rank_of(faces(n, d), field, n) == comb(n - 1, d)


def test_rank_is_order_independent(rng):
    for field in (F2, Q):
        facets = list(faces(6, 2))
        ranks = set()
        for _ in range(5):
            rng.shuffle(facets)
            chosen = facets[:9]
            ranks.add(rank_of(chosen, field, 6) == rank_of(sorted(chosen), field, 6))
        assert ranks == {True}


def test_rank_rejects_mixed_dimension():
    with pytest.raises(ChainError):
        rank_of([(1, 2), (1, 2, 3)], F2, 3)


def test_acyclicity_examples():
    assert not is_acyclic(faces(4, 2), F2, 4)
    assert is_acyclic([(2, 4, 5)], Q, 5)


def _random_forest(rng, vertices):
    """A random spanning tree on ``vertices`` as an edge list."""
    vs = list(vertices)
    rng.shuffle(vs)
    return [tuple(sorted((vs[i], rng.choice(vs[:i])))) for i in range(1, len(vs))]


@pytest.mark.parametrize("field", [F2, Q])
def test_cone_over_forest_extends_hypertree(field):
    # a 2-hypertree on V together with the cone over a spanning tree of V is a 2-hypertree on V + x
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(4, 6)
        star_tree = [s for s in faces(n, 2) if 1 in s]
        x = n + 1
        tree_edges = _random_forest(rng, range(1, n + 1))
        coned = [tuple(sorted(e + (x,))) for e in tree_edges]
        facets = star_tree + coned
        assert is_acyclic(facets, field, x)
        assert len(facets) == comb(x - 1, 2)


def test_cycle_examples():
    assert is_cycle(simplex_boundary(Q, 4, (1, 2, 3, 4)))
    assert not is_cycle(Chain(Q, 2, 3, {(1, 2, 3): 1}))
    assert is_cycle(Chain(F2, 2, 4, {s: 1 for s in faces(4, 2)}))


def test_simple_cycle_examples():
    assert is_simple_cycle(simplex_boundary(F2, 4, (1, 2, 3, 4)))
    two = simplex_boundary(F2, 8, (1, 2, 3, 4)) + simplex_boundary(F2, 8, (5, 6, 7, 8))
    assert not is_simple_cycle(two)
    assert not is_simple_cycle(Chain(F2, 2, 4))
    with pytest.raises(NotACycleError):
        is_simple_cycle(Chain(F2, 2, 4, {(1, 2, 3): 1}))


def test_simple_cycle_minus_any_facet_is_acyclic():
    # two tetrahedra glued along a face: the shared triangle cancels
    z = simplex_boundary(Q, 6, (1, 2, 3, 4)) - simplex_boundary(Q, 6, (1, 2, 3, 5))
    assert len(z) == 6
    assert is_simple_cycle(z)
    for s in z.support:
        assert is_acyclic([t for t in z.support if t != s], Q, 6)


def test_fill_on_star_hypertree_over_q():
    t = HypertreeBasis.star(1, 4, 2, Q)
    z = simplex_boundary(Q, 4, (2, 3, 4))
    f = fill_on_hypertree(t, z)
    assert boundary(f) == z and f.support <= set(t.facets)
    assert f == cone(1, z)


def test_fill_on_hypertree_trivial_cases():
    t = HypertreeBasis.star(1, 5, 2, F2)
    assert not fill_on_hypertree(t, Chain(F2, 1, 5))
    sigma = (1, 3, 5)
    assert fill_on_hypertree(t, simplex_boundary(F2, 5, sigma)) == Chain(F2, 2, 5, {sigma: 1})


@pytest.mark.parametrize("field", [F2, Q])
def test_fill_on_hypertree_round_trip(field, rng):
    for _ in range(20):
        n = rng.randint(4, 7)
        t = HypertreeBasis.star(rng.randint(1, n), n, 2, field)
        f = random_chain(rng, field, n, 2, 0.5)
        f = Chain(field, 2, n, {s: c for s, c in f.terms.items() if s in set(t.facets)})
        assert fill_on_hypertree(t, boundary(f)) == f


def test_hypertree_rejects_bad_input():
    with pytest.raises(NotAHypertreeError):
        HypertreeBasis(faces(4, 2)[:2], F2, 4)
    with pytest.raises(NotAHypertreeError):
        HypertreeBasis([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)][:3] + [(1, 2, 3)], F2, 4)
    t = HypertreeBasis.star(1, 4, 2, F2)
    with pytest.raises(NotACycleError):
        t.solve(Chain(F2, 1, 4, {(1, 2): 1}))


@pytest.mark.parametrize("field", [F2, Q])
def test_rank_context_is_persistent(field):
    empty = RankContext(field, 4, 2)
    ctx, ok = empty.extend((1, 2, 3))
    assert ok and empty.rank == 0 and ctx.rank == 1
    a, ok_a = ctx.extend((1, 2, 4))
    b, ok_b = ctx.extend((2, 3, 4))
    assert ok_a and ok_b and a.rank == b.rank == 2 and ctx.rank == 1
    full, _ = a.extend((1, 3, 4))
    last, ok = full.extend((2, 3, 4))
    assert not ok and last.rank == 3 == full.max_rank


def test_rank_context_saturates(rng):
    ctx = RankContext(F2, 6, 2)
    for s in faces(6, 2):
        ctx, _ = ctx.extend(s)
    assert ctx.rank == comb(5, 2)
    assert not any(ctx.independent(s) for s in faces(6, 2))
    with pytest.raises(ChainError):
        ctx.extend((1, 2))


def test_rank_agrees_with_exhaustive_small_case():
    # every 3-subset of K_4^2 is a hypertree: the only cycle uses all four triangles
    for sub in combinations(faces(4, 2), 3):
        assert is_acyclic(sub, F2, 4) and is_acyclic(sub, Q, 4)
