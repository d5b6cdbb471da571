from __future__ import annotations

from fractions import Fraction

import pytest

from simplicial_fill.chains import (
    Chain,
    Field,
    boundary,
    combine,
    cone,
    deficit,
    degree,
    incidences,
    link,
    simplex_boundary,
    star,
)
from simplicial_fill.errors import ChainError
from simplicial_fill.linalg import is_cycle
from simplicial_fill.sampling import random_chain

F2, Q = Field.F2, Field.Q


def q(n, terms, dim=None):
    dim = len(next(iter(terms))) - 1 if dim is None else dim
    return Chain(Q, dim, n, terms)


def test_boundary_of_triangle_over_q():
    got = boundary(q(3, {(1, 2, 3): 1}))
    assert got == q(3, {(2, 3): 1, (1, 3): -1, (1, 2): 1})


def test_boundary_twice_vanishes_on_tetrahedron():
    assert not boundary(boundary(q(4, {(1, 2, 3, 4): 1})))


def test_f2_boundary_cancels_shared_edge():
    c = Chain(F2, 2, 4, {(1, 2, 3): 1, (1, 2, 4): 1})
    assert boundary(c) == Chain(F2, 1, 4, {(2, 3): 1, (1, 3): 1, (2, 4): 1, (1, 4): 1})


def test_boundary_of_vertex_is_scalar():
    b = boundary(q(3, {(2,): 5}))
    assert b.dim == -1 and b.coefficient(()) == 5


def test_incidence_signs_alternate():
    assert [(i.face, i.sign) for i in incidences((1, 2, 3))] == [((2, 3), 1), ((1, 3), -1), ((1, 2), 1)]


def test_star_filters_terms_with_vertex():
    c = q(4, {(1, 2, 3): 1, (2, 3, 4): -1})
    assert star(1, c) == q(4, {(1, 2, 3): 1})
    assert not star(5, q(5, {(1, 2, 3): 1}))
    g = Chain(F2, 1, 3, {(1, 2): 1, (2, 3): 1, (1, 3): 1})
    assert star(2, g) == Chain(F2, 1, 3, {(1, 2): 1, (2, 3): 1})


def test_link_signs():
    t = q(3, {(1, 2, 3): 1})
    assert link(1, t) == q(3, {(2, 3): 1})
    assert link(2, t) == q(3, {(1, 3): -1})


def test_link_of_cycle_is_cycle():
    z = simplex_boundary(Q, 4, (1, 2, 3, 4))
    lk = link(4, z)
    assert lk and is_cycle(lk)
    assert lk.vertices == {1, 2, 3}


def test_cone_sign_and_identity():
    assert cone(4, q(4, {(1, 2): 1})) == q(4, {(1, 2, 4): 1})
    c = q(5, {(1, 2, 3): 1})
    assert boundary(cone(5, c)) == c - cone(5, boundary(c))
    f = Chain(F2, 1, 4, {(1, 2): 1, (1, 4): 1})
    assert cone(3, f) == Chain(F2, 2, 4, {(1, 2, 3): 1, (1, 3, 4): 1})


def test_cone_rejects_vertex_in_chain():
    with pytest.raises(ChainError):
        cone(1, q(3, {(1, 2): 1}))


def test_cone_is_right_inverse_of_link():
    c = q(6, {(1, 2, 3): 2, (1, 4, 5): Fraction(-1, 3), (2, 4, 6): 1})
    for v in range(1, 7):
        assert cone(v, link(v, c)) == star(v, c)


def test_combine():
    c = Chain(F2, 1, 3, {(1, 2): 1, (2, 3): 1})
    assert not combine(c, c, 1, 1)
    assert combine(c, Chain(F2, 1, 3), 1, 1) == c
    assert not combine(q(2, {(1, 2): 1}), q(2, {(1, 2): 1}), 1, -1)
    with pytest.raises(ChainError):
        combine(c, q(3, {(1, 2): 1}))


def test_deficit_arithmetic():
    assert deficit(Chain(F2, 2, 5, {s: 1 for s in [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (1, 4, 5)]})) == 0
    assert deficit(Chain(F2, 1, 4)) == 3
    assert deficit(Chain(F2, 3, 7, {(1, 2, 3, 4): 1}), 7) == 19


def test_degree_counts_support_terms():
    z = simplex_boundary(F2, 4, (1, 2, 3, 4))
    assert all(degree(v, z) == 3 for v in range(1, 5))


def test_normalization_drops_zeros_and_merges():
    c = Chain(Q, 1, 3, [((1, 2), 1), ((1, 2), 1), ((2, 3), 0)])
    assert len(c) == 1 and c.coefficient((1, 2)) == 2
    with pytest.raises(ChainError):  # orientation is the ascending order; no implicit sorting
        Chain(Q, 1, 3, {(2, 1): 1})
    assert Chain(F2, 1, 3, [((1, 2), 1), ((1, 2), 1)]) == Chain(F2, 1, 3)


def test_chains_are_hashable_values(rng):
    a = random_chain(rng, Q, 6, 2)
    b = Chain(Q, 2, 6, dict(a.terms))
    assert a == b and hash(a) == hash(b)


def test_bad_simplex_dimension():
    with pytest.raises(ChainError):
        Chain(F2, 2, 4, {(1, 2): 1})
    with pytest.raises(ChainError):
        Chain(F2, 1, 3, {(1, 5): 1})
