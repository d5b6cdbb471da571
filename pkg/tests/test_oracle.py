from __future__ import annotations

from itertools import permutations
from math import comb

import numpy as np
import pytest

from simplicial_fill.chains import Chain, Field, boundary, simplex_boundary
from simplicial_fill.errors import BudgetExceeded
from simplicial_fill.linalg import faces, is_acyclic, is_simple_cycle
from simplicial_fill.oracle import (
    CensusReport,
    count_acyclic,
    enumerate_acyclic,
    filling_census,
    max_simple_cycle,
    optimal_fillings,
    q_hypertrees,
    verify_engine_against_oracle,
)

F2, Q = Field.F2, Field.Q


def test_enumeration_examples():
    assert enumerate_acyclic(4, 2, 3).by_size == {3: 4}
    assert enumerate_acyclic(5, 1, 4).by_size[4] == 125
    assert enumerate_acyclic(3, 2, 1).total == 1


@pytest.mark.parametrize("n", range(3, 8))
def test_spanning_trees_match_cayley(n):
    assert count_acyclic(n, 1, n - 1).by_size == {n - 1: n ** (n - 2)}


def test_enumeration_is_order_independent():
    base = enumerate_acyclic(5, 2, 5)
    facets = list(faces(5, 2))
    for k, perm in enumerate(permutations(range(len(facets)))):
        if k >= 3:
            break
        order = [facets[i] for i in perm[::-1]]
        assert enumerate_acyclic(5, 2, 5, order=order).by_size == base.by_size


def test_enumeration_visits_acyclic_sets_with_their_boundary():
    seen = []

    def visit(facets, bd):
        assert is_acyclic(facets, F2, 5)
        assert bd == boundary(Chain(F2, 2, 5, {s: 1 for s in facets}))
        seen.append(frozenset(facets))

    summary = enumerate_acyclic(5, 2, 6, visitor=visit)
    assert len(seen) == len(set(seen)) == summary.total == 125


def test_compiled_kernel_agrees_with_python_enumeration():
    for n, d in [(5, 2), (6, 3)]:
        r = comb(n - 1, d)
        py = enumerate_acyclic(n, d, r - 1).by_size
        counts = count_acyclic(n, d, r - 1)
        assert counts.by_size == py


def test_census_small(census):
    rep = census(4, 2)
    tri = simplex_boundary(F2, 4, (1, 2, 3))
    assert rep.counts_for(tri) == (1, 0)
    assert rep.totals()["hypertrees"] == 4
    # every maximal acyclic set has a nonzero boundary
    assert rep.counts0[0] == 0 and rep.counts1[0] == 0


def test_census_keys_are_canonical(census):
    rep = census(5, 2)
    keys = {rep.key(i) for i in range(1, rep.num_cycles + 1)}
    assert len(keys) == rep.num_cycles
    for i in range(1, rep.num_cycles + 1, 5):
        assert rep.index_of(rep.cycle(i)) == i


def test_census_hypertree_total_is_full_count(census):
    rep = census(6, 2)
    r = comb(5, 2)
    assert rep.totals()["hypertrees"] == count_acyclic(6, 2, r).by_size[r]


def test_census_round_trip(tmp_path):
    rep = filling_census(5, 2)
    rep.save(tmp_path / "c", timing=False)
    back = CensusReport.load(tmp_path / "c")
    assert np.array_equal(back.counts0, rep.counts0) and back.complete


def test_stretch_census_is_refused():
    with pytest.raises(BudgetExceeded):
        filling_census(8, 3)
    with pytest.raises(BudgetExceeded):
        filling_census(8, 3, allow_stretch=True)


def test_time_budget_marks_partial_report():
    with pytest.raises(BudgetExceeded) as info:
        filling_census(7, 2, time_budget=0.0, prefix_len=6)
    assert info.value.partial is not None and not info.value.partial.complete


def test_coset_oracle_matches_census(census):
    rep = census(6, 3)
    for idx in range(1, rep.num_cycles + 1, 31):
        z = rep.cycle(idx)
        res = optimal_fillings(z, range(1, 7), max_deficit=1, limit=10**6)
        c0, c1 = rep.counts_for(z)
        assert res.totals.get(0, 0) == c0 and res.totals.get(1, 0) == c1


@pytest.mark.parametrize("n,expected", [(4, 4), (5, 6), (6, 10)])
def test_max_simple_cycle_f2(n, expected):
    rep = max_simple_cycle(n, 2, F2)
    assert rep.max_size == expected
    assert len(rep.witness) == expected and is_simple_cycle(rep.witness)


@pytest.mark.parametrize("n,expected", [(4, 4), (5, 6)])
def test_max_simple_cycle_q(n, expected):
    rep = max_simple_cycle(n, 2, Q)
    assert rep.max_size == expected and is_simple_cycle(rep.witness)


def test_rational_hypertree_counts():
    assert len(q_hypertrees(4, 2)) == 4
    assert len(q_hypertrees(5, 2)) == 125


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (6, 2), (6, 3)])
def test_engine_agrees_with_oracle(n, d, census):
    assert verify_engine_against_oracle(n, d, census(n, d)) == []
