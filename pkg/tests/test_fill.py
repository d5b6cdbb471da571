from __future__ import annotations

import json
import random
from fractions import Fraction
from math import comb, factorial

import pytest

from simplicial_fill.chains import Chain, Field, boundary, degree, simplex_boundary
from simplicial_fill.errors import ChainError, FillError, NotACycleError, VerificationError
from simplicial_fill.fill import (
    FillCertificate,
    FillRequest,
    base_case_small_n,
    fill,
    fill_dim1,
    fill_dim2_f2,
    fill_dim2_q,
    fill_dim3_f2,
    fill_general,
    is_friendly,
    parity_status,
)
from simplicial_fill.fill.engine import odd_set
from simplicial_fill.fill.trees import distinct, fill_peeling
from simplicial_fill.linalg import is_acyclic
from simplicial_fill.oracle import q_zero_deficit_fillings
from simplicial_fill.sampling import random_cycle

F2, Q = Field.F2, Field.Q


def cyc(field, n, verts, closing=None):
    """The cycle v0 v1 ... vk v0 as a 1-chain; over Q all edges point forward."""
    terms = {}
    for a, b in zip(verts, verts[1:] + verts[:1]):
        s = tuple(sorted((a, b)))
        terms[s] = 1 if field is F2 else (1 if a < b else -1)
    return Chain(field, 1, n, terms)


def check(cert: FillCertificate, m: int):
    assert boundary(cert.filling) == cert.target
    assert is_acyclic(cert.filling.support, cert.field, max(cert.universe))
    assert cert.deficit == comb(m - 1, cert.d) - len(cert.filling)
    for frame in cert.transcript.walk():
        assert frame.additive()


# ---------------------------------------------------------------------------
# d = 1


def test_dim1_two_points_gives_hamiltonian_path():
    t = fill_dim1({1, 5}, range(1, 6))
    assert len(t) == 4 and odd_set(t) == {1, 5}
    assert is_acyclic(t.support, F2, 5)


def test_dim1_forced_leaf():
    t = fill_dim1({1, 2, 3, 4}, range(1, 6), forced_leaf=(1, 5))
    assert (1, 5) in t.support and degree(1, t) == 1
    assert odd_set(t) == {1, 2, 3, 4} and len(t) == 4


def test_dim1_rational_target():
    z = Chain(Q, 0, 4, {(1,): 1, (2,): -1})
    t = fill_dim1(z, range(1, 5))
    assert boundary(t) == z and len(t) == 3 and is_acyclic(t.support, Q, 4)


def test_dim1_rejects_odd_set_of_odd_size():
    with pytest.raises(ChainError):
        fill_dim1({1, 2, 3}, range(1, 5))


@pytest.mark.parametrize("n", [4, 5])
def test_many_one_fillings_with_fixed_pivot(n):
    z = Chain(F2, 0, n, {(1,): 1, (n,): 1})
    trees = list(distinct(fill_peeling(z, list(range(1, n + 1)), "first")))
    assert len(trees) >= factorial(n - 2)
    assert all(len(t) == n - 1 and odd_set(t) == {1, n} for t in trees)


# ---------------------------------------------------------------------------
# d = 2 over F2


def test_triangle_at_four_vertices_has_unique_filling(census):
    tri = cyc(F2, 4, [1, 2, 3])
    certs = fill_dim2_f2(tri, None, 2)
    assert len(certs) == 1 and certs[0].deficit == 0
    assert census(4, 2).counts_for(tri) == (1, 0)


def test_square_at_four_vertices_has_two_near_fillings(census):
    sq = cyc(F2, 4, [1, 2, 3, 4])
    certs = fill_dim2_f2(sq, None, 2)
    assert [c.deficit for c in certs] == [1, 1]
    assert census(4, 2).counts_for(sq) == (0, 2)


def test_parity_failure_forces_deficit_one(census):
    tri = cyc(F2, 6, [1, 2, 3])
    assert not parity_status(tri, 6).holds
    certs = fill_dim2_f2(tri, None, 2)
    assert [c.deficit for c in certs] == [1, 1] and len(certs[0].filling) == 9
    assert census(6, 2).counts_for(tri)[0] == 0


@pytest.mark.parametrize("n", [5, 6])
def test_dim2_f2_matches_census_exhaustively(n, census):
    rep = census(n, 2)
    for idx in range(1, rep.num_cycles + 1):
        z = rep.cycle(idx)
        c0, c1 = rep.counts_for(z)
        certs = fill_dim2_f2(z, None, 2)
        assert certs[0].deficit == (0 if c0 else 1)
        assert (certs[0].deficit == 0) == parity_status(z, n).holds
        assert len(certs) == 2
        for c in certs:
            check(c, n)


@pytest.mark.parametrize("n", range(8, 13))
def test_dim2_f2_random_larger(n):
    rng = random.Random(n)
    for _ in range(6):
        z = random_cycle(rng, F2, n, 2, 0.25)
        certs = fill_dim2_f2(z, None, 2)
        assert len(certs) == 2 and certs[0].filling != certs[1].filling
        assert (certs[0].deficit == 0) == parity_status(z, n).holds
        for c in certs:
            assert c.deficit <= 1
            check(c, n)


def test_largest_strategy_also_verifies():
    z = cyc(F2, 8, [1, 3, 5, 7, 2])
    for c in fill_dim2_f2(z, None, 2, strategy="largest"):
        check(c, 8)


def test_zero_and_non_cycles_are_rejected():
    with pytest.raises(ChainError):
        fill_dim2_f2(Chain(F2, 1, 5))
    with pytest.raises(NotACycleError):
        fill_dim2_f2(Chain(F2, 1, 5, {(1, 2): 1}))
    with pytest.raises(ChainError):
        fill_dim2_f2(cyc(Q, 5, [1, 2, 3]))


def test_universe_must_contain_target():
    with pytest.raises(ChainError):
        fill(FillRequest(cyc(F2, 5, [1, 2, 5]), (1, 2, 3, 4), F2, 1))


# ---------------------------------------------------------------------------
# d = 2 over Q


def test_exceptional_square_at_four_vertices():
    sq = cyc(Q, 4, [1, 2, 3, 4])
    certs = fill_dim2_q(sq, None, 2)
    assert [c.deficit for c in certs] == [1, 1] and all(len(c.filling) == 2 for c in certs)
    assert q_zero_deficit_fillings(sq, 4) == []


def test_exceptional_triangle_at_five_vertices():
    tri = cyc(Q, 5, [1, 2, 3])
    assert fill_dim2_q(tri)[0].deficit == 1
    assert q_zero_deficit_fillings(tri, 5) == []


def test_triangle_on_its_own_three_vertices_is_one_simplex():
    tri = simplex_boundary(Q, 3, (1, 2, 3))
    (cert,) = fill_dim2_q(tri)
    assert cert.filling == Chain(Q, 2, 3, {(1, 2, 3): 1}) and cert.deficit == 0


def test_triangle_at_four_vertices_over_q():
    certs = fill_dim2_q(simplex_boundary(Q, 4, (1, 2, 3)), None, 2)
    assert certs[0].deficit == 0 and len(certs[0].filling) == 3


def test_unit_hexagon_has_two_zero_deficit_fillings():
    certs = fill_dim2_q(cyc(Q, 6, [1, 2, 3, 4, 5, 6]), None, 2)
    assert [c.deficit for c in certs] == [0, 0] and certs[0].filling != certs[1].filling
    for c in certs:
        check(c, 6)


def test_q_zero_deficit_exists_beyond_exceptions():
    assert q_zero_deficit_fillings(cyc(Q, 6, [1, 2, 3]), 6)
    assert q_zero_deficit_fillings(cyc(Q, 5, [1, 2, 3, 4]), 5)


def test_weighted_rational_cycle():
    z = Fraction(2, 3) * simplex_boundary(Q, 7, (1, 2, 5)) - 4 * simplex_boundary(Q, 7, (2, 3, 6))
    certs = fill_dim2_q(z, None, 2)
    assert len(certs) == 2
    for c in certs:
        assert c.deficit == 0
        check(c, 7)


# ---------------------------------------------------------------------------
# d = 3 over F2


def test_friendliness():
    assert not is_friendly(simplex_boundary(F2, 5, (1, 2, 3, 4)))
    z = simplex_boundary(F2, 5, (1, 2, 3, 5)) + simplex_boundary(F2, 5, (2, 3, 4, 5))
    degs = {v: degree(v, z) for v in z.vertices}
    assert is_friendly(z) == (len({d % 2 for d in degs.values()}) == 2)
    with pytest.raises(ChainError):
        is_friendly(cyc(F2, 4, [1, 2, 3]))


def test_dim3_tetrahedron_on_four_vertices():
    (cert,) = fill_dim3_f2(simplex_boundary(F2, 4, (1, 2, 3, 4)))
    assert cert.filling == Chain(F2, 3, 4, {(1, 2, 3, 4): 1}) and cert.deficit == 0


def test_dim3_tetrahedron_boundary_on_eight_vertices():
    certs = fill_dim3_f2(simplex_boundary(F2, 8, (1, 2, 3, 4)), None, 2)
    assert [c.deficit for c in certs] == [0, 0]
    for c in certs:
        assert len(c.filling) == 35
        check(c, 8)


@pytest.mark.parametrize("n", range(8, 12))
def test_dim3_random_cycles(n):
    rng = random.Random(100 + n)
    for _ in range(4):
        z = random_cycle(rng, F2, n, 3, 0.08)
        certs = fill_dim3_f2(z, None, 2)
        assert len(certs) == 2
        for c in certs:
            assert c.deficit <= 1
            if is_friendly(z):
                assert c.deficit == 0
            check(c, n)


def test_dim3_friendly_transcript_records_degree_profile():
    rng = random.Random(5)
    z = next(z for z in (random_cycle(rng, F2, 9, 3, 0.08) for _ in range(50)) if is_friendly(z))
    cert = fill_dim3_f2(z)[0]
    top = cert.transcript
    assert top.note == "friendly"
    profile = top.extra["profile"]
    assert profile["pivot"] == top.pivot


def test_dim3_small_universe_against_census(census):
    rep = census(6, 3)
    for idx in range(1, rep.num_cycles + 1, 7):
        z = rep.cycle(idx)
        c0, c1 = rep.counts_for(z)
        if not (c0 or c1):
            continue
        certs = fill_dim3_f2(z, None, 2)
        assert certs[0].deficit == (0 if c0 else 1)
        assert len(certs) == min(2, c0 if c0 else c1)


# ---------------------------------------------------------------------------
# small universes and general d


def test_base_case_f2_dim3():
    certs = base_case_small_n(simplex_boundary(F2, 5, (1, 2, 3, 4)))
    assert len(certs) == 2 and certs[0].filling != certs[1].filling
    for c in certs:
        assert c.deficit <= 3 and len(c.filling) <= 4
        check(c, 5)


def test_base_case_q_dim4_two_fillings():
    z = simplex_boundary(Q, 6, (1, 2, 3, 4, 5)) - simplex_boundary(Q, 6, (1, 2, 3, 4, 6))
    certs = base_case_small_n(z)
    assert len(certs) == 2 and certs[0].filling != certs[1].filling
    for c in certs:
        assert c.deficit <= 4
        check(c, 6)


def test_base_case_rejects_wrong_size_and_zero():
    with pytest.raises(FillError):
        base_case_small_n(simplex_boundary(F2, 6, (1, 2, 3, 4)))
    with pytest.raises(ChainError):
        base_case_small_n(Chain(Q, 2, 5))


@pytest.mark.parametrize("field,d,n", [(F2, 4, 9), (Q, 3, 7), (Q, 4, 8), (F2, 5, 9)])
def test_general_recursion(field, d, n):
    z = simplex_boundary(field, n, tuple(range(1, d + 2)))
    (cert,) = fill_general(z)
    check(cert, n)
    assert cert.deficit <= 2 * n ** max(d - 3, 0)
    leaves = [f for f in cert.transcript.walk() if f.is_leaf]
    assert any(f.note == "small universe" for f in leaves) or d == 3


def test_zero_target_gives_empty_filling():
    (cert,) = fill(FillRequest(Chain(F2, 1, 5), None, F2, 1))
    assert not cert.filling


# ---------------------------------------------------------------------------
# certificates


def test_certificate_json_round_trip():
    cert = fill_dim2_q(cyc(Q, 6, [1, 3, 5]))[0]
    text = cert.to_json()
    back = FillCertificate.from_json(text)
    back.verify()
    assert back.filling == cert.filling and back.to_json() == text
    data = json.loads(text)
    assert data["schema_version"] == 1 and data["field"] == "Q"


def test_tampered_certificate_is_rejected():
    cert = fill_dim2_f2(cyc(F2, 7, [1, 2, 3]))[0]
    data = json.loads(cert.to_json())
    data["deficit"] = 5
    with pytest.raises(VerificationError):
        FillCertificate.from_json(json.dumps(data))
    bad = FillCertificate(cert.filling, cert.target, cert.universe, 3, cert.transcript)
    with pytest.raises(VerificationError):
        bad.verify()


def test_recursion_records_are_additive():
    cert = fill_dim2_f2(cyc(F2, 9, [1, 4, 7, 2]))[0]
    recs = cert.recursion_records()
    assert recs and recs[0][0] in {1, 2, 4, 7}
    assert sum(r[1] for r in recs) + cert.transcript.walk().__next__().deficit >= cert.deficit
