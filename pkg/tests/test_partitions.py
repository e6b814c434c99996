from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_mutually_noncrossing, brute_noncrossing, geometric_kreweras
from ratnc.errors import HeightMismatch, NotMember, NotNoncrossing
from ratnc.partitions import (
    LabeledNCPair,
    SetPartition,
    all_set_partitions,
    enumerate_nc,
    is_noncrossing,
    kreweras,
    mutually_noncrossing,
    noncrossing_partitions,
    pair_to_path,
    pi_map,
    rank_sequences,
    reflect_pair,
    rotate_pair,
)
from ratnc.paths import CoprimePair, catalan, enumerate_paths, from_ne, laser_set, rot_prime, validate

RANK_TWO_RUNS = (2, 1, 2, 2, 2, 0, 1)
SYMMETRIC_RUNS = (3, 0, 2, 3, 0, 1, 1)


def sp(n, *blocks):
    return SetPartition.of(blocks, n)


def test_is_noncrossing_examples():
    assert is_noncrossing(sp(6, (1, 3), (2,), (4,), (5, 6)))
    assert not is_noncrossing(sp(4, (1, 3), (2, 4)))
    assert is_noncrossing(sp(5, *[(i,) for i in range(1, 6)]))


@pytest.mark.parametrize("n", range(1, 8))
def test_is_noncrossing_matches_quadruple_search(n):
    for P in all_set_partitions(n):
        assert is_noncrossing(P) == brute_noncrossing(P)


def test_noncrossing_counts_are_catalan_numbers():
    assert [len(noncrossing_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]


def test_kreweras_example():
    assert kreweras(sp(6, (1, 3), (2,), (4,), (5, 6))) == sp(6, (1, 2), (3, 4, 6), (5,))
    assert kreweras(sp(5, (1, 2, 3, 4, 5))) == sp(5, *[(i,) for i in range(1, 6)])
    with pytest.raises(NotNoncrossing):
        kreweras(sp(4, (1, 3), (2, 4)))


@pytest.mark.parametrize("n", range(1, 7))
def test_kreweras_matches_geometric_definition(n):
    for P in noncrossing_partitions(n):
        K = kreweras(P)
        assert K == geometric_kreweras(P)
        assert len(P) + len(K) == n + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_kreweras_squared_is_rotation_by_minus_one(n):
    # i -> i-1 on labels; the opposite direction fails already for n = 3
    for P in noncrossing_partitions(n):
        assert kreweras(kreweras(P)) == P.rotate(-1)


def test_kreweras_squared_is_not_forward_rotation():
    P = sp(3, (1, 2), (3,))
    assert kreweras(kreweras(P)) != P.rotate(1)


def test_mutually_noncrossing_examples():
    P = sp(6, (1,), (2, 6), (3, 5), (4,))
    Q = sp(6, (1, 4), (2,), (3,), (5,), (6,))
    assert not mutually_noncrossing(P, Q)
    singles = sp(6, *[(i,) for i in range(1, 7)])
    for R in noncrossing_partitions(6):
        assert mutually_noncrossing(R, kreweras(R))
        assert mutually_noncrossing(R, singles)


@pytest.mark.parametrize("n", range(1, 6))
def test_mutually_noncrossing_matches_brute_force(n):
    nc = noncrossing_partitions(n)
    for P1 in nc:
        for P2 in nc:
            assert mutually_noncrossing(P1, P2) == brute_mutually_noncrossing(P1, P2)


def test_rank_two_pair():
    pq = pi_map(validate(RANK_TWO_RUNS, (10, 7)))
    assert str(pq) == "P={{1,2}:2, {3,6}:2, {4}:2, {5}:2} Q={{1}:1, {2,6}:1, {3,4,5}:0}"


def test_symmetric_pair_and_rank_sequences():
    pq = pi_map(validate(SYMMETRIC_RUNS, (10, 7)))
    rs = rank_sequences(pq)
    assert rs.S_P == (3, 0, 2, 3, 0, 0)
    assert rs.S_Q == (0, 0, 0, 0, 1, 1)
    assert rs.R == SYMMETRIC_RUNS
    assert pair_to_path(pq).runs == SYMMETRIC_RUNS


def test_five_three_paths_share_p():
    p1 = pi_map(from_ne("NNNENNEE"))
    p2 = pi_map(from_ne("NNENNNEE"))
    assert p1.p_partition == p2.p_partition == sp(2, (1,), (2,))
    assert all(r == 0 for _, r in p1.Q + p2.Q)
    assert [r for _, r in p1.P] == [3, 2]
    assert [r for _, r in p2.P] == [2, 3]


def test_pair_to_path_candidates():
    pair = CoprimePair(7, 4)
    pq = LabeledNCPair.build(pair, {(1, 3): 5, (2,): 1}, {(1, 2): 1, (3,): 0})
    assert pair_to_path(pq).ne_string() == "NNNNNENENEE"
    top = LabeledNCPair.build(pair, {(1, 2, 3): 7}, {(1,): 0, (2,): 0, (3,): 0})
    assert pair_to_path(top).runs == (7, 0, 0, 0)
    short = LabeledNCPair.build(pair, {(1, 2, 3): 6}, {(1,): 0, (2,): 0, (3,): 0})
    with pytest.raises(HeightMismatch):
        pair_to_path(short)


def test_json_round_trip_is_canonical():
    pq = pi_map(validate(SYMMETRIC_RUNS, (10, 7)))
    text = pq.to_json()
    d = json.loads(text)
    assert list(d) == ["a", "b", "P", "Q"]
    assert [blk["block"][0] for blk in d["P"]] == sorted(blk["block"][0] for blk in d["P"])
    assert LabeledNCPair.from_json(text) == pq


@pytest.mark.parametrize("a,b", [(3, 5), (5, 3), (7, 4), (4, 7), (10, 7), (2, 9), (9, 2)])
def test_pair_invariants_over_enumeration(a, b):
    pair = CoprimePair(a, b)
    seen = set()
    for D in enumerate_paths(pair):
        pq = pi_map(D)
        assert pq not in seen
        seen.add(pq)
        P, Q = pq.p_partition, pq.q_partition
        assert is_noncrossing(P) and is_noncrossing(Q)
        assert mutually_noncrossing(P, Q)
        assert Q == kreweras(P)
        assert pq.total_rank() == a
        assert all(r * b > a for _, r in pq.P)
        assert all(r * b < a for _, r in pq.Q)
        mins = {B[0] for B, _ in pq.P}
        assert not any(r > 0 and B[-1] + 1 in mins for B, r in pq.Q)
        for C, _ in pq.Q:
            assert len({P.block_of(i) for i in C}) == len(C)
        rs = rank_sequences(pq)
        assert rs.R[0] == rs.S_P[0] and rs.R[-1] == rs.S_Q[-1]
        assert pair_to_path(pq) == D
        # lasers recovered from the partitions alone
        expect = {(i, C[-1]) for C in Q.blocks for i in C if i != C[-1]}
        expect |= {(C[-1], C[-1]) for C, r in pq.Q if r}
        assert laser_set(D) == expect
    assert len(seen) == catalan(a, b)


@pytest.mark.parametrize("a,b", [(7, 4), (10, 7), (7, 3), (5, 8)])
def test_rot_prime_rotates_pairs_backwards(a, b):
    for D in enumerate_paths((a, b)):
        assert pi_map(rot_prime(D)) == rotate_pair(pi_map(D), -1, check=False)


def test_rotation_orbits_close_up():
    nc = enumerate_nc((10, 7))
    members = set(nc)
    for pq in nc:
        r = rotate_pair(pq, check=False)
        assert r in members
        assert sorted(r.positive_ranks()) == sorted(pq.positive_ranks())
        assert rotate_pair(pq, 6, check=False) == pq


def test_rotate_and_reflect_fix_the_top_pair():
    top = pi_map(validate((10, 0, 0, 0, 0, 0, 0), (10, 7)))
    assert rotate_pair(top) == top
    assert reflect_pair(top) == top


def test_reflection():
    small = enumerate_nc((5, 3))
    assert all(reflect_pair(reflect_pair(pq)) == pq for pq in small)
    nc = enumerate_nc((10, 7))
    assert {reflect_pair(pq, check=False) for pq in nc} == set(nc)


def test_rotate_rejects_non_members():
    pq = LabeledNCPair.build((7, 4), {(1, 3): 5, (2,): 1}, {(1, 2): 1, (3,): 0})
    with pytest.raises(NotMember):
        rotate_pair(pq)
    with pytest.raises(NotMember):
        reflect_pair(pq)


def test_degenerate_ground_set():
    nc = enumerate_nc((3, 2))
    assert len(nc) == catalan(3, 2) == 2
    assert all(rotate_pair(pq) == pq for pq in nc)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 5), (5, 3), (7, 4), (4, 7), (8, 5), (5, 8)]), st.data())
def test_path_pair_round_trip(pair, data):
    D = data.draw(st.sampled_from(enumerate_paths(pair)))
    pq = pi_map(D)
    assert pair_to_path(pq) == D
    assert pi_map(pair_to_path(pq)) == pq
