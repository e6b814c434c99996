from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_dyck_runs, coprime_pairs
from ratnc.errors import BadLength, BadSum, BelowDiagonal, NoNorthStep, NotCoprime, PathError, ResourceLimit
from ratnc.paths import (
    CoprimePair,
    Laser,
    catalan,
    enumerate_paths,
    fire_laser,
    from_ne,
    laser_hits_interior,
    laser_set,
    parse_path,
    rot_path,
    rot_prime,
    transpose,
    validate,
    weight_labels,
)

RANK_TWO_RUNS = (2, 1, 2, 2, 2, 0, 1)  # (10,7)


def test_validate_examples():
    D = validate((3, 1, 2, 1), (7, 4))
    assert D.ne_string() == "NNNENENNENE"
    assert from_ne("NNNENENNENE") == D
    assert validate((5, 0, 0), (5, 3)).runs == (5, 0, 0)
    assert validate((1, 1, 0, 1, 0), (3, 5)).runs == (1, 1, 0, 1, 0)


def test_validate_below_diagonal_reports_first_prefix():
    with pytest.raises(BelowDiagonal) as err:
        validate((1, 0, 2, 0, 0), (3, 5))
    assert err.value.k == 2


@pytest.mark.parametrize("runs,pair,exc", [
    ((2, 0), (4, 2), NotCoprime),
    ((3, 1), (4, 3), BadLength),
    ((3, 1, 1), (4, 3), BadSum),
])
def test_validate_errors(runs, pair, exc):
    with pytest.raises(exc):
        validate(runs, pair)


def test_pair_requires_b_at_least_two():
    with pytest.raises(PathError):
        CoprimePair(3, 1)


def test_parse_both_formats():
    pair = CoprimePair(7, 4)
    assert parse_path("3,1,2,1", pair) == parse_path("NNNENENNENE", pair)
    assert str(parse_path(" nnnenennene ", pair)) == "3,1,2,1"
    with pytest.raises(PathError):
        parse_path("3;1;2;1", pair)


def test_enumerate_small_cases():
    assert len(enumerate_paths((3, 5))) == 7
    assert [D.runs for D in enumerate_paths((2, 3))] == [(1, 1, 0), (2, 0, 0)]
    for b in range(2, 8):
        assert [D.runs for D in enumerate_paths((1, b))] == [(1,) + (0,) * (b - 1)]


@pytest.mark.parametrize("a,b", list(coprime_pairs(12)))
def test_enumerate_matches_brute_force_in_lex_order(a, b):
    runs = [D.runs for D in enumerate_paths((a, b))]
    assert runs == brute_dyck_runs(a, b)
    assert len(runs) == catalan(a, b)


def test_enumerate_resource_limit():
    with pytest.raises(ResourceLimit):
        enumerate_paths((13, 11), cap=1000)


def test_rank_two_path_lasers():
    D = validate(RANK_TWO_RUNS, (10, 7))
    assert fire_laser(D, 3) == Laser(3, 5)
    assert laser_set(D) == {(1, 1), (2, 6), (3, 5), (4, 5), (6, 6)}
    with pytest.raises(NoNorthStep):
        fire_laser(D, 5)


def test_laser_set_edge_cases():
    assert laser_set(validate((7, 0, 0, 0), (7, 4))) == frozenset()
    assert laser_set(from_ne("NNNNNENENEE")) == {(1, 1), (2, 2)}


@pytest.mark.parametrize("a,b", [(3, 5), (5, 3), (7, 4), (4, 7), (10, 7), (7, 10)])
def test_lasers_end_strictly_inside_east_steps(a, b):
    for D in enumerate_paths((a, b)):
        for i in range(1, b):
            if D.runs[i]:
                assert laser_hits_interior(D, fire_laser(D, i))


def test_transpose_example_and_involution():
    D = from_ne("NNNNENENNE")
    assert transpose(D).ne_string() == "NEENENEEEE"
    assert transpose(validate((5, 0, 0), (5, 3))).ne_string() == "NNNEEEEE"
    for E in enumerate_paths((3, 5)):
        assert transpose(transpose(E)) == E


@pytest.mark.parametrize("a,b", [(3, 5), (7, 4), (5, 8)])
def test_transpose_is_a_bijection(a, b):
    image = {transpose(D) for D in enumerate_paths((a, b))}
    assert image == set(enumerate_paths((b, a)))


def test_transpose_does_not_commute_with_rotation():
    D = from_ne("NNNNENENNE")
    assert transpose(rot_path(D)) != rot_path(transpose(D))


def test_rot_prime_fixes_the_maximal_path():
    D = validate((7, 0, 0, 0), (7, 4))
    assert rot_prime(D) == D


@pytest.mark.parametrize("a,b", [(5, 3), (7, 4), (10, 7), (3, 7), (4, 7)])
def test_rot_prime_order_and_runs(a, b):
    for D in enumerate_paths((a, b)):
        E = D
        for _ in range(b - 1):
            E = rot_prime(E)
            assert Counter(E.runs) == Counter(D.runs)
        assert E == D
        assert rot_path(rot_prime(D)) == D


def test_weight_labels_worked_example():
    # doubled (11,7) walk from the combined sequence (1,3,1)
    wp = weight_labels((1, 3, 1, 1, 3, 1), 11, 7)
    (x, y), w = wp.min_point
    assert w == -4
    assert (x, y) == (1, 1)  # bottom of the run of length 3
    weights = [w for _, w in wp.points]
    assert len(set(weights)) == len(weights)


def test_weight_labels_trivial_paths():
    wp = weight_labels((5, 0, 0), 5, 3)
    assert wp.min_point == ((0, 0), 0)
    wp = weight_labels((0, 0, 0), 5, 3)
    assert wp.min_point == ((3, 0), -15)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(coprime_pairs(11))), st.data())
def test_round_trips_on_random_paths(pair, data):
    paths = enumerate_paths(pair)
    D = data.draw(st.sampled_from(paths))
    assert validate(D.runs, pair) == D
    assert parse_path(D.ne_string(), D.pair) == D
    if D.a >= 2:
        assert transpose(transpose(D)) == D
