from itertools import permutations
from math import factorial

import pytest
from hypothesis import given

from fixgraph.partitions import Partition, conjugate, diagram_of, partitions_of, remove_corners, subpartitions_of_size
from fixgraph.tableaux import CapExceededError, enumerate_syt, f_skew, f_straight

from conftest import nested_pairs, partitions


def syt_by_permutations(lam, mu):
    """Count standard fillings by trying every assignment of 1..m."""
    cells = [c for c in diagram_of(lam) if c not in set(diagram_of(mu))]
    count = 0
    for values in permutations(range(1, len(cells) + 1)):
        t = dict(zip(cells, values))
        if all(
            t[(i, j)] < t.get((i, j + 1), float("inf")) and t[(i, j)] < t.get((i + 1, j), float("inf"))
            for i, j in cells
        ):
            count += 1
    return count


@pytest.mark.parametrize("lam, mu, count", [((2, 1), (), 2), ((2, 2), (1,), 2), ((2, 2), (), 2), ((3, 2, 1), (1,), 16)])
def test_enumerate_syt_examples(lam, mu, count):
    assert len(enumerate_syt(Partition(lam), Partition(mu))) == count


def test_enumerate_syt_matches_permutation_bruteforce():
    for n in range(7):
        for lam in partitions_of(n):
            for m in range(n + 1):
                for mu in subpartitions_of_size(lam, m):
                    assert len(enumerate_syt(lam, mu)) == syt_by_permutations(lam, mu)


def test_enumerate_syt_fillings_are_standard(P):
    lam, mu = P(3, 2, 2), P(1)
    skew = set(diagram_of(lam)) - set(diagram_of(mu))
    for t in enumerate_syt(lam, mu):
        assert set(t) == skew
        assert sorted(t.values()) == list(range(1, len(skew) + 1))
        for (i, j), v in t.items():
            assert v < t.get((i, j + 1), 99) and v < t.get((i + 1, j), 99)


def test_enumerate_syt_empty_shape(P):
    assert enumerate_syt(P(3, 1), P(3, 1)) == [{}]
    assert enumerate_syt(Partition(), Partition()) == [{}]


def test_enumerate_syt_errors(P):
    with pytest.raises(CapExceededError):
        enumerate_syt(P(13))
    with pytest.raises(ValueError):
        enumerate_syt(P(2, 1), P(3))


def test_f_straight_examples(P):
    assert f_straight(P(6)) == 1
    assert f_straight(P(2, 2)) == 2
    assert f_straight(P(2, 1)) == 2
    assert f_straight(Partition()) == 1


def test_f_skew_examples(P):
    assert f_skew(P(2, 2), P(1)) == 2
    assert f_skew(P(2, 1), P(3)) == 0
    for lam in partitions_of(6):
        assert f_skew(lam, Partition()) == f_straight(lam)
        assert f_skew(lam, lam) == 1


def test_hook_length_formula_vs_bruteforce():
    for n in range(8):
        for lam in partitions_of(n):
            assert f_straight(lam) == len(enumerate_syt(lam))


@given(nested_pairs(max_n=8))
def test_naruse_vs_bruteforce_sampled(pair):
    lam, mu = pair
    assert f_skew(lam, mu) == len(enumerate_syt(lam, mu))


def test_transpose_symmetry():
    for n in range(11):
        for lam in partitions_of(n):
            assert f_straight(lam) == f_straight(conjugate(lam))


@given(partitions(min_n=1, max_n=10))
def test_branching_rule(lam):
    assert f_straight(lam) == sum(f_straight(child) for child in remove_corners(lam))


def test_restriction_rule():
    for n in range(10):
        for lam in partitions_of(n):
            for m in range(n + 1):
                total = sum(f_skew(lam, mu) * f_straight(mu) for mu in subpartitions_of_size(lam, m))
                assert total == f_straight(lam)


def test_sum_of_squares():
    for n in range(10):
        assert sum(f_straight(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
