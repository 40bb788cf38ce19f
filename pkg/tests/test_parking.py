import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from shpf.core import catalan, partitions_of, schroeder
from shpf.parking import (
    SortedNaiveShifted,
    area,
    content,
    enumerate_pf,
    enumerate_schroeder_paths,
    enumerate_sorted_naive,
    enumerate_sorted_pf,
    is_parking,
    is_schroeder_path,
    naive_class_members,
    shape,
    sort_naive,
    sort_pf,
    to_schroeder_path,
)


def brute_pf(n):
    return sorted(t for t in product(range(1, n + 1), repeat=n) if is_parking(t))


def test_is_parking_examples():
    assert is_parking((1, 1, 1))
    assert not is_parking((2, 2))
    assert is_parking((4, 1, 1, 3, 6, 3))
    with pytest.raises(ValueError):
        is_parking((0, 1))


def test_statistics_examples():
    p = (4, 1, 1, 3, 6, 3)
    assert sort_pf(p) == (1, 1, 3, 3, 4, 6)
    assert content(p) == (2, 0, 2, 1, 0, 1)
    assert shape(p) == (2, 2, 1, 1)
    assert sort_pf((1, 1)) == (1, 1)
    assert area((1, 2, 3)) == 0
    assert area((1, 1, 1)) == 3
    assert area((1, 1, 2)) == 2


def test_enumeration_examples():
    assert len(list(enumerate_pf(3))) == 16
    assert len(list(enumerate_sorted_pf(3))) == 5
    assert list(enumerate_sorted_pf(2)) == [(1, 1), (1, 2)]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_pf_matches_filter_of_all_words(n):
    assert list(enumerate_pf(n)) == brute_pf(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(list(enumerate_sorted_pf(n))) == catalan(n)
    assert len(list(enumerate_sorted_naive(n))) == schroeder(n)
    if n <= 6:
        assert len(list(enumerate_pf(n))) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_shape_and_area_invariants(n):
    top = comb(n, 2)
    for p in enumerate_pf(n):
        assert sum(shape(p)) == n and shape(p) in partitions_of(n)
        assert area(p) == area(sort_pf(p))
        assert 0 <= area(p) <= top


def test_sort_naive_examples():
    assert sort_naive((1, 1), (1, -1)) == SortedNaiveShifted((1, 1), (-1, 0))
    assert sort_naive((1, 2), (-1, -1)) == SortedNaiveShifted((1, 2), (-1, -1))
    assert sort_naive((2, 1), (1, 1)) == SortedNaiveShifted((1, 2), (1, 1))


def test_sorted_naive_rejects_bad_signs():
    with pytest.raises(ValueError):
        SortedNaiveShifted((1, 1), (1, 1))
    with pytest.raises(ValueError):
        SortedNaiveShifted((2, 2), (1, 0))


def test_enumerate_sorted_naive_examples():
    assert set(enumerate_sorted_naive(1)) == {SortedNaiveShifted((1,), (1,)), SortedNaiveShifted((1,), (-1,))}
    assert len(list(enumerate_sorted_naive(2))) == 6
    assert len(list(enumerate_sorted_naive(4))) == 90


@st.composite
def naive_with_perm(draw):
    n = draw(st.integers(1, 6))
    pfs = list(enumerate_pf(n))
    p = draw(st.sampled_from(pfs))
    sigma = tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)))
    w = tuple(draw(st.permutations(range(n))))
    return p, sigma, w


@given(naive_with_perm())
def test_sort_naive_invariant_under_symmetric_group(case):
    p, sigma, w = case
    wp = tuple(p[w[j]] for j in range(len(p)))
    ws = tuple(sigma[w[j]] for j in range(len(p)))
    assert sort_naive(wp, ws) == sort_naive(p, sigma)


@pytest.mark.parametrize("n", range(1, 5))
def test_naive_class_members_partition_all_pairs(n):
    total = 0
    for x in enumerate_sorted_naive(n):
        members = naive_class_members(x)
        assert all(sort_naive(q, s) == x for q, s in members)
        total += len(members)
    assert total == (n + 1) ** (n - 1) * 2**n


def test_schroeder_examples():
    assert to_schroeder_path(SortedNaiveShifted((1,), (1,))) == "UR"
    assert to_schroeder_path(SortedNaiveShifted((1,), (-1,))) == "D"
    assert is_schroeder_path("UDR", 2) and not is_schroeder_path("RU", 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_schroeder_bijection(n):
    image = [to_schroeder_path(x) for x in enumerate_sorted_naive(n)]
    assert len(set(image)) == len(image)
    assert set(image) == set(enumerate_schroeder_paths(n))
    assert all(is_schroeder_path(s, n) for s in image)


def test_random_schroeder_paths_have_preimages():
    rng = random.Random(7)
    n = 6
    image = {to_schroeder_path(x) for x in enumerate_sorted_naive(n)}
    paths = list(enumerate_schroeder_paths(n))
    for path in rng.sample(paths, 50):
        assert path in image
