import itertools
from functools import cmp_to_key

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import monomials
from nullcert.monomial import (
    AFTER,
    BEFORE,
    EQUAL,
    mono_compare,
    mono_rank,
    mono_unrank,
    monomials_of_degree,
    monomials_up_to,
)


def prose_cmp(a, b):
    """The ordering rule as worded: lower total degree first; otherwise find the
    largest j with a[:j-1] == b[:j-1] and put the higher exponent of z_j first."""
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    j = 0
    while j < len(a) and a[:j + 1] == b[:j + 1]:
        j += 1
    if j == len(a):
        return 0
    return -1 if a[j] > b[j] else 1


def oracle_order(n, max_deg):
    everything = [m for m in itertools.product(range(max_deg + 1), repeat=n) if sum(m) <= max_deg]
    return sorted(everything, key=cmp_to_key(prose_cmp))


def test_two_variable_chain():
    chain = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert [mono_unrank(r, 2) for r in range(1, 7)] == chain
    assert [mono_rank(m) for m in chain] == [1, 2, 3, 4, 5, 6]


def test_compare_examples():
    assert mono_compare((2, 0), (1, 1)) == BEFORE
    assert mono_compare((1, 1), (1, 1)) == EQUAL
    assert mono_compare((1, 0, 1), (0, 2, 0)) == BEFORE
    assert mono_compare((0, 2), (1, 1)) == AFTER


def test_compare_length_mismatch():
    with pytest.raises(ValueError):
        mono_compare((1,), (1, 0))


def test_rank_examples():
    assert mono_rank((0, 0)) == 1
    assert mono_rank((1, 1)) == 5
    # enumerate-and-sort oracle for n=3 up to degree 2
    order = oracle_order(3, 2)
    assert order.index((0, 0, 2)) + 1 == 10
    assert mono_rank((0, 0, 2)) == 10


def test_unrank_examples():
    assert mono_unrank(2, 2) == (1, 0)
    assert mono_unrank(1, 7) == (0,) * 7
    assert mono_unrank(6, 2) == (0, 2)
    with pytest.raises(ValueError):
        mono_unrank(0, 2)


@pytest.mark.parametrize("n,max_deg", [(1, 60), (2, 20), (3, 10), (4, 7), (5, 6), (6, 5)])
def test_rank_matches_enumeration_oracle(n, max_deg):
    order = oracle_order(n, max_deg)
    for r, m in enumerate(order, start=1):
        assert mono_rank(m) == r
        assert mono_unrank(r, n) == m


def test_generators_follow_natural_order():
    for n in (1, 2, 3):
        assert list(monomials_up_to(n, 4)) == oracle_order(n, 4)
        assert all(sum(m) == 3 for m in monomials_of_degree(n, 3))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(monomials(n, 4), monomials(n, 4), monomials(n, 4))))
def test_total_order(triple):
    a, b, c = triple
    assert mono_compare(a, b) == -mono_compare(b, a)
    assert (mono_compare(a, b) == EQUAL) == (a == b)
    if mono_compare(a, b) == BEFORE and mono_compare(b, c) == BEFORE:
        assert mono_compare(a, c) == BEFORE
    assert (mono_compare(a, b) == BEFORE) == (mono_rank(a) < mono_rank(b))


@given(st.integers(1, 6), st.integers(1, 10_000))
def test_unrank_inverts_rank(n, N):
    assert mono_rank(mono_unrank(N, n)) == N
