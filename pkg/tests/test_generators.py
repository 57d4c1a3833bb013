from math import comb

import pytest

from lcsenum.bounds import d_upper_distinct_chars
from lcsenum.enumeration import count_distinct, count_embeddings, enumerate_naive, iter_distinct
from lcsenum.errors import DomainError
from lcsenum.generators import gen_max_distinct, gen_max_embeddings, gen_no_match, gen_single_match
from lcsenum.oracle import oracle_distinct, oracle_embeddings

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def letters(seq):
    return "".join(LETTERS[s] for s in seq)


def assert_expectation(inst, use_oracle=True):
    exp = inst.expected
    dist = list(iter_distinct(inst.a, inst.b))
    assert len(dist[0]) == exp.expected_l
    assert count_distinct(inst.a, inst.b).count == exp.expected_distinct_count == len(dist)
    assert count_embeddings(inst.a, inst.b).count == exp.expected_embedding_count
    if exp.unique_lcs is not None:
        assert dist == [exp.unique_lcs]
    if use_oracle:
        assert len(oracle_distinct(inst.a, inst.b)) == exp.expected_distinct_count
        assert len(oracle_embeddings(inst.a, inst.b)) == exp.expected_embedding_count
    if exp.expected_naive_outputs is not None:
        assert enumerate_naive(inst.a, inst.b).outputs_emitted == exp.expected_naive_outputs


def test_max_distinct_t6():
    g = gen_max_distinct(6)
    assert (letters(g.a), letters(g.b)) == ("abc", "cba")
    assert count_distinct(g.a, g.b).count == 3


def test_max_distinct_t8():
    g = gen_max_distinct(8)
    assert (letters(g.a), letters(g.b)) == ("abcd", "badc")
    assert {letters(w) for w in oracle_distinct(g.a, g.b)} == {"ac", "ad", "bc", "bd"}


def test_max_distinct_t10():
    g = gen_max_distinct(10)
    assert len(g.a) == len(g.b) == 5
    assert (letters(g.a), letters(g.b)) == ("abcde", "baedc")
    assert len(oracle_distinct(g.a, g.b)) == 6


@pytest.mark.parametrize("t", range(4, 25))
def test_max_distinct_shape(t):
    g = gen_max_distinct(t)
    h = t // 2
    assert len(g.a) == len(g.b) == h
    assert len(set(g.a)) == h and set(g.a) == set(g.b)
    assert g.metadata["unused_chars"] == t % 2
    assert g.expected.expected_distinct_count == d_upper_distinct_chars(t)
    assert_expectation(g, use_oracle=t <= 24)


def test_max_distinct_domain():
    with pytest.raises(DomainError):
        gen_max_distinct(3)


def test_max_embeddings_examples():
    g = gen_max_embeddings(4, 4, 2)
    assert (letters(g.a), letters(g.b)) == ("aaab", "abbb")
    assert g.expected.expected_embedding_count == 9
    g = gen_max_embeddings(2, 3, 1, y=1)
    assert (letters(g.a), letters(g.b)) == ("ab", "bbb")
    assert len(oracle_embeddings(g.a, g.b)) == 3
    g = gen_max_embeddings(3, 3, 3)
    assert g.a == g.b == g.expected.unique_lcs
    assert g.expected.expected_embedding_count == 1


def test_max_embeddings_all_small():
    for n in range(7):
        for m in range(n + 1):
            for l in range(m + 1):
                for y in range(l + 1):
                    assert_expectation(gen_max_embeddings(m, n, l, y))


def test_max_embeddings_domain():
    with pytest.raises(DomainError):
        gen_max_embeddings(5, 4, 2)
    with pytest.raises(DomainError):
        gen_max_embeddings(4, 4, 2, y=3)


@pytest.mark.parametrize("m,n", [(2, 2), (1, 1), (3, 3), (2, 5)])
def test_no_match(m, n):
    g = gen_no_match(m, n)
    assert g.expected.expected_naive_outputs == comb(m + n, m)
    assert_expectation(g)


@pytest.mark.parametrize("m,n,outputs", [(3, 3, 6), (1, 1, 1), (5, 5, 70), (2, 4, 4)])
def test_single_match(m, n, outputs):
    g = gen_single_match(m, n)
    matches = [(i, j) for i, x in enumerate(g.a, 1) for j, y in enumerate(g.b, 1) if x == y]
    assert matches == [(1, 1)]
    assert g.expected.expected_naive_outputs == outputs
    assert_expectation(g)
