import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsenum.core import (
    Embedding, MatchPoint, backtrace_one, build_dp, build_suffix_dp, check_sequence, crossings,
    embedding_is_valid, lcs_length, match_points,
)
from lcsenum.errors import CapacityError
from lcsenum.oracle import oracle_distinct

seqs = st.lists(st.integers(0, 3), max_size=12)


def brute_lcs_length(a, b):
    return len(next(iter(oracle_distinct(a, b))))


def assert_table_invariants(a, b, t):
    a, b = check_sequence(a), check_sequence(b)
    r = t.ranks
    assert len(r) == len(a) + 1 and all(len(row) == len(b) + 1 for row in r)
    assert all(r[0][j] == 0 for j in range(len(b) + 1))
    assert all(r[i][0] == 0 for i in range(len(a) + 1))
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            assert 0 <= r[i][j] - r[i - 1][j] <= 1
            assert 0 <= r[i][j] - r[i][j - 1] <= 1
            assert 0 <= r[i][j] - r[i - 1][j - 1] <= 1
            if a[i - 1] == b[j - 1]:
                assert r[i][j] == r[i - 1][j - 1] + 1
            else:
                assert r[i][j] == max(r[i - 1][j], r[i][j - 1])


def test_build_dp_worked_pair():
    t = build_dp("abcda", "cbadc")
    assert t[5, 5] == 2
    assert t.lcs_length == 2
    assert_table_invariants("abcda", "cbadc", t)


def test_build_dp_hand_table():
    # "ab" vs "bb", filled by hand
    assert build_dp("ab", "bb").ranks == ((0, 0, 0), (0, 0, 0), (0, 1, 1))


@pytest.mark.parametrize("a,b", [("", "xyz"), ("aa", "bb"), ("", "")])
def test_build_dp_all_zero(a, b):
    t = build_dp(a, b)
    assert all(v == 0 for row in t.ranks for v in row)


@pytest.mark.parametrize("a,b,expected", [("abcda", "cbadc", 2), ("abc", "abc", 3), ("aa", "bb", 0)])
def test_lcs_length(a, b, expected):
    assert lcs_length(a, b) == expected


def test_capacity_error():
    with pytest.raises(CapacityError):
        build_dp("abc", "abc", max_cells=15)
    build_dp("abc", "abc", max_cells=16)


def test_suffix_table_matches_brute_force():
    a, b = "abcab", "bacba"
    suf = build_suffix_dp(a, b)
    for i in range(len(a) + 1):
        for j in range(len(b) + 1):
            assert suf[i][j] == brute_lcs_length(a[i:], b[j:])


@pytest.mark.parametrize("a,b,expected", [
    ("abc", "abc", Embedding((1, 2, 3), (1, 2, 3))),
    ("aa", "bb", Embedding()),
    ("ab", "bb", Embedding((2,), (2,))),
])
def test_backtrace_one(a, b, expected):
    assert backtrace_one(a, b, build_dp(a, b)) == expected


@pytest.mark.parametrize("e,l,expected", [
    (Embedding((2,), (1,)), 1, True),
    (Embedding((1,), (1,)), 1, False),
    (Embedding(), 0, True),
    (Embedding((2,), (1,)), 2, False),
    (Embedding((2, 2), (1, 2)), 2, False),
    (Embedding((3,), (1,)), 1, False),
])
def test_embedding_is_valid(e, l, expected):
    assert embedding_is_valid("ab", "bb", e, l) is expected


@pytest.mark.parametrize("e1,e2,expected", [
    ((1, 3), (2, 1), True),
    ((1, 1), (2, 2), False),
    ((3, 2), (1, 4), True),
    ((1, 1), (1, 2), False),
])
def test_crossings(e1, e2, expected):
    assert crossings(e1, e2) is expected
    assert crossings(e2, e1) is expected


def test_match_points():
    pts = match_points("aab", "ab")
    assert pts == [MatchPoint(1, 1, 1, 2), MatchPoint(2, 1, 1, 2), MatchPoint(3, 2, 2, 1)]
    assert all(p.is_useful(2) for p in pts)
    # the trailing "a" of "aba" never lies on an LCS of ("aba", "ab")
    useful = match_points("aba", "ab", useful_only=True)
    assert MatchPoint(3, 1, 1, 1) not in useful


def test_check_sequence():
    assert check_sequence("ab") == (97, 98)
    assert check_sequence([0, 5]) == (0, 5)
    with pytest.raises(ValueError):
        check_sequence([-1])
    with pytest.raises(ValueError):
        check_sequence([2 ** 31])
    with pytest.raises(TypeError):
        check_sequence([1.5])
    with pytest.raises(TypeError):
        check_sequence([True])


def test_exhaustive_small_tables():
    words = [w for k in range(5) for w in itertools.product(range(3), repeat=k)]
    for a in words:
        for b in words[::7]:
            t = build_dp(a, b)
            assert_table_invariants(a, b, t)
            assert t.lcs_length == brute_lcs_length(a, b)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=64), st.lists(st.integers(0, 3), max_size=64))
def test_table_invariants_random(a, b):
    assert_table_invariants(a, b, build_dp(a, b))


@settings(max_examples=200, deadline=None)
@given(seqs, seqs)
def test_backtrace_is_valid(a, b):
    t = build_dp(a, b)
    assert embedding_is_valid(a, b, backtrace_one(a, b, t), t.lcs_length)


@settings(max_examples=200, deadline=None)
@given(seqs, seqs, st.permutations(range(4)))
def test_lcs_length_symmetric_and_renaming_invariant(a, b, perm):
    assert lcs_length(a, b) == lcs_length(b, a)
    assert lcs_length([perm[s] for s in a], [perm[s] for s in b]) == lcs_length(a, b)
