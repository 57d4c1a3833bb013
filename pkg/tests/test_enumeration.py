from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsenum.core import Embedding, build_dp, embedding_is_valid
from lcsenum.enumeration import (
    STOP, count_distinct, count_embeddings, enumerate_distinct, enumerate_embeddings,
    enumerate_naive, iter_distinct, iter_embeddings, overhead_report,
)
from lcsenum.errors import BudgetExceeded
from lcsenum.generators import gen_max_distinct, gen_single_match
from lcsenum.oracle import oracle_distinct, oracle_embeddings

small = st.lists(st.integers(0, 2), max_size=7)


def text(ws):
    return {"".join(map(chr, w)) for w in ws}


def collect(fn, a, b):
    out = []
    res = fn(a, b, out.append)
    return out, res


def test_embeddings_aab_ab():
    out, res = collect(enumerate_embeddings, "aab", "ab")
    assert out == [Embedding((1, 3), (1, 2)), Embedding((2, 3), (1, 2))]
    assert res.count == 2 and res.lcs_length == 2


def test_embeddings_identity():
    out, res = collect(enumerate_embeddings, "abc", "abc")
    assert out == [Embedding((1, 2, 3), (1, 2, 3))]


def test_embeddings_worked_pair():
    out, res = collect(enumerate_embeddings, "abcda", "cbadc")
    assert res.count == 7
    assert set(out) == oracle_embeddings("abcda", "cbadc")


def test_distinct_worked_pair():
    out, res = collect(enumerate_distinct, "abcda", "cbadc")
    assert ["".join(map(chr, w)) for w in out] == ["ac", "ad", "ba", "bc", "bd", "ca", "cd"]
    assert res.count == 7


@pytest.mark.parametrize("a,b,expected", [("abc", "abc", {"abc"}), ("ab", "ba", {"a", "b"})])
def test_distinct_small(a, b, expected):
    out, _ = collect(enumerate_distinct, a, b)
    assert text(out) == expected == text(oracle_distinct(a, b))


def test_distinct_empty_lcs():
    out, res = collect(enumerate_distinct, "aa", "bb")
    assert out == [()] and res.count == 1 and res.lcs_length == 0
    assert list(iter_embeddings("aa", "bb")) == [Embedding()]


def test_count_distinct_examples():
    assert count_distinct("abcda", "cbadc").count == 7
    g = gen_max_distinct(18)
    assert count_distinct(g.a, g.b).count == 27 == len(list(iter_distinct(g.a, g.b)))
    assert count_distinct("aa", "bb").count == 1


@pytest.mark.parametrize("a,b,expected", [("abcda", "cbadc", 7), ("aaab", "abbb", 9), ("a", "a", 1)])
def test_count_embeddings_examples(a, b, expected):
    assert count_embeddings(a, b).count == expected == len(oracle_embeddings(a, b))


def test_counts_are_big_ints():
    # a^40 vs a^80: C(80, 40) embeddings, far beyond 64 bits
    res = count_embeddings([0] * 40, [0] * 80)
    assert res.count == comb(80, 40) and res.count > 2 ** 64


def test_sink_stop():
    seen = []

    def sink(x):
        seen.append(x)
        return STOP if len(seen) == 3 else None

    res = enumerate_distinct("abcda", "cbadc", sink)
    assert len(seen) == 3 and res.count == 3 and not res.complete


@pytest.mark.parametrize("a,b,outputs", [("aa", "bb", 6), ("xaa", "xbb", 6), ("a", "a", 1)])
def test_naive_outputs(a, b, outputs):
    out = []
    stats = enumerate_naive(a, b, out.append)
    assert stats.outputs_emitted == outputs == len(out)
    assert len(set(out)) == 1
    assert stats.nodes_visited >= stats.outputs_emitted


def test_naive_xaa_emits_unique_match():
    out = []
    enumerate_naive("xaa", "xbb", out.append)
    assert set(out) == {Embedding((1,), (1,))}


def test_naive_no_match_node_count():
    # every cell is reached once per lattice path from [n, n]: sum C(i+j, i)
    for n in range(1, 7):
        nodes = sum(comb(i + j, i) for i in range(n + 1) for j in range(n + 1))
        assert enumerate_naive([0] * n, [1] * n).nodes_visited == nodes


def test_naive_budget():
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_naive([0] * 10, [1] * 10, node_budget=100)
    assert exc.value.stats.nodes_visited == 101
    assert not exc.value.stats.complete


def test_overhead_report_examples():
    r = overhead_report("aa", "bb")
    assert r.bound == 6 and r.naive_outputs == 6 and r.ratio == r.naive_nodes
    r = overhead_report("abc", "abc")
    assert r.naive_outputs == 1 and r.embedding_count == 1
    assert r.ratio == Fraction(r.naive_nodes, 3)
    g = gen_single_match(5, 5)
    r = overhead_report(g.a, g.b)
    assert r.naive_outputs == comb(8, 4) == 70 and r.embedding_count == 1


@settings(max_examples=300, deadline=None)
@given(small, small)
def test_engines_match_oracles(a, b):
    d = list(iter_distinct(a, b))
    e = list(iter_embeddings(a, b))
    assert len(d) == len(set(d)) and len(e) == len(set(e))
    assert set(d) == oracle_distinct(a, b)
    assert set(e) == oracle_embeddings(a, b)
    assert count_distinct(a, b).count == len(d) <= len(e) == count_embeddings(a, b).count


@settings(max_examples=300, deadline=None)
@given(small, small)
def test_emission_order_and_chain_ranks(a, b):
    d = list(iter_distinct(a, b))
    e = list(iter_embeddings(a, b))
    assert d == sorted(d) and e == sorted(e)
    t = build_dp(a, b)
    for emb in e:
        assert embedding_is_valid(a, b, emb, t.lcs_length)
        for k, (p, q) in enumerate(emb.pairs(), 1):
            assert t[p, q] == k


@settings(max_examples=200, deadline=None)
@given(small, small)
def test_naive_dedup_equals_embeddings(a, b):
    out = []
    stats = enumerate_naive(a, b, out.append)
    assert set(out) == set(iter_embeddings(a, b))
    assert stats.output_chars == stats.outputs_emitted * stats.lcs_length
