"""Brute-force reference answers for small instances.

Nothing here touches the DP table or the enumeration graphs: every answer
comes from enumerating position subsets directly, so a bug shared with
:mod:`lcsenum.enumeration` cannot hide.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .core import Embedding, check_sequence, crossings
from .errors import OracleLimitError

__all__ = [
    "OracleLimits",
    "DEFAULT_LIMITS",
    "is_subsequence",
    "oracle_distinct",
    "oracle_embeddings",
    "oracle_max_embeddings_search",
    "check_crossing_property",
    "exhaustive_pairs",
]


@dataclass(frozen=True)
class OracleLimits:
    max_shorter_length: int = 20
    max_embedding_length: int = 12
    max_alphabet: int = 4
    max_search_total: int = 10


DEFAULT_LIMITS = OracleLimits()


def is_subsequence(w, s) -> bool:
    it = iter(s)
    return all(c in it for c in w)


def oracle_distinct(a, b, limits: OracleLimits = DEFAULT_LIMITS):
    """All distinct LCSs, by testing every subsequence of the shorter input."""
    a, b = check_sequence(a), check_sequence(b)
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    if len(short) > limits.max_shorter_length:
        raise OracleLimitError(
            f"shorter input has length {len(short)} > {limits.max_shorter_length}")
    for k in range(len(short), -1, -1):
        found = {w for w in (tuple(short[i] for i in idx)
                             for idx in itertools.combinations(range(len(short)), k))
                 if is_subsequence(w, long_)}
        if found:
            return found
    return {()}


def _subsequences_by_word(s, k):
    out = defaultdict(list)
    for idx in itertools.combinations(range(len(s)), k):
        out[tuple(s[i] for i in idx)].append(tuple(i + 1 for i in idx))
    return out


def oracle_embeddings(a, b, limits: OracleLimits = DEFAULT_LIMITS):
    """All LCS embeddings: every pair of equal-word position subsets of maximum size."""
    a, b = check_sequence(a), check_sequence(b)
    if max(len(a), len(b)) > limits.max_embedding_length:
        raise OracleLimitError(
            f"inputs of lengths {len(a)}, {len(b)} exceed {limits.max_embedding_length}")
    for k in range(min(len(a), len(b)), -1, -1):
        in_a = _subsequences_by_word(a, k)
        in_b = _subsequences_by_word(b, k)
        found = {Embedding(pa, pb)
                 for w in in_a.keys() & in_b.keys()
                 for pa in in_a[w] for pb in in_b[w]}
        if found:
            return found
    return {Embedding()}


def _occurrences(w, s):
    return sum(1 for idx in itertools.combinations(range(len(s)), len(w))
               if all(s[i] == c for i, c in zip(idx, w)))


def oracle_max_embeddings_search(m: int, n: int, l: int,
                                 limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Largest embedding count of one distinct LCS over all binary pairs with LCS length ``l``.

    Returns 0 when no binary pair of these lengths has LCS length ``l``.
    """
    if m + n > limits.max_search_total:
        raise OracleLimitError(f"m + n = {m + n} > {limits.max_search_total}")
    best = 0
    for a in itertools.product((0, 1), repeat=m):
        for b in itertools.product((0, 1), repeat=n):
            lcss = oracle_distinct(a, b, limits)
            if len(next(iter(lcss))) != l:
                continue
            for w in lcss:
                best = max(best, _occurrences(w, a) * _occurrences(w, b))
    return best


def check_crossing_property(a, b, limits: OracleLimits = DEFAULT_LIMITS) -> bool:
    """Initial character embeddings of LCSs with different first symbols always cross."""
    a = check_sequence(a)
    firsts = defaultdict(set)
    for e in oracle_embeddings(a, b, limits):
        if len(e):
            firsts[a[e.positions_a[0] - 1]].add((e.positions_a[0], e.positions_b[0]))
    for c1, c2 in itertools.combinations(firsts, 2):
        for e1 in firsts[c1]:
            for e2 in firsts[c2]:
                if not crossings(e1, e2):
                    return False
    return True


def exhaustive_pairs(max_len: int, alphabet: int, limits: OracleLimits = DEFAULT_LIMITS):
    """Every pair of sequences over ``range(alphabet)`` with lengths ``0..max_len``."""
    if alphabet > limits.max_alphabet:
        raise OracleLimitError(f"alphabet {alphabet} > {limits.max_alphabet}")
    total = sum(alphabet ** k for k in range(max_len + 1)) ** 2
    if total > 10 ** 7:
        raise OracleLimitError(f"{total} pairs is too many for exhaustive search")
    seqs = [s for k in range(max_len + 1) for s in itertools.product(range(alphabet), repeat=k)]
    for a in seqs:
        for b in seqs:
            yield a, b
