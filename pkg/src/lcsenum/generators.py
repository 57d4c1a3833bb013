"""Extremal input pairs: many distinct LCSs, many embeddings of one LCS,
and the worst cases for the naive backtrace.

Symbols are consecutive integers starting at 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Tuple

from .bounds import d_lower, embedding_product, optimal_y
from .errors import DomainError

__all__ = [
    "Expectation",
    "InstancePair",
    "gen_max_distinct",
    "gen_max_embeddings",
    "gen_no_match",
    "gen_single_match",
]


@dataclass(frozen=True)
class Expectation:
    expected_l: Optional[int] = None
    expected_distinct_count: Optional[int] = None
    expected_embedding_count: Optional[int] = None
    unique_lcs: Optional[Tuple[int, ...]] = None
    expected_naive_outputs: Optional[int] = None


@dataclass(frozen=True)
class InstancePair:
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    expected: Optional[Expectation] = None
    metadata: dict = field(default_factory=dict, compare=False)


def _need_int(name, v, lo):
    if isinstance(v, bool) or not isinstance(v, int) or v < lo:
        raise DomainError(f"{name} must be an integer >= {lo}, got {v!r}")


def gen_max_distinct(t: int) -> InstancePair:
    """Two repeat-free strings of length ``t // 2`` with ``d_lower(t)`` distinct LCSs.

    ``A`` is a prefix ``X`` followed by ascending blocks of three fresh
    symbols; ``B`` is ``Y`` followed by the same blocks reversed, with
    ``(X, Y)`` one of ``((), ())``, ``(ab, ba)``, ``(abcd, badc)``.
    For odd ``t`` one character of the budget is left unused.
    """
    _need_int("t", t, 4)
    h = t // 2
    z = (-h) % 3
    if z == 0:
        a, b = [], []
    elif z == 1:
        a, b = [0, 1], [1, 0]
    else:
        a, b = [0, 1, 2, 3], [1, 0, 3, 2]
    nxt = len(a)
    blocks = (h - len(a)) // 3
    for _ in range(blocks):
        blk = [nxt, nxt + 1, nxt + 2]
        a += blk
        b += blk[::-1]
        nxt += 3
    count = d_lower(t)
    exp = Expectation(
        expected_l=blocks + z,
        expected_distinct_count=count,
        expected_embedding_count=count,
    )
    meta = {"kind": "max-distinct", "t": t, "z": z, "blocks": blocks,
            "unused_chars": t - 2 * h}
    return InstancePair(tuple(a), tuple(b), exp, meta)


def gen_max_embeddings(m: int, n: int, l: int, y: Optional[int] = None) -> InstancePair:
    """``A = a^(m-y) b^y`` and ``B = a^(l-y) b^(n+y-l)``, whose only LCS is ``a^(l-y) b^y``."""
    for name, v in (("m", m), ("n", n), ("l", l)):
        _need_int(name, v, 0)
    if not l <= m <= n:
        raise DomainError(f"need l <= m <= n, got l={l}, m={m}, n={n}")
    if y is None:
        y = optimal_y(m, n, l)
    _need_int("y", y, 0)
    if y > l:
        raise DomainError(f"need y <= l, got y={y}, l={l}")
    a = (0,) * (m - y) + (1,) * y
    b = (0,) * (l - y) + (1,) * (n + y - l)
    lcs = (0,) * (l - y) + (1,) * y
    exp = Expectation(
        expected_l=l,
        expected_distinct_count=1,
        expected_embedding_count=embedding_product(m, n, l, y),
        unique_lcs=lcs,
    )
    return InstancePair(a, b, exp, {"kind": "max-embeddings", "m": m, "n": n, "l": l, "y": y})


def gen_no_match(m: int, n: int) -> InstancePair:
    """``a^m`` against ``b^n``: every backtrace path reaches the origin."""
    _need_int("m", m, 1)
    _need_int("n", n, 1)
    exp = Expectation(expected_l=0, expected_distinct_count=1, expected_embedding_count=1,
                      unique_lcs=(), expected_naive_outputs=comb(m + n, m))
    return InstancePair((0,) * m, (1,) * n, exp, {"kind": "no-match", "m": m, "n": n})


def gen_single_match(m: int, n: int) -> InstancePair:
    """``x a^(m-1)`` against ``x b^(n-1)``: the only match is ``[1, 1]``."""
    _need_int("m", m, 1)
    _need_int("n", n, 1)
    exp = Expectation(expected_l=1, expected_distinct_count=1, expected_embedding_count=1,
                      unique_lcs=(0,), expected_naive_outputs=comb(m + n - 2, m - 1))
    return InstancePair((0,) + (1,) * (m - 1), (0,) + (2,) * (n - 1), exp,
                        {"kind": "single-match", "m": m, "n": n})
