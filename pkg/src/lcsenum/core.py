"""Sequences, the LCS rank table, match points and embeddings.

Positions exposed by this module are 1-based; row and column 0 of a
:class:`DpTable` are the empty-prefix boundary.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence as _Seq, Tuple, Union

from .errors import CapacityError

__all__ = [
    "MAX_SYMBOL",
    "DEFAULT_MAX_CELLS",
    "Sequence",
    "DpTable",
    "MatchPoint",
    "Embedding",
    "check_sequence",
    "build_dp",
    "build_suffix_dp",
    "lcs_length",
    "backtrace_one",
    "embedding_is_valid",
    "crossings",
    "match_points",
]

MAX_SYMBOL = 2 ** 31 - 1
DEFAULT_MAX_CELLS = 2 ** 31

#: A sequence is an immutable tuple of integer symbols.
Sequence = Tuple[int, ...]
SequenceLike = Union[str, Iterable[int]]


def check_sequence(seq: SequenceLike) -> Sequence:
    """Validate ``seq`` and return it as a tuple of integer symbols.

    Strings are mapped character by character through :func:`ord`.
    """
    if isinstance(seq, str):
        return tuple(ord(c) for c in seq)
    if isinstance(seq, (bytes, bytearray)):
        return tuple(seq)
    out = []
    for s in seq:
        if isinstance(s, bool):
            raise TypeError("symbols must be integers, got bool")
        try:
            s = operator.index(s)
        except TypeError:
            raise TypeError(f"symbols must be integers, got {type(s).__name__}") from None
        if not 0 <= s <= MAX_SYMBOL:
            raise ValueError(f"symbol {s} outside [0, 2^31)")
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class DpTable:
    """Prefix LCS ranks ``ranks[i][j] = L[i, j]`` for ``0 <= i <= m, 0 <= j <= n``."""

    ranks: Tuple[Tuple[int, ...], ...]
    m: int
    n: int

    def __getitem__(self, ij):
        i, j = ij
        return self.ranks[i][j]

    @property
    def lcs_length(self) -> int:
        return self.ranks[self.m][self.n]


@dataclass(frozen=True)
class MatchPoint:
    i: int
    j: int
    prefix_rank: int
    suffix_rank: int

    def is_useful(self, l: int) -> bool:
        """True if the match lies on some full-length LCS embedding."""
        return self.prefix_rank + self.suffix_rank == l + 1


@dataclass(frozen=True, order=True)
class Embedding:
    """Aligned 1-based position lists of a common subsequence in A and B.

    Ordering is lexicographic on ``positions_a`` then ``positions_b``.
    """

    positions_a: Tuple[int, ...] = ()
    positions_b: Tuple[int, ...] = ()

    def __len__(self):
        return len(self.positions_a)

    def pairs(self):
        return list(zip(self.positions_a, self.positions_b))

    def symbols(self, a: _Seq[int]) -> Sequence:
        return tuple(a[p - 1] for p in self.positions_a)

    @classmethod
    def from_pairs(cls, pairs) -> "Embedding":
        pairs = list(pairs)
        return cls(tuple(p for p, _ in pairs), tuple(q for _, q in pairs))


def _check_capacity(m, n, max_cells):
    if max_cells is None:
        max_cells = DEFAULT_MAX_CELLS
    cells = (m + 1) * (n + 1)
    if cells > max_cells:
        raise CapacityError(
            f"DP table needs {cells} cells for m={m}, n={n}; cap is {max_cells}"
        )


def _ranks(a, b):
    n = len(b)
    prev = [0] * (n + 1)
    rows = [tuple(prev)]
    for ai in a:
        cur = [0] * (n + 1)
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                left, up = cur[j - 1], prev[j]
                cur[j] = left if left > up else up
        rows.append(tuple(cur))
        prev = cur
    return tuple(rows)


def build_dp(a: SequenceLike, b: SequenceLike, max_cells: int | None = None) -> DpTable:
    """Fill the ``(m+1) x (n+1)`` table of prefix LCS lengths.

    Raises :class:`CapacityError` if the table would hold more than
    ``max_cells`` entries (default ``2**31``).
    """
    a, b = check_sequence(a), check_sequence(b)
    _check_capacity(len(a), len(b), max_cells)
    return DpTable(_ranks(a, b), len(a), len(b))


def build_suffix_dp(a: SequenceLike, b: SequenceLike, max_cells: int | None = None):
    """Suffix LCS lengths: ``suf[i][j]`` is the LCS length of ``a[i:]`` and ``b[j:]``.

    Indices are 0-based offsets, so ``suf[i-1][j-1]`` is the LCS length of
    the 1-based suffixes starting at ``a_i`` and ``b_j``.
    """
    a, b = check_sequence(a), check_sequence(b)
    m, n = len(a), len(b)
    _check_capacity(m, n, max_cells)
    rev = _ranks(a[::-1], b[::-1])
    return tuple(tuple(rev[m - i][n - j] for j in range(n + 1)) for i in range(m + 1))


def lcs_length(a: SequenceLike, b: SequenceLike, max_cells: int | None = None) -> int:
    return build_dp(a, b, max_cells).lcs_length


def backtrace_one(a: SequenceLike, b: SequenceLike, t: DpTable | None = None) -> Embedding:
    """Recover one LCS embedding by walking back from ``[m, n]``.

    Tie-break: diagonal on a match, otherwise up, otherwise left.
    """
    a, b = check_sequence(a), check_sequence(b)
    if t is None:
        t = build_dp(a, b)
    r = t.ranks
    i, j = t.m, t.n
    pairs = []
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            pairs.append((i, j))
            i, j = i - 1, j - 1
        elif r[i - 1][j] == r[i][j]:
            i -= 1
        else:
            j -= 1
    pairs.reverse()
    return Embedding.from_pairs(pairs)


def embedding_is_valid(a: SequenceLike, b: SequenceLike, e: Embedding, l: int) -> bool:
    a, b = check_sequence(a), check_sequence(b)
    pa, pb = tuple(e.positions_a), tuple(e.positions_b)
    if len(pa) != len(pb) or len(pa) != l:
        return False
    for seq, pos in ((a, pa), (b, pb)):
        prev = 0
        for p in pos:
            if not prev < p <= len(seq):
                return False
            prev = p
    return all(a[p - 1] == b[q - 1] for p, q in zip(pa, pb))


def crossings(e1: Tuple[int, int], e2: Tuple[int, int]) -> bool:
    """Whether two character embeddings ``(p, q)`` and ``(p', q')`` cross."""
    (p, q), (p2, q2) = e1, e2
    return (p < p2 and q2 < q) or (p2 < p and q < q2)


def match_points(a: SequenceLike, b: SequenceLike, useful_only: bool = False,
                 max_cells: int | None = None):
    """All matches ``[i, j]`` with their prefix and suffix ranks, row-major."""
    a, b = check_sequence(a), check_sequence(b)
    t = build_dp(a, b, max_cells)
    suf = build_suffix_dp(a, b, max_cells)
    l = t.lcs_length
    out = []
    for i, ai in enumerate(a, 1):
        for j, bj in enumerate(b, 1):
            if ai == bj:
                mp = MatchPoint(i, j, t.ranks[i][j], suf[i - 1][j - 1])
                if not useful_only or mp.is_useful(l):
                    out.append(mp)
    return out
