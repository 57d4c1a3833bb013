"""Duplicate-free enumeration and exact counting of LCSs and LCS embeddings,
plus an instrumented version of the naive all-paths backtrace.

Enumerators accept an optional *sink*: a callable invoked once per output.
If the sink returns :data:`STOP` the enumeration ends early and the
returned :class:`CountResult` has ``complete=False``. The ``iter_*``
generators offer the same streams without a sink.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import Embedding, build_dp, build_suffix_dp, check_sequence
from .errors import BudgetExceeded

__all__ = [
    "STOP",
    "DEFAULT_NODE_BUDGET",
    "CountResult",
    "NaiveRunStats",
    "OverheadReport",
    "iter_embeddings",
    "iter_distinct",
    "enumerate_embeddings",
    "enumerate_distinct",
    "count_embeddings",
    "count_distinct",
    "enumerate_naive",
    "overhead_report",
]

STOP = object()
DEFAULT_NODE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class CountResult:
    count: int
    lcs_length: int
    complete: bool = True


@dataclass
class NaiveRunStats:
    nodes_visited: int = 0
    outputs_emitted: int = 0
    output_chars: int = 0
    lcs_length: int = 0
    complete: bool = True

    def overhead_ratio(self, embedding_count: int) -> Fraction:
        """Nodes visited per unit of duplicate-free output (``l * count``, at least 1)."""
        return Fraction(self.nodes_visited, max(1, self.lcs_length * embedding_count))


@dataclass(frozen=True)
class OverheadReport:
    m: int
    n: int
    lcs_length: int
    naive_nodes: int
    naive_outputs: int
    naive_output_chars: int
    embedding_count: int
    distinct_count: int
    ratio: Fraction
    bound: int

    @property
    def ratio_to_bound(self) -> float:
        return float(self.ratio / self.bound)

    def as_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "l": self.lcs_length,
            "naive_nodes": str(self.naive_nodes),
            "naive_outputs": str(self.naive_outputs),
            "naive_output_chars": str(self.naive_output_chars),
            "embedding_count": str(self.embedding_count),
            "distinct_count": str(self.distinct_count),
            "ratio": float(self.ratio),
            "bound": str(self.bound),
            "ratio_to_bound": self.ratio_to_bound,
        }


# --------------------------------------------------------------------------
# embeddings


def _useful_rows(a, b, max_cells):
    """Group useful matches by prefix rank, then by row.

    Returns ``(l, rows, row_index)`` where ``rows[k][i]`` is the sorted list
    of columns ``j`` such that ``[i, j]`` is a useful match of prefix rank
    ``k`` and ``row_index[k]`` is the sorted list of such rows.
    """
    t = build_dp(a, b, max_cells)
    suf = build_suffix_dp(a, b, max_cells)
    l = t.lcs_length
    rows = [dict() for _ in range(l + 1)]
    for i, ai in enumerate(a, 1):
        pre_row, suf_row = t.ranks[i], suf[i - 1]
        for j, bj in enumerate(b, 1):
            if ai == bj:
                k = pre_row[j]
                if k + suf_row[j - 1] == l + 1:
                    rows[k].setdefault(i, []).append(j)
    row_index = [sorted(r) for r in rows]
    return l, rows, row_index


def _iter_a_chains(l, rows, row_index):
    # A partial chain i_1 < ... < i_k is extendable iff the smallest feasible
    # j_k admits a completion; every useful match has one, so no dead ends.
    def candidates(k, i_prev, j_min):
        ri = row_index[k]
        for idx in range(bisect.bisect_right(ri, i_prev), len(ri)):
            i = ri[idx]
            js = rows[k][i]
            p = bisect.bisect_right(js, j_min)
            if p < len(js):
                yield i, js[p]

    chain = []
    stack = [candidates(1, 0, 0)]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if chain:
                chain.pop()
            continue
        chain.append(nxt)
        if len(chain) == l:
            yield tuple(i for i, _ in chain)
            chain.pop()
        else:
            stack.append(candidates(len(chain) + 1, nxt[0], nxt[1]))


def _iter_b_chains(chain_a, rows):
    l = len(chain_a)
    cols = [rows[k + 1][i] for k, i in enumerate(chain_a)]
    # largest feasible column at each position, computed right to left
    jmax = [0] * l
    jmax[l - 1] = cols[l - 1][-1]
    for k in range(l - 2, -1, -1):
        p = bisect.bisect_left(cols[k], jmax[k + 1]) - 1
        jmax[k] = cols[k][p]

    def candidates(k, j_prev):
        js = cols[k]
        lo = bisect.bisect_right(js, j_prev)
        hi = bisect.bisect_right(js, jmax[k])
        return iter(js[lo:hi])

    chain = []
    stack = [candidates(0, 0)]
    while stack:
        j = next(stack[-1], None)
        if j is None:
            stack.pop()
            if chain:
                chain.pop()
            continue
        chain.append(j)
        if len(chain) == l:
            yield tuple(chain)
            chain.pop()
        else:
            stack.append(candidates(len(chain), j))


def iter_embeddings(a, b, max_cells=None):
    """Yield every LCS embedding of ``a`` and ``b`` exactly once.

    Order: lexicographic in ``positions_a``, then ``positions_b``.
    """
    a, b = check_sequence(a), check_sequence(b)
    l, rows, row_index = _useful_rows(a, b, max_cells)
    if l == 0:
        yield Embedding()
        return
    for chain_a in _iter_a_chains(l, rows, row_index):
        for chain_b in _iter_b_chains(chain_a, rows):
            yield Embedding(chain_a, chain_b)


def _drain(it, l, sink):
    count = 0
    for out in it:
        count += 1
        if sink is not None and sink(out) is STOP:
            return CountResult(count, l, complete=False)
    return CountResult(count, l)


def enumerate_embeddings(a, b, sink=None, max_cells=None) -> CountResult:
    a, b = check_sequence(a), check_sequence(b)
    l = build_dp(a, b, max_cells).lcs_length
    return _drain(iter_embeddings(a, b, max_cells), l, sink)


def count_embeddings(a, b, max_cells=None) -> CountResult:
    """Exact number of LCS embeddings, by inclusion-exclusion on suffixes.

    ``E[i][j]`` counts the embeddings of an LCS of ``a[i:]``/``b[j:]``;
    they split into those whose first match is ``(i, j)``, those avoiding
    row ``i``, and those avoiding column ``j`` (less the overlap).
    """
    a, b = check_sequence(a), check_sequence(b)
    m, n = len(a), len(b)
    suf = build_suffix_dp(a, b, max_cells)
    nxt = [1] * (n + 1)
    for i in range(m - 1, -1, -1):
        cur = [1] * (n + 1)
        s_here, s_down = suf[i], suf[i + 1]
        ai = a[i]
        for j in range(n - 1, -1, -1):
            r = s_here[j]
            if r == 0:
                continue
            if ai == b[j]:
                total = nxt[j + 1]
            else:
                total = 0
                if s_down[j + 1] == r:
                    total -= nxt[j + 1]
            if s_down[j] == r:
                total += nxt[j]
            if s_here[j + 1] == r:
                total += cur[j + 1]
            cur[j] = total
        nxt = cur
    return CountResult(nxt[0], suf[0][0])


# --------------------------------------------------------------------------
# distinct LCSs


class _NextTables:
    """Leftmost next-occurrence tables over the symbols common to both inputs."""

    def __init__(self, a, b):
        self.symbols = sorted(set(a) & set(b))
        self.next_a = [self._table(a, s) for s in self.symbols]
        self.next_b = [self._table(b, s) for s in self.symbols]

    @staticmethod
    def _table(seq, s):
        size = len(seq)
        out = [size] * (size + 1)
        for p in range(size - 1, -1, -1):
            out[p] = p if seq[p] == s else out[p + 1]
        return out

    def children(self, p, q, suf):
        """States reached by each symbol that can start an LCS of ``a[p:]``, ``b[q:]``."""
        r = suf[p][q]
        m, n = len(suf) - 1, len(suf[0]) - 1
        for s, na, nb in zip(self.symbols, self.next_a, self.next_b):
            i, j = na[p], nb[q]
            if i < m and j < n and suf[i + 1][j + 1] == r - 1:
                yield s, i + 1, j + 1


def iter_distinct(a, b, max_cells=None):
    """Yield every distinct LCS (as a symbol tuple) exactly once, in lexicographic order."""
    a, b = check_sequence(a), check_sequence(b)
    suf = build_suffix_dp(a, b, max_cells)
    if suf[0][0] == 0:
        yield ()
        return
    nt = _NextTables(a, b)
    prefix = []
    stack = [nt.children(0, 0, suf)]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if prefix:
                prefix.pop()
            continue
        s, p, q = nxt
        prefix.append(s)
        if suf[p][q] == 0:
            yield tuple(prefix)
            prefix.pop()
        else:
            stack.append(nt.children(p, q, suf))


def enumerate_distinct(a, b, sink=None, max_cells=None) -> CountResult:
    a, b = check_sequence(a), check_sequence(b)
    l = build_dp(a, b, max_cells).lcs_length
    return _drain(iter_distinct(a, b, max_cells), l, sink)


def count_distinct(a, b, max_cells=None) -> CountResult:
    """Exact number of distinct LCSs without listing them."""
    a, b = check_sequence(a), check_sequence(b)
    m, n = len(a), len(b)
    suf = build_suffix_dp(a, b, max_cells)
    nt = _NextTables(a, b)
    cnt = [[1] * (n + 1) for _ in range(m + 1)]
    for p in range(m - 1, -1, -1):
        row = cnt[p]
        for q in range(n - 1, -1, -1):
            if suf[p][q] == 0:
                continue
            row[q] = sum(cnt[i][j] for _, i, j in nt.children(p, q, suf))
    return CountResult(cnt[0][0], suf[0][0])


# --------------------------------------------------------------------------
# naive backtrace


def enumerate_naive(a, b, sink=None, node_budget=DEFAULT_NODE_BUDGET,
                    max_cells=None) -> NaiveRunStats:
    """Run the textbook all-paths backtrace from ``[m, n]`` and count its work.

    From ``[i, j]`` the procedure moves diagonally (adding the match) when
    ``a_i == b_j``, and moves up or left whenever the rank there equals
    ``L[i, j]``. Each arrival at ``[0, 0]`` emits the accumulated embedding,
    duplicates included. ``nodes_visited`` counts every call.

    Raises :class:`BudgetExceeded` (carrying partial stats) once more than
    ``node_budget`` nodes have been visited; ``None`` disables the budget.
    """
    a, b = check_sequence(a), check_sequence(b)
    t = build_dp(a, b, max_cells)
    r = t.ranks
    stats = NaiveRunStats(lcs_length=t.lcs_length)
    path = []
    # (i, j, parent path length, match pair appended on entry)
    stack = [(t.m, t.n, 0, None)]
    while stack:
        i, j, plen, added = stack.pop()
        del path[plen:]
        if added is not None:
            path.append(added)
        stats.nodes_visited += 1
        if node_budget is not None and stats.nodes_visited > node_budget:
            stats.complete = False
            raise BudgetExceeded(f"naive backtrace exceeded {node_budget} nodes", stats)
        if i == 0 and j == 0:
            stats.outputs_emitted += 1
            stats.output_chars += len(path)
            if sink is not None and sink(Embedding.from_pairs(reversed(path))) is STOP:
                stats.complete = False
                return stats
            continue
        here = r[i][j]
        plen = len(path)
        # pushed in reverse so that diagonal, up, left are explored in that order
        if j > 0 and r[i][j - 1] == here:
            stack.append((i, j - 1, plen, None))
        if i > 0 and r[i - 1][j] == here:
            stack.append((i - 1, j, plen, None))
        if i > 0 and j > 0 and a[i - 1] == b[j - 1]:
            stack.append((i - 1, j - 1, plen, (i, j)))
    return stats


def overhead_report(a, b, node_budget=DEFAULT_NODE_BUDGET, max_cells=None) -> OverheadReport:
    """Compare the naive backtrace's work against the duplicate-free output size."""
    a, b = check_sequence(a), check_sequence(b)
    stats = enumerate_naive(a, b, node_budget=node_budget, max_cells=max_cells)
    emb = count_embeddings(a, b, max_cells).count
    dist = count_distinct(a, b, max_cells).count
    m, n = len(a), len(b)
    return OverheadReport(
        m=m, n=n, lcs_length=stats.lcs_length,
        naive_nodes=stats.nodes_visited,
        naive_outputs=stats.outputs_emitted,
        naive_output_chars=stats.output_chars,
        embedding_count=emb,
        distinct_count=dist,
        ratio=stats.overhead_ratio(emb),
        bound=comb(m + n, m),
    )
