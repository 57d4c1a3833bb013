"""Enumerate, count, and bound longest common subsequences.

The fast engines live in :mod:`lcsenum.enumeration`, closed-form bounds in
:mod:`lcsenum.bounds`, extremal instances in :mod:`lcsenum.generators`
and brute-force references in :mod:`lcsenum.oracle`.
"""
from .core import (
    DpTable, Embedding, MatchPoint, backtrace_one, build_dp, check_sequence, crossings,
    embedding_is_valid, lcs_length, match_points,
)
from .enumeration import (
    STOP, CountResult, NaiveRunStats, count_distinct, count_embeddings, enumerate_distinct,
    enumerate_embeddings, enumerate_naive, iter_distinct, iter_embeddings, overhead_report,
)
from .errors import BudgetExceeded, CapacityError, DomainError, LCSError, OracleLimitError

__version__ = "0.1.0"
