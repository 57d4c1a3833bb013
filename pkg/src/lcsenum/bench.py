"""Naive-backtrace overhead measurements over the generator families."""
from __future__ import annotations

import math
import time

from .bounds import optimal_l_equal
from .enumeration import DEFAULT_NODE_BUDGET, overhead_report
from .errors import BudgetExceeded
from .generators import gen_max_distinct, gen_max_embeddings, gen_no_match, gen_single_match

__all__ = ["FAMILIES", "family_instance", "bench_rows"]

FAMILIES = ("no-match", "single-match", "max-distinct", "max-embeddings")


def family_instance(family, size):
    if family == "no-match":
        return gen_no_match(size, size)
    if family == "single-match":
        return gen_single_match(size, size)
    if family == "max-distinct":
        return gen_max_distinct(size)
    if family == "max-embeddings":
        return gen_max_embeddings(size, size, optimal_l_equal(size).l_star)
    raise ValueError(f"unknown family {family!r}")


def bench_rows(family, sizes, node_budget=DEFAULT_NODE_BUDGET):
    """One row per size; ``growth`` is the overhead ratio over the previous row's.

    For the equal-length families ``reference_growth`` is ``4 sqrt(n/(n+1))``
    scaled to the actual step, the step factor of ``4^n / sqrt(n)``.
    """
    rows = []
    prev = None
    for size in sizes:
        inst = family_instance(family, size)
        start = time.perf_counter()
        try:
            rep = overhead_report(inst.a, inst.b, node_budget=node_budget)
        except BudgetExceeded as exc:
            rows.append({"family": family, "size": size, "m": len(inst.a), "n": len(inst.b),
                         "budget_exceeded": True,
                         "naive_nodes": str(exc.stats.nodes_visited),
                         "naive_outputs": str(exc.stats.outputs_emitted)})
            prev = None
            continue
        row = {"family": family, "size": size, "budget_exceeded": False}
        row.update(rep.as_dict())
        row["seconds"] = round(time.perf_counter() - start, 6)
        ratio = float(rep.ratio)
        if prev is not None:
            row["growth"] = ratio / prev[1]
            if family in ("no-match", "single-match", "max-embeddings"):
                n0, n1 = prev[0], len(inst.a)
                row["reference_growth"] = 4 ** (n1 - n0) * math.sqrt(n0 / n1)
        prev = (len(inst.a), ratio)
        rows.append(row)
    return rows
