"""Property suites comparing the fast engines with the brute-force oracles
and the closed forms with exhaustive scans. Used by ``lcsenum verify``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import bounds
from .core import build_dp, embedding_is_valid
from .enumeration import (
    count_distinct, count_embeddings, enumerate_naive, iter_distinct, iter_embeddings,
)
from .oracle import (
    check_crossing_property, exhaustive_pairs, oracle_distinct, oracle_embeddings,
)

__all__ = ["SUITES", "VerifyReport", "instances", "run_suite"]

SUITES = ("distinct", "embeddings", "crossing", "bounds")


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check, instance, expected, got):
        self.failures.append({"check": check, "instance": instance,
                              "expected": _jsonable(expected), "got": _jsonable(got)})

    def expect(self, check, instance, expected, got):
        self.checks += 1
        if expected != got:
            self.fail(check, instance, expected, got)

    def as_dict(self):
        return {"suite": self.suite, "passed": self.passed, "instances": self.instances,
                "checks": self.checks, "failures": self.failures}


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "positions_a"):
        return [list(x.positions_a), list(x.positions_b)]
    if isinstance(x, int) and not isinstance(x, bool) and abs(x) >= 2 ** 53:
        return str(x)
    return x


def instances(max_len=5, alphabet=2, seed=1, n_random=1000, exhaustive=True):
    """Exhaustive pairs (if requested) followed by ``n_random`` seeded random pairs."""
    if exhaustive:
        yield from exhaustive_pairs(max_len, alphabet)
    rng = random.Random(seed)
    for _ in range(n_random):
        k = rng.randint(1, alphabet)
        a = tuple(rng.randrange(k) for _ in range(rng.randint(0, max_len)))
        b = tuple(rng.randrange(k) for _ in range(rng.randint(0, max_len)))
        yield a, b


def _check_distinct(rep, a, b):
    inst = [list(a), list(b)]
    got = list(iter_distinct(a, b))
    rep.expect("distinct: no duplicates", inst, len(got), len(set(got)))
    rep.expect("distinct: oracle set", inst, oracle_distinct(a, b), set(got))
    rep.expect("distinct: count", inst, len(set(got)), count_distinct(a, b).count)
    t = len(a) + len(b)
    rep.checks += 1
    if math.log(len(got)) > bounds.d_upper(t).ln_value + 1e-12:
        rep.fail("distinct: <= 4^(t/5)", inst, bounds.d_upper(t).value, len(got))


def _check_embeddings(rep, a, b):
    inst = [list(a), list(b)]
    got = list(iter_embeddings(a, b))
    l = build_dp(a, b).lcs_length
    rep.expect("embeddings: no duplicates", inst, len(got), len(set(got)))
    rep.expect("embeddings: oracle set", inst, oracle_embeddings(a, b), set(got))
    rep.expect("embeddings: count", inst, len(set(got)), count_embeddings(a, b).count)
    rep.expect("embeddings: all valid", inst, True,
               all(embedding_is_valid(a, b, e, l) for e in got))
    naive = []
    enumerate_naive(a, b, sink=naive.append)
    rep.expect("naive: deduplicated == embeddings", inst, set(got), set(naive))
    rep.expect("distinct <= embeddings", inst, True,
               count_distinct(a, b).count <= len(got))


def _check_crossing(rep, a, b):
    rep.expect("crossing property", [list(a), list(b)], True, check_crossing_property(a, b))


def _check_bounds(rep, n_max=100, t_max=200, lmn_max=40):
    for n in range(1, n_max + 1):
        scan = max(bounds.max_embeddings_equal(n, l) for l in range(n + 1))
        rep.expect("m=n closed form", n, scan, bounds.max_embeddings_equal_opt(n))
        opt = bounds.optimal_l_equal(n)
        rep.expect("l* optimal", n, scan, bounds.max_embeddings_equal(n, opt.l_star))
        rep.expect("l* alternatives equal", n, {scan},
                   {bounds.max_embeddings_equal(n, x) for x in opt.alternatives})
    for t in range(t_max + 1):
        scan = max(bounds.max_embeddings_total(t, l) for l in range(t // 2 + 1))
        rep.expect("total closed form", t, scan, bounds.max_embeddings_total_opt(t))
    for n in range(lmn_max + 1):
        for m in range(n + 1):
            for l in range(m + 1):
                prods = [bounds.embedding_product(m, n, l, y) for y in range(l + 1)]
                rep.expect("y* maximizes", [m, n, l], max(prods), bounds.max_embeddings(m, n, l))
                y = bounds.optimal_y(m, n, l)
                unimodal = (all(prods[k] <= prods[k + 1] for k in range(y))
                            and all(prods[k] >= prods[k + 1] for k in range(y, l)))
                rep.expect("P(y) unimodal around y*", [m, n, l], True, unimodal)
    for t in range(4, 2001):
        rep.checks += 1
        if math.log(bounds.d_lower(t)) > bounds.d_upper(t).ln_value:
            rep.fail("d_lower <= d_upper", t, "<=", [bounds.d_lower(t), bounds.d_upper(t).value])
    rep.instances = 1


_PER_INSTANCE = {
    "distinct": _check_distinct,
    "embeddings": _check_embeddings,
    "crossing": _check_crossing,
}


def run_suite(suite, max_len=5, alphabet=2, seed=1, n_random=1000, exhaustive=True):
    """Run one suite and return its :class:`VerifyReport`."""
    rep = VerifyReport(suite)
    if suite == "bounds":
        _check_bounds(rep)
        return rep
    check = _PER_INSTANCE[suite]
    for a, b in instances(max_len, alphabet, seed, n_random, exhaustive):
        rep.instances += 1
        check(rep, a, b)
    return rep
