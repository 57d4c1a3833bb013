"""Exact and asymptotic bounds on LCS counts.

Exact quantities are Python integers. Asymptotic estimates are carried in
log space (:class:`AsymptoticEstimate`) so they stay finite for arguments
in the thousands.

The closed forms with ``sqrt(5)`` in their indices are evaluated with
integer square roots: ``floor((A + sqrt(D)) / d) == (A + isqrt(D)) // d``
for integers ``A``, ``D >= 0`` and ``d > 0``, so no rounding is involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, isqrt
from typing import Tuple

from .errors import DomainError

__all__ = [
    "PHI",
    "AsymptoticEstimate",
    "OptimalLength",
    "binomial",
    "d_lower",
    "d_upper",
    "d_upper_distinct_chars",
    "optimal_y",
    "embedding_product",
    "max_embeddings",
    "max_embeddings_equal",
    "optimal_l_equal",
    "max_embeddings_equal_opt",
    "asymptotic_embeddings_equal",
    "max_embeddings_total",
    "max_embeddings_total_opt",
    "asymptotic_embeddings_total",
    "naive_overhead_bound",
    "naive_overhead_equal",
    "naive_overhead_total",
    "ln_factorial_stirling",
    "log_ratio",
]

PHI = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class AsymptoticEstimate:
    ln_value: float
    value: float

    @classmethod
    def from_log(cls, ln_value: float) -> "AsymptoticEstimate":
        try:
            value = math.exp(ln_value)
        except OverflowError:
            value = math.inf
        return cls(ln_value, value)

    @property
    def overflowed(self) -> bool:
        return math.isinf(self.value)


@dataclass(frozen=True)
class OptimalLength:
    l_star: int
    alternatives: Tuple[int, ...]
    sigma: float
    tau: float


def _check_int(name, x, lo=0):
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"{name} must be an integer, got {x!r}")
    if x < lo:
        raise DomainError(f"{name} must be >= {lo}, got {x}")


def _floor_div_sqrt(A, D, d):
    """``floor((A + sqrt(D)) / d)`` exactly."""
    return (A + isqrt(D)) // d


def _ceil_div_minus_sqrt(A, D, d):
    """``ceil((A - sqrt(D)) / d)`` exactly."""
    return -_floor_div_sqrt(-A, D, d)


def log_ratio(exact: int, estimate: AsymptoticEstimate) -> float:
    """``ln(exact / estimate)``, safe for huge integers."""
    return math.log(exact) - estimate.ln_value


def binomial(r: int, k: int) -> int:
    """``C(r, k)``, zero outside ``0 <= k <= r``."""
    if k < 0 or r < 0 or k > r:
        return 0
    return comb(r, k)


# ---------------------------------------------------------------- distinct LCSs

def d_lower(t: int) -> int:
    """Number of distinct LCSs reached by the block construction for total length ``t``.

    With ``h = t // 2`` and ``z = (-h) % 3`` this is ``3**((h - 2z)/3) * 2**z``.
    """
    _check_int("t", t, 4)
    h = t // 2
    z = (-h) % 3
    return 3 ** ((h - 2 * z) // 3) * 2 ** z


def d_upper(t: int) -> AsymptoticEstimate:
    """``4**(t/5)``, an upper bound on distinct LCSs for total length ``t``."""
    _check_int("t", t)
    return AsymptoticEstimate.from_log(t * math.log(4) / 5)


def d_upper_distinct_chars(t: int) -> int:
    """Upper bound on distinct LCSs when neither input repeats a symbol.

    Coincides with :func:`d_lower`, so the bound is tight for such inputs.
    """
    return d_lower(t)


# ------------------------------------------------------------ embeddings, (m,n,l)

def _check_lmn(m, n, l):
    for name, v in (("m", m), ("n", n), ("l", l)):
        _check_int(name, v)
    if not l <= m <= n:
        raise DomainError(f"need l <= m <= n, got l={l}, m={m}, n={n}")


def optimal_y(m: int, n: int, l: int) -> int:
    """The split ``y`` maximizing :func:`embedding_product`.

    ``ceil((l(n-l) + l - m) / (m + n - 2l))`` clamped into ``[0, l]``; the
    degenerate case ``m = n = l`` returns 0.
    """
    _check_lmn(m, n, l)
    den = m + n - 2 * l
    if den == 0:
        return 0
    num = l * (n - l) + l - m
    y = -((-num) // den)
    return min(max(y, 0), l)


def embedding_product(m: int, n: int, l: int, y: int) -> int:
    """Embeddings of ``a^(l-y) b^y`` in ``a^(m-y) b^y`` and ``a^(l-y) b^(n+y-l)``."""
    return binomial(m - y, l - y) * binomial(n + y - l, y)


def max_embeddings(m: int, n: int, l: int) -> int:
    """Maximum number of embeddings of one LCS of length ``l`` in inputs of lengths ``m <= n``."""
    return embedding_product(m, n, l, optimal_y(m, n, l))


def max_embeddings_equal(n: int, l: int) -> int:
    _check_int("n", n)
    _check_int("l", l)
    if l > n:
        raise DomainError(f"need l <= n, got l={l}, n={n}")
    lo, hi = l // 2, (l + 1) // 2
    return comb(n - lo, hi) * comb(n - hi, lo)


def optimal_l_equal(n: int) -> OptimalLength:
    """LCS length maximizing :func:`max_embeddings_equal` for a given ``n``.

    ``sigma`` and ``tau`` are the smaller roots of the even- and odd-``l``
    quadratics. If ``sigma`` is an integer both ``sigma`` and ``sigma + 1``
    are optimal; otherwise ``ceil(sigma)`` if it is even, else ``ceil(tau)``.
    """
    _check_int("n", n, 1)
    d_sigma = 5 * (n + 1) ** 2 - 4
    d_tau = 5 * (n + 1) ** 2
    sigma = (5 * n - 1 - math.sqrt(d_sigma)) / 5
    tau = (5 * n - math.sqrt(d_tau)) / 5
    ceil_sigma = _ceil_div_minus_sqrt(5 * n - 1, d_sigma, 5)
    root = isqrt(d_sigma)
    if root * root == d_sigma and (5 * n - 1 - root) % 5 == 0:
        s = (5 * n - 1 - root) // 5
        return OptimalLength(s, (s, s + 1), sigma, tau)
    if ceil_sigma % 2 == 0:
        return OptimalLength(ceil_sigma, (ceil_sigma,), sigma, tau)
    ceil_tau = _ceil_div_minus_sqrt(5 * n, d_tau, 5)
    return OptimalLength(ceil_tau, (ceil_tau,), sigma, tau)


def max_embeddings_equal_opt(n: int) -> int:
    """Closed-form maximum embeddings of a single LCS in two length-``n`` inputs."""
    _check_int("n", n, 1)
    D = 5 * (n + 1) ** 2 - 4
    F = 5 * (n + 1) ** 2  # (sqrt(5) (n+1))^2
    top1 = _floor_div_sqrt(5 * (n + 1), F, 10)
    bot1 = _ceil_div_minus_sqrt(5 * n - 1, D, 10)
    top2 = _floor_div_sqrt(5 * n + 1, D, 10)
    # floor((5(n+1) - sqrt(F)) / 10); sqrt(F) is irrational, so floor(-sqrt(F)) = -isqrt(F) - 1
    bot2 = (5 * (n + 1) - isqrt(F) - 1) // 10
    return binomial(top1, bot1) * binomial(top2, bot2)


def asymptotic_embeddings_equal(n: int) -> AsymptoticEstimate:
    """``(phi^2 sqrt5 / 2pi) * (phi^2)^n / n``."""
    _check_int("n", n, 1)
    ln_c = math.log(PHI ** 2 * math.sqrt(5) / (2 * math.pi))
    return AsymptoticEstimate.from_log(ln_c + 2 * n * math.log(PHI) - math.log(n))


# ------------------------------------------------------------ embeddings, total t

def max_embeddings_total(t: int, l: int) -> int:
    _check_int("t", t)
    _check_int("l", l)
    if 2 * l > t:
        raise DomainError(f"need 2l <= t, got l={l}, t={t}")
    return comb(t - l, l)


def max_embeddings_total_opt(t: int) -> int:
    """Closed-form maximum embeddings of a single LCS for total input length ``t``."""
    _check_int("t", t)
    D = 5 * (t + 1) ** 2 + 4
    top = _floor_div_sqrt(5 * t + 3, D, 10)
    bot = _ceil_div_minus_sqrt(5 * t - 3, D, 10)
    return binomial(top, bot)


def asymptotic_embeddings_total(t: int) -> AsymptoticEstimate:
    """``phi * sqrt(sqrt5 / 2pi) * phi^t / sqrt(t)``."""
    _check_int("t", t, 1)
    ln_c = math.log(PHI * math.sqrt(math.sqrt(5) / (2 * math.pi)))
    return AsymptoticEstimate.from_log(ln_c + t * math.log(PHI) - 0.5 * math.log(t))


# ------------------------------------------------------------------ naive overhead

def naive_overhead_bound(m: int, n: int) -> int:
    _check_int("m", m)
    _check_int("n", n)
    return comb(m + n, m)


def naive_overhead_equal(n: int):
    """``(C(2n, n), 4^n / sqrt(pi n))``."""
    _check_int("n", n, 1)
    est = AsymptoticEstimate.from_log(n * math.log(4) - 0.5 * math.log(math.pi * n))
    return comb(2 * n, n), est


def naive_overhead_total(t: int):
    """``(C(t, ceil(t/2)), 2^t sqrt(2 / (pi t)))``."""
    _check_int("t", t, 1)
    est = AsymptoticEstimate.from_log(t * math.log(2) + 0.5 * math.log(2 / (math.pi * t)))
    return comb(t, (t + 1) // 2), est


def ln_factorial_stirling(n: int) -> float:
    """``ln(sqrt(2 pi n) (n/e)^n)``; relative error against ``ln(n!)`` is O(1/n)."""
    _check_int("n", n, 1)
    return 0.5 * math.log(2 * math.pi * n) + n * (math.log(n) - 1)
