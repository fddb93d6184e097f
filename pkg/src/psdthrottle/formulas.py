"""Closed-form throttling for paths and balanced spiders.

Every floor/ceiling of a square root is decided in integer arithmetic
(``k <= sqrt(x)`` iff ``k*k <= x``). Only :func:`t_P` returns a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .forcing import INFINITE

__all__ = [
    "PathPlan",
    "BalancedSpiderPlan",
    "ScanReport",
    "path_throttle",
    "path_throttle_triangle",
    "triangle_number",
    "path_optimal_set",
    "leg_propagation_time",
    "cost_g",
    "cost_h",
    "beta_breakpoint",
    "s_hat",
    "balanced_spider_throttle",
    "t_S",
    "t_P",
    "t_S_exceeds_t_P",
    "balanced_super_spider_scan",
]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(x)
    if not isinstance(x, Rational):
        raise TypeError(f"expected a rational number, got {x!r}")
    return Fraction(x)


def triangle_number(t: int) -> int:
    return t * (t + 1) // 2


def path_throttle(n: int) -> int:
    """ceil(sqrt(2n) - 1/2): the least t with (2t + 1)^2 >= 8n."""
    if n < 1:
        raise ValueError("path order must be >= 1")
    t = (math.isqrt(8 * n) - 1) // 2
    while (2 * t + 1) ** 2 < 8 * n:
        t += 1
    return t


def path_throttle_triangle(n: int) -> int:
    """ceil(sqrt(2n + 1/4) - 1/2), i.e. the least t with t(t+1)/2 >= n."""
    if n < 1:
        raise ValueError("path order must be >= 1")
    r = math.isqrt(8 * n + 1)
    if r * r < 8 * n + 1:
        r += 1
    # r = ceil(sqrt(8n + 1)); t = ceil((r - 1) / 2)
    return _ceil_div(r - 1, 2)


@dataclass(frozen=True)
class PathPlan:
    n: int
    q: int
    b: int
    value: int
    witness_set: frozenset[int]


def path_optimal_set(n: int) -> PathPlan:
    """Blue set for P_n with propagation time at most q = floor(sqrt(n/2)).

    The path is cut into ``b = ceil(n / (2q+1))`` runs of length at most
    ``2q+1`` and the middle vertex of each run is chosen.
    """
    from .forcing import propagate
    from .graphs import make_path

    if n < 1:
        raise ValueError("path order must be >= 1")
    q = math.isqrt(n // 2)
    b = _ceil_div(n, 2 * q + 1)
    base, extra = divmod(n, b)
    chosen = []
    start = 0
    for i in range(b):
        length = base + (1 if i < extra else 0)
        chosen.append(start + (length - 1) // 2)
        start += length
    witness = frozenset(chosen)
    pt = propagate(make_path(n), witness).total_time
    value = b + pt
    if value != path_throttle(n):
        raise AssertionError(f"path construction for n={n} gives {value}, expected {path_throttle(n)}")
    return PathPlan(n, q, b, value, witness)


def leg_propagation_time(beta: int, s: int, center_chosen: bool) -> int | float:
    """Propagation time of T_{alpha,beta} with ``s`` well-placed vertices per leg."""
    if s < 0 or beta < 0:
        raise ValueError("beta and s must be nonnegative")
    if s > beta:
        raise ValueError("cannot choose more vertices than a leg has")
    if center_chosen:
        return _ceil_div(beta - s, 2 * s + 1)
    if s == 0:
        return INFINITE
    return _ceil_div(beta + 1 - s, 2 * s)


def cost_g(alpha, beta, s) -> Fraction:
    """alpha*s + (beta + 1 - s) / (2s): cost with s per leg, center not chosen."""
    if alpha < 3 or s < 1:
        raise ValueError("cost_g needs alpha >= 3 and s >= 1")
    beta = _as_fraction(beta)
    return alpha * s + (beta + 1 - s) / (2 * s)


def cost_h(alpha, beta, s) -> Fraction:
    """1 + alpha*s + (beta - s) / (2s + 1): cost with s per leg plus the center."""
    if alpha < 3 or s < 0:
        raise ValueError("cost_h needs alpha >= 3 and s >= 0")
    beta = _as_fraction(beta)
    return 1 + alpha * s + (beta - s) / (2 * s + 1)


def beta_breakpoint(alpha: int, s: int) -> Fraction:
    """Leg length at which s per leg becomes as good as s - 1: 2*alpha*s^2 - (alpha+1)/2."""
    if alpha < 3 or s < 1:
        raise ValueError("beta_breakpoint needs alpha >= 3 and s >= 1")
    return Fraction(2 * alpha * s * s) - Fraction(alpha + 1, 2)


def s_hat(alpha: int, beta) -> int:
    """floor(sqrt((2 beta + alpha + 1) / (4 alpha)))."""
    x = (2 * _as_fraction(beta) + alpha + 1) / (4 * alpha)
    if x < 0:
        raise ValueError("negative radicand")
    return math.isqrt(math.floor(x))


@dataclass(frozen=True)
class BalancedSpiderPlan:
    alpha: int
    beta: int
    s_hat: int | None  # None when alpha <= 2 (the tree is a path)
    t: int | None
    value: int


def balanced_spider_throttle(alpha: int, beta: int) -> BalancedSpiderPlan:
    """th_+(T_{alpha,beta}) = 1 + alpha*s_hat + ceil((beta - s_hat) / (2 s_hat + 1)).

    With one or two legs the tree is the path on alpha*beta + 1 vertices, and
    the path formula is used instead.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if alpha <= 2:
        return BalancedSpiderPlan(alpha, beta, None, None, path_throttle(alpha * beta + 1))
    s = s_hat(alpha, beta)
    t = _ceil_div(beta - s, 2 * s + 1)
    return BalancedSpiderPlan(alpha, beta, s, t, 1 + alpha * s + t)


def t_S(alpha: int, beta) -> Fraction:
    """Continuous balanced-spider throttling: 1 + alpha*s_hat + (beta + 1/2)/(2 s_hat + 1) - 1/2."""
    if alpha < 3:
        raise ValueError("t_S needs alpha >= 3")
    beta = _as_fraction(beta)
    if beta < 0:
        raise ValueError("beta must be >= 0")
    s = s_hat(alpha, beta)
    return 1 + alpha * s + (beta + Fraction(1, 2)) / (2 * s + 1) - Fraction(1, 2)


def t_P(alpha: int, beta) -> float:
    """Continuous path throttling at order alpha*beta + 1: sqrt(2(alpha beta + 1) + 1/4) - 1/2."""
    beta = _as_fraction(beta)
    if beta < 0:
        raise ValueError("beta must be >= 0")
    radicand = 2 * (alpha * beta + 1) + Fraction(1, 4)
    # sqrt of the exact rational; numerator/denominator split keeps full float precision
    return math.sqrt(radicand.numerator) / math.sqrt(radicand.denominator) - 0.5


def t_S_exceeds_t_P(alpha: int, beta) -> bool:
    """Exact test of t_S > t_P by squaring (both t_S + 1/2 and t_P + 1/2 are positive)."""
    beta = _as_fraction(beta)
    lhs = (t_S(alpha, beta) + Fraction(1, 2)) ** 2
    return lhs > 2 * (alpha * beta + 1) + Fraction(1, 4)


@dataclass(frozen=True)
class ScanReport:
    violations: list[tuple[int, int]]
    boundary: list[tuple[int, int]]


def balanced_super_spider_scan(alpha_max: int, beta_max: int) -> ScanReport:
    """Compare ceil(t_S) with th_+(P_{alpha beta + 1}) for 3 <= alpha <= alpha_max,
    1 <= beta <= beta_max.

    ``violations`` lists balanced super-spiders (expected empty); ``boundary``
    lists the pairs where t_S > t_P yet the ceilings coincide.
    """
    if alpha_max < 3 or beta_max < 1:
        raise ValueError("need alpha_max >= 3 and beta_max >= 1")
    violations = []
    boundary = []
    for alpha in range(3, alpha_max + 1):
        for beta in range(1, beta_max + 1):
            ts = t_S(alpha, beta)
            spider = math.ceil(ts)
            if spider != balanced_spider_throttle(alpha, beta).value:
                raise AssertionError(f"ceil(t_S) disagrees with closed form at ({alpha}, {beta})")
            if spider > path_throttle(alpha * beta + 1):
                violations.append((alpha, beta))
            elif t_S_exceeds_t_P(alpha, beta):
                boundary.append((alpha, beta))
    return ScanReport(violations, boundary)
