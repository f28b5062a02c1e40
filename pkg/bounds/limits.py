"""Weight choice, union-bound counts and limiting forms of the measurement conditions."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from errors import DomainError


@dataclass(frozen=True)
class WeightRanges:
    weight: float
    # weights whose weight term beats plain l1 (w = 1)
    improvement_interval: Tuple[float, float]
    # weights for which recovery at the optimal weight's m is still guaranteed
    recovery_range: Optional[Tuple[float, float]]


def _check_alpha(alpha: float):
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}", term="alpha")


def optimal_weight(alpha: float) -> float:
    """w = 1 - alpha minimizes (w^2 - 2w(1 - alpha)) and with it the measurement bound."""
    _check_alpha(alpha)
    return 1.0 - alpha


def weight_ranges(alpha: float) -> WeightRanges:
    _check_alpha(alpha)
    weight = 1.0 - alpha
    recovery = (0.0, weight) if alpha > 0.5 else None
    return WeightRanges(weight=weight,
                        improvement_interval=(1.0 - 2.0 * alpha, 1.0),
                        recovery_range=recovery)


def cor5_set_count(N: int, k: int, s: int, p: int) -> int:
    """Number of supports T of size k within s errors of an estimate of size p."""
    return sum(math.comb(N - p, i) * math.comb(p, k - i) for i in range(s + 1) if k - i >= 0)


def cor5_log_count_bound(N: int, k: int, s: int) -> float:
    """(s + 1) ln(eN/s) + k, an upper bound on ln(cor5_set_count) when p <= 2k."""
    if s < 1:
        raise DomainError("The logarithmic count needs s >= 1", term="s")
    return (s + 1) * (1.0 + math.log(N / s)) + k


def cor6_set_count(N: int, k: int, s: int) -> int:
    """Number of (T, S) pairs with |T| = k and S a subset of T with |S| = s."""
    return math.comb(N, k) * math.comb(k, s)


def union_epsilon(epsilon: float, set_count: int) -> float:
    """Per-set failure probability so that the union over ``set_count`` sets stays below epsilon."""
    return epsilon / set_count


def limiting_measurements_cor5(k: int, s: int, N: int, C: float, w: float, epsilon: float) -> float:
    """Large-m form of the fixed-estimate condition: m ~ (r)^2 without the width correction."""
    if s < 1:
        raise DomainError("The limiting form needs s >= 1", term="s")
    log_k = 1.0 + math.log(N / k)
    root = (math.sqrt(k + s)
            + math.sqrt(2.0 * (w * w * k + s) * log_k) / C
            + math.sqrt(2.0 * math.log(1.0 / epsilon) + (s + 1) * (1.0 + math.log(N / s)) + k))
    return root ** 2


def scaling_weighted(k: int, s: float, N: int) -> float:
    """k + s ln(eN/s); reduces to k when the estimate is perfect."""
    if s <= 0:
        return float(k)
    return k + s * (1.0 + math.log(N / s))


def scaling_standard(k: int, N: int) -> float:
    """k ln(eN/k), the plain l1 rate."""
    return k * (1.0 + math.log(N / k))
