"""
Sufficient numbers of Gaussian measurements for weighted l1 recovery.

Each ``rhs_*`` function evaluates the right-hand side r of a condition of the
form m / sqrt(m + 1) >= r; ``min_measurements`` inverts it. Logarithms are
natural throughout.
"""

import logging
import math
from typing import Callable, Dict

from pydantic import BaseModel, Field, model_validator

from errors import ArgumentError, DomainError

logger = logging.getLogger(__name__)

# (1 / (2 pi e^3))^(1/4)
WIDTH_CONSTANT = (1.0 / (2.0 * math.pi * math.e ** 3)) ** 0.25


class BoundInputs(BaseModel):
    N: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    s: int = Field(0, ge=0)
    alpha: float = Field(1.0, ge=0.0, le=1.0)
    rho: float = Field(1.0, gt=0.0)
    w: float = Field(1.0, ge=0.0, le=1.0)
    C: float = Field(..., gt=0.0, lt=1.0)
    epsilon: float = Field(..., gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def check_consistency(self):
        if self.k > self.N:
            raise ValueError(f"k={self.k} exceeds N={self.N}")
        if self.alpha * self.rho > 1.0 + 1e-12:
            raise ValueError(f"alpha * rho = {self.alpha * self.rho:.6g} exceeds 1")
        return self

    @classmethod
    def from_accuracy(cls, N: int, k: int, alpha: float, rho: float, **kwargs) -> "BoundInputs":
        """Inputs with s set to the error size (1 + rho - 2 alpha rho) k, rounded up."""
        s = math.ceil((1.0 + rho - 2.0 * alpha * rho) * k - 1e-9)
        return cls(N=N, k=k, s=max(s, 0), alpha=alpha, rho=rho, **kwargs)


def _log_ratio(n: int, k: int) -> float:
    """ln(eN/k)."""
    if k < 1 or n < 1:
        raise DomainError(f"ln(eN/k) needs N, k >= 1, got N={n}, k={k}", term="ln(eN/k)")
    return 1.0 + math.log(n / k)


def _sqrt(value: float, term: str) -> float:
    if value < 0.0:
        raise DomainError(f"Negative radicand {value:.6g} in {term}", term=term)
    return math.sqrt(value)


def _check_parameters(c: float, w: float, epsilon: float, s: int):
    if not 0.0 < c < 1.0:
        raise DomainError(f"C must lie in (0, 1), got {c}", term="C")
    if not 0.0 <= w <= 1.0:
        raise DomainError(f"w must lie in [0, 1], got {w}", term="w")
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}", term="epsilon")
    if s < 0:
        raise DomainError(f"s must be non-negative, got {s}", term="s")


def _check_union_hypotheses(k: int, s: int, n: int):
    if k > n / 2:
        raise DomainError(f"Needs k <= N/2, got k={k}, N={n}", term="k")
    if s > k:
        raise DomainError(f"Needs s <= k, got s={s}, k={k}", term="s")


def _width_terms(k: int, s: int, n: int, c: float, w: float) -> float:
    log_ratio = _log_ratio(n, k)
    return (math.sqrt(k + s)
            + _sqrt(2.0 * (w * w * k + s) * log_ratio, "(w^2 k + s)") / c)


def rhs_thm3(inputs: BoundInputs) -> float:
    """Condition for a fixed support and estimate with accuracy alpha and size ratio rho."""
    k, s, n = inputs.k, inputs.s, inputs.N
    log_ratio = _log_ratio(n, k)
    radicand = (inputs.w ** 2 - 2.0 * inputs.w * (1.0 - inputs.alpha)) * inputs.rho * k + s
    return (_sqrt(s + inputs.alpha * inputs.rho * k, "(s + alpha rho k)")
            + _sqrt(2.0 * radicand * log_ratio, "((w^2 - 2w(1-alpha)) rho k + s)") / inputs.C
            + WIDTH_CONSTANT * math.sqrt(k / log_ratio)
            + math.sqrt(2.0 * math.log(1.0 / inputs.epsilon)))


def rhs_thm2(k: int, s: int, N: int, C: float, w: float, epsilon: float) -> float:
    """Simplified condition with alpha rho replaced by 1 and the weight term by w^2 k."""
    _check_parameters(C, w, epsilon, s)
    log_ratio = _log_ratio(N, k)
    return (_width_terms(k, s, N, C, w)
            + WIDTH_CONSTANT * math.sqrt(k / log_ratio)
            + math.sqrt(2.0 * math.log(1.0 / epsilon)))


def rhs_cor5(k: int, s: int, N: int, C: float, w: float, epsilon: float) -> float:
    """
    Condition for every support within s errors of a fixed estimate.

    s = 0 needs only m > k (A_T invertible); the returned value is the one
    whose inversion gives m = k + 1.
    """
    _check_parameters(C, w, epsilon, s)
    _check_union_hypotheses(k, s, N)
    if s == 0:
        return (k + 1) / math.sqrt(k + 2)
    log_ratio = _log_ratio(N, k)
    head = (1.0 + WIDTH_CONSTANT / math.sqrt(log_ratio)) * math.sqrt(k + s)
    tail = 2.0 * math.log(1.0 / epsilon) + (s + 1) * _log_ratio(N, s) + k
    return (head
            + _sqrt(2.0 * (w * w * k + s) * log_ratio, "(w^2 k + s)") / C
            + math.sqrt(tail))


def rhs_cor6(k: int, s: int, N: int, C: float, w: float, epsilon: float) -> float:
    """Condition for all supports and estimates at once (uniform weighted NSP)."""
    _check_parameters(C, w, epsilon, s)
    _check_union_hypotheses(k, s, N)
    log_ratio = _log_ratio(N, k)
    head = (1.0 + WIDTH_CONSTANT / math.sqrt(log_ratio)) * math.sqrt(k + s)
    return (head
            + _sqrt(2.0 * (w * w * k + s) * log_ratio, "(w^2 k + s)") / C
            + math.sqrt(2.0 * math.log(1.0 / epsilon) + 2.0 * k * log_ratio))


BOUNDS: Dict[str, Callable[[BoundInputs], float]] = {
    "thm2": lambda i: rhs_thm2(i.k, i.s, i.N, i.C, i.w, i.epsilon),
    "thm3": rhs_thm3,
    "cor5": lambda i: rhs_cor5(i.k, i.s, i.N, i.C, i.w, i.epsilon),
    "cor6": lambda i: rhs_cor6(i.k, i.s, i.N, i.C, i.w, i.epsilon),
}


def evaluate_bound(bound: str, inputs: BoundInputs) -> float:
    try:
        return BOUNDS[bound](inputs)
    except KeyError:
        raise ArgumentError(f"Unknown bound '{bound}', expected one of {sorted(BOUNDS)}") from None


def measurement_ratio(m: int) -> float:
    """m / sqrt(m + 1), the common left-hand side."""
    return m / math.sqrt(m + 1.0)


def invert_ratio(rhs: float) -> int:
    """Smallest integer m >= 1 with m / sqrt(m + 1) >= rhs."""
    if not math.isfinite(rhs):
        raise DomainError(f"Right-hand side {rhs} is not finite", term="rhs")
    lo, hi = 1, max(1, math.ceil(4.0 * (max(rhs, 0.0) + 1.0) ** 2))
    if measurement_ratio(lo) >= rhs:
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if measurement_ratio(mid) >= rhs:
            hi = mid
        else:
            lo = mid
    assert measurement_ratio(hi) >= rhs > measurement_ratio(hi - 1)
    return hi


def min_measurements(bound: str, inputs: BoundInputs) -> int:
    rhs = evaluate_bound(bound, inputs)
    m = invert_ratio(rhs)
    logger.debug(f"{bound}: rhs={rhs:.6g} -> m={m}")
    return m
