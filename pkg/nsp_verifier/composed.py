"""Weighted NSP constants derived from standard ones."""

from errors import DomainError


def _check_nonnegative(**values):
    for name, value in values.items():
        if value < 0:
            raise DomainError(f"{name} must be non-negative, got {value}", term=name)


def composed_constant(c_s: float, c_ks: float, weight: float) -> float:
    """
    Weighted constant implied by standard constants C_s and C_{k-s}:

        ((1 + w) C_s C_{k-s} + C_s + w C_{k-s}) / (1 - C_s C_{k-s})
    """
    _check_nonnegative(c_s=c_s, c_ks=c_ks)
    if not 0.0 <= weight <= 1.0:
        raise DomainError(f"Weight must lie in [0, 1], got {weight}", term="w")
    product = c_s * c_ks
    if product >= 1.0:
        raise DomainError(f"C_s * C_(k-s) = {product:.6g} >= 1", term="c_s*c_ks")
    return ((1.0 + weight) * product + c_s + weight * c_ks) / (1.0 - product)


def max_weight_for_recovery(c_s: float, c_ks: float) -> float:
    """Largest w with composed_constant(c_s, c_ks, w) < 1, clamped to [0, 1]."""
    _check_nonnegative(c_s=c_s, c_ks=c_ks)
    if not c_s < 1.0 / (2.0 * c_ks + 1.0):
        raise DomainError(f"C_s = {c_s:.6g} is not below 1/(2 C_(k-s) + 1)", term="c_s")
    if c_ks == 0.0:
        return 1.0
    bound = (1.0 - 2.0 * c_s * c_ks - c_s) / (c_ks * (c_s + 1.0))
    return min(max(bound, 0.0), 1.0)


def standard_implies_weighted(c_k: float, k: int, s: int) -> float:
    """
    Weighted constant guaranteed by a standard constant C_k of order k.

    When s <= k (support estimate at least half accurate) w-NSP(k, s) holds
    with constant C_k for every w in [0, 1], so C_k < 1 means weighted
    recovery succeeds whenever plain l1 recovery does.
    """
    _check_nonnegative(c_k=c_k)
    if s > k:
        raise DomainError(f"Needs s <= k (accuracy >= 1/2), got s={s}, k={k}", term="s")
    return c_k
