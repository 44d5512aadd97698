"""
Component-count formulas.

Upper bounds are the existence results for each protocol family; they are
reported next to the construction's own bound, never asserted. Lower
bounds belong to the hard instances and are checked by the oracle.
"""
import math
from fractions import Fraction


def ceil_log2(k: int) -> int:
    """ceil(log2 k) for k >= 1."""
    return (k - 1).bit_length()


def _clamp(bound: Fraction, k: int) -> int:
    # The formulas can go below k (or negative) for tiny n; k is always needed.
    return max(k, math.floor(bound))


def connected_bound(k: int) -> int:
    """Average fairness, equal entitlements: one interval per family."""
    return k


def average_entitled_bound(k: int) -> int:
    return _clamp(Fraction(ceil_log2(k) * (2 * k - 2) + 1), k)


def choose_bound(n: int, k: int) -> int:
    """Unanimous via exact division and one chooser: (n-1)(k-1)+1."""
    return _clamp(Fraction((n - 1) * (k - 1) + 1), k)


def unanimous_recursive_bound(n: int, k: int) -> int:
    return _clamp(Fraction(ceil_log2(k) * (2 * n - 4) + 1), k)


def unanimous_entitled_bound(n: int, k: int) -> int:
    return _clamp(Fraction(ceil_log2(k) * (2 * n - 2) + 1), k)


def democratic_two_bound() -> int:
    return 2


def democratic_entitled_bound(n: int, k: int) -> int:
    return _clamp(Fraction(ceil_log2(k) * (n - 2) + 1), k)


def democratic_equal_bound(n: int, k: int) -> int:
    """min(2 + ceil(log2 ceil(k/2)) (n-8), 2 + (ceil(k/2)-1)(n/2-2))."""
    half = (k + 1) // 2
    logarithmic = 2 + ceil_log2(half) * (n - 8)
    linear = 2 + (half - 1) * (Fraction(n, 2) - 2)
    return _clamp(min(Fraction(logarithmic), linear), k)


def weighted_gap_lower_bound(k: int) -> int:
    """Average fairness with unequal weights may need 2k-1 components."""
    return 2 * k - 1


def unanimous_lower_bound(n: int) -> int:
    return n


def democratic_lower_bound(n: int, k: int) -> Fraction:
    """n(k/2 - 1)/(k - 1) for k >= 2."""
    return n * (Fraction(k, 2) - 1) / (k - 1)


def positivity_lower_bound(k: int, m: int, q: int) -> Fraction:
    """k(kq - m)/(k - 1) for k >= 2."""
    return Fraction(k * (k * q - m), k - 1)


def positivity_floor(k: int, m: int, q: int) -> int:
    """Integer lower bound: max(k, ceil(k(kq - m)/(k - 1)))."""
    if k == 1:
        return 1
    return max(k, math.ceil(positivity_lower_bound(k, m, q)))
