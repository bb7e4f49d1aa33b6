"""Closed-form labelings and strength values for triangular book graphs.

Label vectors follow the canonical edge order of ``make_triangular_book``:
the common edge ab first, then ac_1..ac_n, then bc_1..bc_n. Every division
in the formulas below is exact within its residue class; ``_exact_div``
guards each one so a dispatch bug fails loudly instead of corrupting a
labeling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .labelings import EdgeLabeling, WeightProfile

CASE_TAGS = (
    "n1",
    "n2",
    "n5",
    "mod8r1",
    "mod8r5",
    "mod4r2",
    "mod4r3",
    "infinite",
    "generic-odd",
    "generic-even",
)


@dataclass(frozen=True)
class BookCase:
    """Which construction applies for a page count, per variant (1 or 2)."""

    theorem: int
    tag: str


def classify(theorem: int, n: int) -> BookCase:
    _require_pages(n)
    if theorem == 1:
        if n == 1:
            tag = "n1"
        elif n == 2:
            tag = "n2"
        elif n % 2 == 1:
            tag = "generic-odd"
        else:
            tag = "generic-even"
        return BookCase(1, tag)
    if theorem == 2:
        if n == 1:
            tag = "n1"
        elif n == 5:
            tag = "n5"
        elif n % 4 == 0:
            tag = "infinite"
        elif n % 8 == 1:
            tag = "mod8r1"
        elif n % 8 == 5:
            tag = "mod8r5"
        elif n % 4 == 2:
            tag = "mod4r2"
        else:
            tag = "mod4r3"
        return BookCase(2, tag)
    raise ValueError(f"theorem must be 1 or 2, got {theorem}")


def _require_pages(n: int) -> None:
    if n < 1:
        raise ValueError(f"page count must be >= 1, got {n}")


def _exact_div(value, divisor: int):
    if np.any(np.asarray(value) % divisor):
        raise ArithmeticError(f"inexact division by {divisor} (residue-class dispatch bug)")
    return value // divisor


def irregular_strength(n: int) -> int:
    """Minimum k admitting an irregular assignment of the n-page book."""
    _require_pages(n)
    if n == 1:
        return 3
    return (n + 2) // 2  # ceil((n+1)/2)


def modular_strength(n: int) -> int | float:
    """Minimum k admitting a modular irregular labeling; inf when none exists."""
    _require_pages(n)
    if n == 1:
        return 3
    if n == 5:
        return 4
    if n % 4 == 0:
        return math.inf
    return (n + 2) // 2


# single triangle: weights 3, 4, 5 land on c_1, a, b
_TRIANGLE_LABELS = (3, 1, 2)


def irregular_labeling(n: int) -> EdgeLabeling:
    """Irregular assignment with max label ``irregular_strength(n)``.

    For n >= 2 the page weights are w(c_i) = i + 1 and the two centers get
    the largest weights, with w(a) < w(b).
    """
    _require_pages(n)
    if n == 1:
        return EdgeLabeling(_TRIANGLE_LABELS)
    # page i sits at 0-based index i - 1, so odd i is the 0::2 stride
    i_odd = np.arange(1, n + 1, 2, dtype=np.int64)
    i_even = np.arange(2, n + 1, 2, dtype=np.int64)
    ac = np.empty(n, dtype=np.int64)
    bc = np.empty(n, dtype=np.int64)
    odd_vals = _exact_div(i_odd + 1, 2)
    half_even = _exact_div(i_even, 2)
    ac[0::2] = odd_vals
    ac[1::2] = half_even
    bc[0::2] = odd_vals
    bc[1::2] = half_even + 1
    ab = 2 if n == 2 else 1
    return EdgeLabeling(np.concatenate([[ab], ac, bc]))


def modular_labeling(n: int) -> EdgeLabeling | None:
    """Modular irregular labeling with max label ``modular_strength(n)``.

    Returns None for n divisible by 4 (order 2 mod 4: no such labeling).
    """
    _require_pages(n)
    if n == 1:
        return EdgeLabeling(_TRIANGLE_LABELS)
    if n == 5:
        return EdgeLabeling([1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4])
    r = n % 4
    if r == 0:
        return None
    if r == 1:
        if n % 8 == 1:
            ac, bc = _labels_residue1_mod8(n)
        else:
            ac, bc = _labels_residue5_mod8(n)
        ab = 1
    else:
        ac, bc = _labels_even_odd_split(n)
        ab = _exact_div(n + 6, 4) if r == 2 else 1
    return EdgeLabeling(np.concatenate([[ab], ac, bc]))


def _labels_residue1_mod8(n: int) -> tuple[np.ndarray, np.ndarray]:
    # n = 8t+1, n >= 9; three pieces around the middle page (n+1)/2.
    # Page i sits at 0-based index i - 1.
    half = (n - 1) // 2
    mid = half + 1
    i_high = np.arange(mid + 1, n + 1, dtype=np.int64)
    ac = np.empty(n, dtype=np.int64)
    bc = np.empty(n, dtype=np.int64)
    ac[:half] = 1
    ac[half] = _exact_div(n - 1, 8) + 2
    ac[mid:] = _exact_div(2 * i_high - n + 1, 2)
    bc[:half] = np.arange(1, half + 1, dtype=np.int64)
    bc[half] = _exact_div(3 * n - 3, 8)
    bc[mid:] = _exact_div(n + 1, 2)
    return ac, bc


def _labels_residue5_mod8(n: int) -> tuple[np.ndarray, np.ndarray]:
    # n = 8t+5, n >= 13; four pieces, two special pages after the middle.
    # The b-side tail is the constant (n+1)/2 so w(c_i) = i + 1 holds across
    # the whole range and the max label stays at (n+1)/2.
    half = (n - 1) // 2
    mid2 = half + 2
    i_high = np.arange(mid2 + 1, n + 1, dtype=np.int64)
    ac = np.empty(n, dtype=np.int64)
    bc = np.empty(n, dtype=np.int64)
    ac[:half] = 1
    ac[half] = _exact_div(n + 1, 2)
    ac[half + 1] = _exact_div(n + 35, 8)
    ac[mid2:] = _exact_div(2 * i_high - n + 1, 2)
    bc[:half] = np.arange(1, half + 1, dtype=np.int64)
    bc[half] = 1
    bc[half + 1] = _exact_div(3 * n - 15, 8)
    bc[mid2:] = _exact_div(n + 1, 2)
    return ac, bc


def _labels_even_odd_split(n: int) -> tuple[np.ndarray, np.ndarray]:
    # n = 2 or 3 mod 4; even pages split by i mod 4, odd pages symmetric.
    # Strides: odd i at 0::2, i = 0 mod 4 at 3::4, i = 2 mod 4 at 1::4.
    i_odd = np.arange(1, n + 1, 2, dtype=np.int64)
    i_by4 = np.arange(4, n + 1, 4, dtype=np.int64)
    i_by2 = np.arange(2, n + 1, 4, dtype=np.int64)
    ac = np.empty(n, dtype=np.int64)
    bc = np.empty(n, dtype=np.int64)
    odd_vals = _exact_div(i_odd + 1, 2)
    half4 = _exact_div(i_by4, 2)
    half2 = _exact_div(i_by2, 2)
    ac[0::2] = odd_vals
    ac[3::4] = half4 + 1
    ac[1::4] = half2
    bc[0::2] = odd_vals
    bc[3::4] = half4
    bc[1::4] = half2 + 1
    return ac, bc


def predicted_weights(n: int, theorem: int = 2) -> WeightProfile:
    """Closed-form weight profile for the matching construction.

    Vertex order is a, b, c_1..c_n. Page weights are i + 1 throughout
    (with the n = 1 triangle carrying 4, 5, 3 on a, b, c_1); the center
    weights come from per-residue-class quadratics.
    """
    _require_pages(n)
    if theorem not in (1, 2):
        raise ValueError(f"theorem must be 1 or 2, got {theorem}")
    order = n + 2
    if n == 1:
        weights = np.array([4, 5, 3], dtype=np.int64)
        return _freeze_profile(weights, order)
    if theorem == 1:
        if n == 2:
            wa, wb = 4, 5
        elif n % 2 == 1:
            wa = _exact_div(n * n + 2 * n + 5, 4)
            wb = _exact_div(n * n + 4 * n + 3, 4)
        else:
            wa = _exact_div(n * n + 2 * n + 4, 4)
            wb = _exact_div(n * n + 4 * n + 4, 4)
    else:
        if n == 5:
            wa, wb = 8, 14
        elif n % 4 == 0:
            raise ValueError(f"no modular labeling for n = {n} (divisible by 4)")
        elif n % 8 == 1:
            wa = _exact_div((n + 7) * (n + 2), 8)
            wb = _exact_div(3 * (n - 1) * (n + 2), 8) + 1
        elif n % 8 == 5:
            wa = _exact_div((n + 11) * (n + 2), 8)
            wb = _exact_div((3 * n - 7) * (n + 2), 8) + 1
        elif n % 4 == 2:
            wa = _exact_div((n + 2) * (n + 2), 4)
            wb = wa + 1
        else:
            wa = _exact_div((n + 1) * (n + 2), 4)
            wb = wa + 1
    weights = np.concatenate(
        [np.array([wa, wb], dtype=np.int64), np.arange(2, n + 2, dtype=np.int64)]
    )
    return _freeze_profile(weights, order)


def _freeze_profile(weights: np.ndarray, order: int) -> WeightProfile:
    residues = weights % order
    weights.setflags(write=False)
    residues.setflags(write=False)
    return WeightProfile(weights=weights, residues=residues)
