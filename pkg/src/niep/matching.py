"""Bottleneck matching of complex multisets."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import CardinalityMismatch


def _has_perfect_matching(allowed: np.ndarray) -> bool:
    cost = (~allowed).astype(float)
    rows, cols = linear_sum_assignment(cost)
    return cost[rows, cols].sum() == 0.0


def bottleneck_match(a, b) -> tuple[float, np.ndarray]:
    """Pair ``a`` with ``b`` minimising the largest pairwise distance.

    Returns the bottleneck distance and ``perm`` with ``a[i]`` paired to
    ``b[perm[i]]``.
    """
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        raise CardinalityMismatch(f"cannot match {a.size} values against {b.size}")
    if a.size == 0:
        return 0.0, np.zeros(0, dtype=int)
    dist = np.abs(a[:, None] - b[None, :])
    levels = np.unique(dist)
    lo, hi = 0, levels.size - 1
    # smallest threshold admitting a perfect matching
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_perfect_matching(dist <= levels[mid]):
            hi = mid
        else:
            lo = mid + 1
    thr = levels[lo]
    # among bottleneck-optimal matchings prefer the least total distance
    cost = np.where(dist <= thr, dist, np.inf)
    cost[np.isinf(cost)] = dist.max() * (a.size + 1) + 1.0
    rows, cols = linear_sum_assignment(cost)
    perm = np.empty(a.size, dtype=int)
    perm[rows] = cols
    return float(thr), perm
