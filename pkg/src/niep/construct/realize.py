"""Companion-plus-scalar realisation of lists whose non-Perron entries have small real part."""

from __future__ import annotations

import numpy as np

from ..errors import NegativeCoefficient, NotClosed, PreconditionFailed
from ..poly import MonicPoly, from_roots, shifted_companion
from ..spectra import Spectrum, is_conjugate_closed, power_sum
from ._tol import PRE_TOL, leq


def ls_companion(sigma, b1: float = 0.0, tol: float = PRE_TOL) -> tuple[MonicPoly, float]:
    """Return ``(g, gamma)`` with ``G + gamma*I`` realising ``sigma``, ``G`` the companion of ``g``.

    ``gamma = (s1 - b1) / n`` and ``g`` has the shifted list as roots, so its
    first coefficient is ``b1``.  Needs ``0 <= b1 <= s1``,
    ``(n-1) b1^2 <= n s2 - s1^2`` and ``Re(lambda_i) <= gamma`` off the Perron entry.
    """
    sigma = sigma if isinstance(sigma, Spectrum) else Spectrum(sigma)
    if not is_conjugate_closed(sigma, tol):
        raise NotClosed("spectrum is not closed under conjugation")
    n = len(sigma)
    s1 = power_sum(sigma, 1, tol)
    s2 = power_sum(sigma, 2, tol)
    if not leq(0.0, b1, tol):
        raise PreconditionFailed(f"b1={b1:.6g} is negative", "b1-nonneg")
    if not leq(b1, s1, tol):
        raise PreconditionFailed(f"b1={b1:.6g} exceeds s1={s1:.6g}", "b1-le-s1")
    gap = n * s2 - s1**2
    if not leq((n - 1) * b1**2, gap, tol):
        raise PreconditionFailed(
            f"(n-1) b1^2 = {(n - 1) * b1**2:.6g} exceeds n s2 - s1^2 = {gap:.6g}", "jll-b1")
    gamma = (s1 - b1) / n
    for i, lam in enumerate(sigma):
        if i != sigma.perron_index and not leq(lam.real, gamma, tol):
            raise PreconditionFailed(
                f"Re(lambda_{i + 1}) = {lam.real:.6g} exceeds (s1 - b1)/n = {gamma:.6g}", "real-part")
    g = from_roots([lam - gamma for lam in sigma], tol)
    b = np.array(g.b)
    b[0] = b1
    scale = max(1.0, float(np.max(np.abs(b))))
    for i, bi in enumerate(b):
        if bi < -tol * scale:
            raise NegativeCoefficient(f"companion coefficient b{i + 1} = {bi:.6g} is negative",
                                      f"b{i + 1}")
    # roundoff-level negatives would otherwise leave -1e-17 entries in the matrix
    b[b < 0] = 0.0
    return MonicPoly(b), gamma


def ls_realize(sigma, b1: float = 0.0, tol: float = PRE_TOL) -> np.ndarray:
    g, gamma = ls_companion(sigma, b1, tol)
    return shifted_companion(g, gamma)
