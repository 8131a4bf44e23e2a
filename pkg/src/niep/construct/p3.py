"""Replacing the Perron root and a complex conjugate pair by four new eigenvalues.

The replacement list is the root set of

    q(x) = (x - rho)((x - alpha)^2 + beta^2)(x - a)
           - t ((x - alpha)((1 + eta) x - alpha - eta rho) + beta^2)

As ``t`` grows two roots approach the roots ``lambda_+-`` of the quadratic
factor multiplying ``t`` (with ``eta = 1``), while the outer two go to
``+-sqrt(2t)``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import PreconditionFailed, RegionViolation
from ..poly import MonicPoly, roots_spectrum
from ..spectra import Spectrum
from ._tol import PRE_TOL
from .perturb import guo_guo_perturb

SQRT2 = math.sqrt(2.0)


def q_poly(rho: float, alpha: float, beta: float, a: float, t: float, eta: float = 1.0) -> MonicPoly:
    f = np.polymul(np.polymul([1.0, -rho], [1.0, -2 * alpha, alpha**2 + beta**2]), [1.0, -a])
    g = np.polymul([1.0, -alpha], [1.0 + eta, -alpha - eta * rho])
    g[-1] += beta**2
    return MonicPoly.from_coeffs(f - t * np.concatenate([[0.0, 0.0], g]))


def p3_replace(rho: float, alpha: float, beta: float, a: float, t: float,
               eta: float = 1.0) -> tuple[MonicPoly, Spectrum]:
    """Expand ``q`` and return it with its four roots, Perron first."""
    if beta <= 0:
        raise PreconditionFailed(f"beta = {beta:.6g} must be positive", "beta")
    if a < 0 or t < 0:
        raise PreconditionFailed("a and t must be nonnegative", "nonneg")
    if not 0 < eta <= 1:
        raise PreconditionFailed(f"eta = {eta:.6g} outside (0, 1]", "eta")
    q = q_poly(rho, alpha, beta, a, t, eta)
    return q, roots_spectrum(q)


class Region(enum.Enum):
    COMPLEX_PAIR = "ComplexPair"
    REAL_MIXED_SIGN = "RealMixedSign"
    REAL_BOTH_NONNEG = "RealBothNonneg"
    REAL_BOTH_NONPOS = "RealBothNonpos"


@dataclass(frozen=True)
class RegionTag:
    region: Region
    holds: dict = field(default_factory=dict)  # ineq name -> bool
    boundary: frozenset = frozenset()  # inequalities holding with equality

    def __str__(self) -> str:
        tight = f" (boundary: {', '.join(sorted(self.boundary))})" if self.boundary else ""
        return self.region.value + tight


def _ineqs(rho: float, alpha: float, beta: float, tol: float):
    """Slack (rhs margin) of each inequality; nonnegative slack means it holds."""
    slack = {
        "ineq1": rho - (alpha + 2 * SQRT2 * beta),
        "ineq3": rho + 3 * alpha,
    }
    scale = {"ineq1": max(1.0, abs(rho), abs(alpha) + 2 * SQRT2 * beta),
             "ineq3": max(1.0, abs(rho), 3 * abs(alpha))}
    if alpha < 0:
        bound = -(alpha**2 + beta**2) / alpha
        slack["ineq2"] = rho - bound
        scale["ineq2"] = max(1.0, abs(rho), abs(bound))
    holds = {}
    boundary = set()
    for name in ("ineq1", "ineq2", "ineq3"):
        if name not in slack:
            holds[name] = False
            continue
        margin = tol * scale[name]
        holds[name] = slack[name] >= -margin
        if abs(slack[name]) <= margin:
            boundary.add(name)
    return holds, frozenset(boundary)


def classify_region(rho: float, alpha: float, beta: float, tol: float = PRE_TOL) -> RegionTag:
    holds, boundary = _ineqs(rho, alpha, beta, tol)
    if not holds["ineq1"]:
        region = Region.COMPLEX_PAIR
    elif holds["ineq2"]:
        region = Region.REAL_MIXED_SIGN
    elif holds["ineq3"]:
        region = Region.REAL_BOTH_NONNEG
    else:
        region = Region.REAL_BOTH_NONPOS
    return RegionTag(region, holds, boundary)


def p3_lambda_limits(rho: float, alpha: float, beta: float,
                     tol: float = PRE_TOL) -> tuple[complex | float, complex | float, RegionTag]:
    """Limits ``lambda_+-`` of the two middle roots, with the sign-pattern classification.

    ``4 lambda_+- = rho + 3 alpha +- sqrt((rho - alpha)^2 - 8 beta^2)``.
    On the boundary of the real region the discriminant is snapped to zero.
    """
    if beta <= 0:
        raise PreconditionFailed(f"beta = {beta:.6g} must be positive", "beta")
    tag = classify_region(rho, alpha, beta, tol)
    disc = (rho - alpha) ** 2 - 8 * beta**2
    if tag.region is not Region.COMPLEX_PAIR:
        if "ineq1" in tag.boundary:
            disc = 0.0
        root = math.sqrt(max(disc, 0.0))
        return (rho + 3 * alpha + root) / 4, (rho + 3 * alpha - root) / 4, tag
    root = cmath.sqrt(disc)
    return (rho + 3 * alpha + root) / 4, (rho + 3 * alpha - root) / 4, tag


def p3_t_for_perron(rho: float, alpha: float, beta: float, a: float, s: float) -> float:
    """Coupling ``t`` that moves the Perron root to ``rho + s`` (``eta = 1``)."""
    if s < 0:
        raise PreconditionFailed(f"s = {s:.6g} is negative", "s-nonneg")
    if a > rho:
        raise PreconditionFailed(f"a = {a:.6g} exceeds rho = {rho:.6g}", "a-le-rho")
    x = rho + s - alpha
    return s * (rho + s - a) * (beta**2 + x**2) / (beta**2 + x * (rho + 2 * s - alpha))


def p3_closed_form(rho: float, alpha: float, beta: float, s: float,
                   tol: float = PRE_TOL) -> Spectrum:
    """``(rho + s, mu_+, mu_-, lambda_+)`` in closed form.

    Obtained by taking ``a = lambda_+`` and ``t`` from :func:`p3_t_for_perron`,
    so that ``q`` factors as ``(x - lambda_+)(x - rho - s)`` times a quadratic.
    Valid when ``ineq2`` holds or both ``ineq1`` and ``ineq3`` hold.
    """
    if s < 0:
        raise PreconditionFailed(f"s = {s:.6g} is negative", "s-nonneg")
    lam_p, lam_m, tag = p3_lambda_limits(rho, alpha, beta, tol)
    h = tag.holds
    if not (h["ineq2"] or (h["ineq1"] and h["ineq3"])):
        raise RegionViolation(f"(rho, alpha, beta) = ({rho:.6g}, {alpha:.6g}, {beta:.6g}) "
                              f"is outside the closed-form region ({tag})")
    terms = (
        s * (s - 2 * alpha) ** 2,
        (s**2 - 4 * s * alpha - 4 * beta**2) * rho,
        (4 * beta**2 + s * (3 * s - 4 * alpha + 4 * rho)) * lam_m,
    )
    den = s + rho - lam_m
    rad = sum(terms) / den
    # cancellation noise around a double root would otherwise leave a spurious 1e-7 imaginary part
    if abs(rad) <= 64 * np.finfo(float).eps * sum(abs(x) for x in terms) / abs(den):
        rad = 0.0
    root = cmath.sqrt(rad)
    mu_p = alpha - s / 2 + root / 2
    mu_m = alpha - s / 2 - root / 2
    return Spectrum([rho + s, mu_p, mu_m, lam_p])


def special_h(s: float) -> float:
    """Radicand of the closed form for ``(rho, alpha, beta) = (6, -2, 2 sqrt 2)``."""
    return 16 + 8 * s + s**2 - 288 / (6 + s)


def find_s_for_imag(b: float, xtol: float = 1e-10) -> float:
    """Bisection for ``s0`` in ``[0, 2]`` with ``special_h(s0) == -4 b^2``.

    ``special_h`` increases on ``[0, 2]`` from ``-32`` to ``0``.
    """
    bmax = 2 * SQRT2
    if not (-PRE_TOL <= b <= bmax + PRE_TOL):
        raise PreconditionFailed(f"b = {b:.6g} outside [0, 2 sqrt 2]", "b-range")
    target = -4 * b * b
    eps = 1e-12 * 32
    if target <= special_h(0.0) + eps:
        return 0.0
    if target >= special_h(2.0) - eps:
        return 2.0
    lo, hi = 0.0, 2.0
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if special_h(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def special_family_list(b: float) -> Spectrum:
    """``(8, -3 + ib, -3 - ib, 0)``: closed form at ``s0`` followed by the pair-decreasing perturbation."""
    s0 = find_s_for_imag(b)
    sigma1 = p3_closed_form(6.0, -2.0, 2 * SQRT2, s0)
    return guo_guo_perturb(sigma1, 1 - s0 / 2, "decrease")
